#include "satkit/oracle.hpp"

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace satkit {

namespace oracle {

int budget_from_env(int fallback) {
    const char* raw = std::getenv("SATKIT_BUDGET_VARS");
    if (!raw || !*raw) return fallback;
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (*end != '\0' || v < 0 || v > 1'000'000) return fallback;
    return static_cast<int>(v);
}

}  // namespace oracle

namespace {

void check_budget(const CnfFormula& f, int max_vars) {
    if (f.num_vars > max_vars) {
        throw BudgetExceeded("formula has " + std::to_string(f.num_vars) +
                             " variables, exhaustive search is limited to " +
                             std::to_string(max_vars));
    }
}

}  // namespace

SatResult brute_force_sat(const CnfFormula& f, int max_vars) {
    check_budget(f, max_vars);
    f.validate();
    const int n = f.num_vars;

    // A clause can only become false once its highest variable is fixed.
    std::vector<std::vector<const Clause*>> by_last(static_cast<std::size_t>(n) + 1);
    for (const auto& c : f.clauses) {
        if (c.empty()) return SatResult{SatStatus::Unsatisfiable, std::nullopt};
        int last = 0;
        for (Literal l : c) last = std::max(last, l.var());
        by_last[last].push_back(&c);
    }

    std::vector<std::int8_t> value(static_cast<std::size_t>(n) + 1, -1);
    auto falsified = [&](int v) {
        for (const Clause* c : by_last[v]) {
            bool any_true = false;
            for (Literal l : *c) {
                bool x = value[l.var()] == 1;
                if (x != l.negative()) {
                    any_true = true;
                    break;
                }
            }
            if (!any_true) return true;
        }
        return false;
    };

    if (n == 0) return SatResult{SatStatus::Satisfiable, Assignment{}};

    int v = 1;
    value[1] = 0;
    for (;;) {
        if (!falsified(v)) {
            if (v == n) break;
            ++v;
            value[v] = 0;
            continue;
        }
        // next assignment in lexicographic order at or above depth v
        while (v >= 1 && value[v] == 1) {
            value[v] = -1;
            --v;
        }
        if (v == 0) return SatResult{SatStatus::Unsatisfiable, std::nullopt};
        value[v] = 1;
    }

    Assignment witness;
    for (int x = 1; x <= n; ++x) witness.set(x, value[x] == 1);
    return SatResult{SatStatus::Satisfiable, std::move(witness)};
}

bool equisatisfiable(const CnfFormula& a, const CnfFormula& b, int max_vars) {
    check_budget(a, max_vars);
    check_budget(b, max_vars);
    return brute_force_sat(a, max_vars).status == brute_force_sat(b, max_vars).status;
}

namespace {

constexpr int kMaxSatWordBits = 62;

// Bit (n - v) holds variable v, so counting upwards walks assignments in
// lexicographic order with variable 1 most significant.
struct MaskedClause {
    std::uint64_t pos = 0;
    std::uint64_t neg = 0;
};

std::vector<MaskedClause> mask_clauses(const CnfFormula& f) {
    std::vector<MaskedClause> out;
    out.reserve(f.clauses.size());
    for (const auto& c : f.clauses) {
        MaskedClause m;
        for (Literal l : c) {
            std::uint64_t bit = std::uint64_t{1} << (f.num_vars - l.var());
            (l.negative() ? m.neg : m.pos) |= bit;
        }
        out.push_back(m);
    }
    return out;
}

template <typename Visit>
void enumerate_counts(const CnfFormula& f, int max_vars, Visit&& visit) {
    check_budget(f, max_vars);
    f.validate();
    if (f.num_vars > kMaxSatWordBits) {
        throw BudgetExceeded("MAX-SAT enumeration supports at most " +
                             std::to_string(kMaxSatWordBits) + " variables");
    }
    const auto masks = mask_clauses(f);
    const std::uint64_t all = f.num_vars == 0 ? 0 : (~std::uint64_t{0} >> (64 - f.num_vars));
    for (std::uint64_t bits = 0;; ++bits) {
        int count = 0;
        for (const auto& m : masks) {
            if ((bits & m.pos) | (~bits & m.neg)) ++count;
        }
        if (!visit(bits, count)) return;
        if (bits == all) return;
    }
}

Assignment assignment_from_word(std::uint64_t bits, int n) {
    Assignment a;
    for (int v = 1; v <= n; ++v) a.set(v, (bits >> (n - v)) & 1U);
    return a;
}

}  // namespace

bool max_sat_decide(const CnfFormula& f, int k, int max_vars) {
    if (k < 0) throw InvalidInput("k must be non-negative");
    if (k == 0) {
        check_budget(f, max_vars);
        return true;
    }
    if (k > static_cast<int>(f.clauses.size())) {
        check_budget(f, max_vars);
        return false;
    }
    bool found = false;
    enumerate_counts(f, max_vars, [&](std::uint64_t, int count) {
        found = count >= k;
        return !found;
    });
    return found;
}

MaxSatResult max_sat_optimum(const CnfFormula& f, int max_vars) {
    int best = -1;
    std::uint64_t best_bits = 0;
    const int total = static_cast<int>(f.clauses.size());
    enumerate_counts(f, max_vars, [&](std::uint64_t bits, int count) {
        if (count > best) {
            best = count;
            best_bits = bits;
        }
        return best < total;
    });
    return MaxSatResult{best, assignment_from_word(best_bits, f.num_vars)};
}

}  // namespace satkit
