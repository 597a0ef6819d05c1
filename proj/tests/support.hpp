#pragma once

// Test-only oracles and generators. Everything here is written independently
// of the library's search code so that it can serve as ground truth.

#include <cstdint>
#include <deque>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "satkit/formula.hpp"
#include "satkit/graph.hpp"
#include "satkit/turing.hpp"

namespace satkit::testing {

/// Plain 2^n enumeration in lexicographic order (variable 1 most significant,
/// false before true). Returns the first model.
inline std::optional<Assignment> naive_first_model(const CnfFormula& f) {
    const int n = f.num_vars;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
        std::vector<bool> bits(n);
        for (int v = 1; v <= n; ++v) bits[v - 1] = (code >> (n - v)) & 1;
        bool all = true;
        for (const auto& c : f.clauses) {
            bool sat = false;
            for (Literal l : c) sat = sat || (bits[l.var() - 1] == l.positive());
            if (!sat) {
                all = false;
                break;
            }
        }
        if (all) return Assignment::from_bits(bits);
    }
    return std::nullopt;
}

inline bool naive_sat(const CnfFormula& f) { return naive_first_model(f).has_value(); }

inline int naive_max_sat(const CnfFormula& f) {
    const int n = f.num_vars;
    int best = 0;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
        int count = 0;
        for (const auto& c : f.clauses) {
            bool sat = false;
            for (Literal l : c) sat = sat || (((code >> (l.var() - 1)) & 1) == (l.positive() ? 1u : 0u));
            count += sat;
        }
        best = std::max(best, count);
    }
    return best;
}

/// Random clause over variables 1..n of the given width (duplicates allowed).
inline Clause random_clause(std::mt19937& rng, int n, int width) {
    std::uniform_int_distribution<int> var(1, n);
    std::bernoulli_distribution neg(0.5);
    Clause c;
    for (int i = 0; i < width; ++i) c.push_back(Literal(var(rng), neg(rng)));
    return c;
}

inline CnfFormula random_cnf(std::mt19937& rng, int n, int clauses, int min_width, int max_width) {
    std::uniform_int_distribution<int> width(min_width, max_width);
    CnfFormula f{n, {}};
    for (int j = 0; j < clauses; ++j) f.clauses.push_back(random_clause(rng, n, width(rng)));
    return f;
}

inline CnfFormula random_3cnf(std::mt19937& rng, int n, int k) { return random_cnf(rng, n, k, 3, 3); }

/// Reachability closure by repeated squaring-free Floyd-Warshall.
inline std::vector<std::vector<bool>> reachability(const Digraph& g) {
    const std::size_t n = g.size();
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t u = 0; u < n; ++u) {
        r[u][u] = true;
        for (std::size_t v : g.neighbors(u)) r[u][v] = true;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (r[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (r[k][j]) r[i][j] = true;
    return r;
}

/// Does some branch reach the accept state within `depth` steps? Breadth-first
/// over configurations, using only `step`.
inline bool bfs_accepts(const tm::MachineSpec& m, const tm::Word& input, std::size_t depth) {
    std::vector<tm::Configuration> frontier{tm::initial_configuration(m, input)};
    for (std::size_t d = 0;; ++d) {
        std::vector<tm::Configuration> next;
        for (const auto& c : frontier) {
            if (c.state == m.accept) return true;
            if (m.halting(c.state) || d == depth) continue;
            const auto n = m.options(c.state, c.read(m.blank)).size();
            for (std::size_t k = 0; k < n; ++k) next.push_back(tm::step(m, c, k));
        }
        if (next.empty()) return false;
        frontier = std::move(next);
    }
}

/// All words over `alphabet` of length 0..max_len, shortest first.
inline std::vector<tm::Word> all_words(const std::vector<tm::Symbol>& alphabet, std::size_t max_len) {
    std::vector<tm::Word> out{{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (const auto& s : alphabet) {
                tm::Word w = out[i];
                w.push_back(s);
                out.push_back(std::move(w));
            }
        }
        begin = end;
    }
    return out;
}

/// Minimal structural DOT checker: header, balanced body, statement shapes.
inline bool dot_is_well_formed(const std::string& text, bool directed) {
    const std::string header = directed ? "digraph " : "graph ";
    if (text.rfind(header, 0) != 0) return false;
    const auto open = text.find('{');
    const auto close = text.rfind('}');
    if (open == std::string::npos || close == std::string::npos || close < open) return false;
    const std::string edge_op = directed ? "->" : "--";
    const std::string wrong_op = directed ? "--" : "->";

    std::string body = text.substr(open + 1, close - open - 1);
    std::size_t pos = 0;
    while (pos < body.size()) {
        auto end = body.find('\n', pos);
        if (end == std::string::npos) end = body.size();
        std::string line = body.substr(pos, end - pos);
        pos = end + 1;
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        line = line.substr(first);
        if (line.back() != ';') return false;
        // walk quoted ids, an optional edge operator, optional [attrs]
        std::size_t i = 0;
        int ids = 0;
        bool saw_op = false;
        while (i < line.size() - 1) {
            if (line[i] == '"') {
                auto q = i + 1;
                while (q < line.size() && line[q] != '"') q += line[q] == '\\' ? 2 : 1;
                if (q >= line.size()) return false;
                ++ids;
                i = q + 1;
            } else if (line.compare(i, 2, edge_op) == 0) {
                if (saw_op || ids != 1) return false;
                saw_op = true;
                i += 2;
            } else if (line.compare(i, 2, wrong_op) == 0) {
                return false;
            } else if (line[i] == '[') {
                auto q = line.find(']', i);
                if (q == std::string::npos) return false;
                i = q + 1;
            } else if (line[i] == ' ') {
                ++i;
            } else if (ids == 0) {
                // graph-level attribute statements such as rankdir=LR;
                auto eq = line.find('=');
                if (eq == std::string::npos) return false;
                break;
            } else {
                return false;
            }
        }
        if (ids != (saw_op ? 2 : 1) && ids != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Small machines for the tableau encoding tests.

inline tm::MachineSpec machine_skeleton(std::vector<std::string> states, std::vector<tm::Symbol> sigma) {
    tm::MachineSpec m;
    m.states = std::move(states);
    m.states.push_back("accept");
    m.states.push_back("reject");
    m.input_alphabet = sigma;
    m.tape_alphabet = std::move(sigma);
    m.tape_alphabet.push_back("_");
    m.start = m.states.front();
    m.accept = "accept";
    m.reject = "reject";
    return m;
}

/// Accepts on reading 1, rejects on 0.
inline tm::MachineSpec one_step_acceptor() {
    auto m = machine_skeleton({"q0"}, {"0", "1"});
    m.add("q0", "1", "accept", "1", tm::Move::R);
    m.add("q0", "0", "reject", "0", tm::Move::R);
    return m;
}

/// The three-state invert/keep machine over {a,b}, made into an acceptor:
/// q1 on a blank accepts and q2 on a blank turns back in q3.
inline tm::MachineSpec example_delta_acceptor() {
    auto m = machine_skeleton({"q1", "q2", "q3"}, {"a", "b"});
    using tm::Move;
    m.add("q1", "a", "q2", "b", Move::R);
    m.add("q1", "b", "q2", "a", Move::R);
    m.add("q2", "a", "q3", "a", Move::L);
    m.add("q2", "b", "q3", "b", Move::L);
    m.add("q3", "a", "q1", "a", Move::R);
    m.add("q3", "a", "q3", "b", Move::L);
    m.add("q3", "b", "q1", "b", Move::R);
    m.add("q3", "b", "q3", "a", Move::L);
    m.add("q1", "_", "accept", "_", Move::R);
    m.add("q2", "_", "q3", "_", Move::L);
    return m;
}

/// Deterministic: the last input symbol is b.
inline tm::MachineSpec ends_in_b() {
    auto m = machine_skeleton({"scan", "back"}, {"a", "b"});
    m.add("scan", "a", "scan", "a", tm::Move::R);
    m.add("scan", "b", "scan", "b", tm::Move::R);
    m.add("scan", "_", "back", "_", tm::Move::L);
    m.add("back", "b", "accept", "b", tm::Move::R);
    return m;
}

/// Nondeterministic: guesses a cell holding b.
inline tm::MachineSpec contains_b() {
    auto m = machine_skeleton({"q0"}, {"a", "b"});
    m.add("q0", "a", "q0", "a", tm::Move::R);
    m.add("q0", "b", "q0", "b", tm::Move::R);
    m.add("q0", "b", "accept", "b", tm::Move::R);
    return m;
}

/// Deterministic: scans right for a b, rejects at the first blank.
inline tm::MachineSpec scan_for_b() {
    auto m = machine_skeleton({"q0"}, {"a", "b"});
    m.add("q0", "a", "q0", "a", tm::Move::R);
    m.add("q0", "b", "accept", "b", tm::Move::R);
    return m;
}

/// Deterministic: inverts the first cell, steps left (staying on cell 0)
/// and accepts if it now reads b.
inline tm::MachineSpec flip_first() {
    auto m = machine_skeleton({"q0", "q1"}, {"a", "b"});
    m.add("q0", "a", "q1", "b", tm::Move::L);
    m.add("q0", "b", "q1", "a", tm::Move::L);
    m.add("q1", "b", "accept", "b", tm::Move::R);
    return m;
}

/// Nondeterministic: rewrites the first cell to either symbol, steps back
/// left (staying on cell 0) and accepts if it now reads b.
inline tm::MachineSpec rewrite_then_check() {
    auto m = machine_skeleton({"w", "c"}, {"a", "b"});
    for (const char* s : {"a", "b", "_"}) {
        m.add("w", s, "c", "a", tm::Move::L);
        m.add("w", s, "c", "b", tm::Move::L);
    }
    m.add("c", "b", "accept", "b", tm::Move::R);
    return m;
}

/// Never halts.
inline tm::MachineSpec looper() {
    auto m = machine_skeleton({"q0"}, {"a"});
    m.add("q0", "a", "q0", "a", tm::Move::R);
    m.add("q0", "_", "q0", "_", tm::Move::L);
    return m;
}

/// Machines whose runs never leave the visible tableau before halting, for
/// p >= |input| + 3.
inline std::vector<std::pair<std::string, tm::MachineSpec>> tableau_battery() {
    return {
        {"one_step_acceptor", one_step_acceptor()}, {"example_delta", example_delta_acceptor()},
        {"scan_for_b", scan_for_b()},               {"contains_b", contains_b()},
        {"flip_first", flip_first()},               {"rewrite_then_check", rewrite_then_check()},
        {"looper", looper()},
    };
}

}  // namespace satkit::testing
