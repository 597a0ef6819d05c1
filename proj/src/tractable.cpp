#include "satkit/tractable.hpp"

#include <algorithm>

namespace satkit {

ImplicationGraph build_implication_graph(const CnfFormula& f) {
    f.validate();
    ImplicationGraph ig;
    ig.num_vars = f.num_vars;
    for (int v = 1; v <= f.num_vars; ++v) {
        ig.graph.add_vertex("x" + std::to_string(v));
        ig.graph.add_vertex("~x" + std::to_string(v));
    }
    for (const auto& c : f.clauses) {
        if (c.empty()) throw InvalidInput("empty clause: formula is unsatisfiable");
        if (c.size() > 2) {
            throw InvalidInput("clause " + to_string(c) + " has more than two literals");
        }
        Literal x = c[0];
        Literal y = c.size() == 2 ? c[1] : c[0];
        if (x == ~y) continue;
        ig.graph.add_edge(ImplicationGraph::vertex(~x), ImplicationGraph::vertex(y));
        ig.graph.add_edge(ImplicationGraph::vertex(~y), ImplicationGraph::vertex(x));
    }
    return ig;
}

SatResult solve_2sat(const CnfFormula& f) {
    if (max_clause_width(f) > 2) throw InvalidInput("2-SAT solver needs clauses of width <= 2");
    if (std::any_of(f.clauses.begin(), f.clauses.end(), [](const Clause& c) { return c.empty(); })) {
        return SatResult{SatStatus::Unsatisfiable, std::nullopt};
    }
    const auto ig = build_implication_graph(f);
    const auto scc = strongly_connected_components(ig.graph);

    Assignment a;
    for (int v = 1; v <= f.num_vars; ++v) {
        std::size_t pos = scc.comp[ImplicationGraph::vertex(Literal::pos(v))];
        std::size_t neg = scc.comp[ImplicationGraph::vertex(Literal::neg(v))];
        if (pos == neg) return SatResult{SatStatus::Unsatisfiable, std::nullopt};
        a.set(v, !(pos < neg));
    }
    return SatResult{SatStatus::Satisfiable, std::move(a)};
}

bool UpResult::has_empty_clause() const {
    return std::any_of(reduced.clauses.begin(), reduced.clauses.end(),
                       [](const Clause& c) { return c.empty(); });
}

namespace {

// A clause is unit when all of its literal occurrences are the same literal.
std::optional<Literal> unit_literal(const Clause& c) {
    if (c.empty()) return std::nullopt;
    for (Literal l : c) {
        if (l != c.front()) return std::nullopt;
    }
    return c.front();
}

}  // namespace

UpResult unit_propagate(const CnfFormula& f) {
    UpResult out{f, {}};
    auto& clauses = out.reduced.clauses;
    for (;;) {
        std::optional<Literal> unit;
        for (const auto& c : clauses) {
            if ((unit = unit_literal(c))) break;
        }
        if (!unit) break;
        const Literal x = *unit;
        out.forced.set(x.var(), x.positive());

        std::vector<Clause> next;
        next.reserve(clauses.size());
        for (auto& c : clauses) {
            if (std::find(c.begin(), c.end(), x) != c.end()) continue;
            c.erase(std::remove(c.begin(), c.end(), ~x), c.end());
            next.push_back(std::move(c));
        }
        clauses = std::move(next);
    }
    return out;
}

SatResult solve_horn(const CnfFormula& f) {
    if (!is_horn(f)) throw InvalidInput("formula is not Horn");
    auto up = unit_propagate(f);
    if (up.has_empty_clause()) return SatResult{SatStatus::Unsatisfiable, std::nullopt};
    Assignment a = up.forced;
    for (int v = 1; v <= f.num_vars; ++v) {
        if (!a.has(v)) a.set(v, false);
    }
    return SatResult{SatStatus::Satisfiable, std::move(a)};
}

SatResult solve_dnf(const DnfFormula& f) {
    f.validate();
    for (const auto& term : f.terms) {
        if (canonicalize(term).tautology) continue;  // contains x and ~x
        Assignment a = Assignment::filled(f.num_vars, false);
        for (Literal l : term) a.set(l.var(), l.positive());
        return SatResult{SatStatus::Satisfiable, std::move(a)};
    }
    return SatResult{SatStatus::Unsatisfiable, std::nullopt};
}

}  // namespace satkit
