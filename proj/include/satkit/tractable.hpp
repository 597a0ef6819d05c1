#pragma once

#include "satkit/formula.hpp"
#include "satkit/graph.hpp"
#include "satkit/oracle.hpp"

namespace satkit {

/// Digraph over the 2n literals of a formula. Vertex 2(v-1) is x_v and
/// vertex 2(v-1)+1 is its negation; labels are "x<v>" and "~x<v>".
struct ImplicationGraph {
    int num_vars = 0;
    Digraph graph;

    static std::size_t vertex(Literal l) {
        return 2 * static_cast<std::size_t>(l.var() - 1) + (l.negative() ? 1 : 0);
    }
};

/// Each 2-clause (x | y) contributes ~x -> y and ~y -> x. A unit clause (x)
/// is read as (x | x) and contributes ~x -> x. Tautologies (x | ~x) add
/// nothing. Throws InvalidInput for clauses wider than 2 or for the empty
/// clause.
ImplicationGraph build_implication_graph(const CnfFormula& f);

/// Implication-graph 2-SAT. A variable is false iff its positive literal's
/// component precedes its negation's in topological order.
SatResult solve_2sat(const CnfFormula& f);

struct UpResult {
    CnfFormula reduced;
    Assignment forced;

    bool has_empty_clause() const;
};

/// Unit propagation to fixpoint, always taking the first unit clause in
/// the current clause order.
UpResult unit_propagate(const CnfFormula& f);

/// Horn satisfiability: unsatisfiable iff propagation derives the empty
/// clause. The witness is the forced literals with every other variable
/// false.
SatResult solve_horn(const CnfFormula& f);

/// Satisfiable iff some term mentions no variable in both polarities. The
/// witness makes the first such term true and every other variable false.
SatResult solve_dnf(const DnfFormula& f);

}  // namespace satkit
