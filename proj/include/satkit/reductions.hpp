#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "satkit/formula.hpp"
#include "satkit/graph.hpp"

// Reductions from 3-CNF formulas to CLIQUE, HAM-CYCLE and 3-COLOR instances,
// plus the maps needed to carry witnesses back to assignments.
//
// Clauses shorter than three literals are padded by repeating their last
// literal before any construction; clauses wider than three are rejected.
//
// Vertex labels use ':' separated fields:
//   clique    v:<var>:<clause>:<+|->:<slot>
//   hamcycle  p:<var>:<position>, C:<clause>, s, t (strict mode adds
//             d:<var>:<0..k> and hubs h:<var>)
//   3color    T, F, B, x:<var>, nx:<var>, g:<clause>:<1..6>
// The typed index members are authoritative; labels exist for output.

namespace satkit {

/// Pads every clause to exactly three literals. Throws InvalidInput for the
/// empty clause or clauses with more than three literals.
CnfFormula pad_to_three(const CnfFormula& f);

// ---------------------------------------------------------------------------
// CLIQUE

struct CliqueVertex {
    int var = 0;
    int clause = 0;  // 1-based
    bool positive = true;
    int slot = 0;  // 1..3, position inside the clause

    Literal literal() const { return Literal(var, !positive); }
};

struct CliqueInstance {
    CnfFormula formula;  // padded source
    Graph graph;
    int k = 0;
    std::map<std::string, CliqueVertex> vertex_index;
};

/// One vertex per literal occurrence; two occurrences are adjacent iff they
/// sit in different clauses and are not complementary literals of the same
/// variable. Throws InvalidInput on a formula without clauses.
CliqueInstance reduce_to_clique(const CnfFormula& f);

/// Reads a k-clique as an assignment: each member literal is made true,
/// unconstrained variables default to false.
Assignment clique_witness_to_assignment(const CliqueInstance& inst,
                                        const std::vector<std::string>& clique);

/// Picks the first true literal occurrence of every clause.
std::vector<std::string> assignment_to_clique(const CliqueInstance& inst, const Assignment& a);

// ---------------------------------------------------------------------------
// HAM-CYCLE

struct HamCycleOptions {
    /// Insert one separator vertex between consecutive clause position pairs,
    /// one buffer vertex at each end of every variable path, and route the
    /// links between consecutive paths through a single hub vertex.
    bool strict_separators = false;
};

struct HamCycleInstance {
    CnfFormula formula;  // padded source
    Digraph graph;
    int n = 0;
    int k = 0;
    bool strict = false;
    /// paths[i-1] lists variable i's path vertices left to right.
    std::vector<std::vector<std::size_t>> paths;
    /// position[i-1][p-1] is the vertex at clause position p (1..2k).
    std::vector<std::vector<std::size_t>> position;
    std::vector<std::size_t> clause_vertices;  // [j-1] -> C:j
    std::vector<std::size_t> hubs;             // strict mode: [i-1] -> h:i
    std::size_t s = 0;
    std::size_t t = 0;

    /// 2nk + k + 2, plus n(k+1) separators and buffers and n-1 hubs in
    /// strict mode.
    std::size_t expected_size() const;
};

/// Variable paths of 2k positions traversed left-to-right for true and
/// right-to-left for false. Both ends of each path feed both ends of the
/// next; s feeds path 1 and path n feeds t, with t -> s closing the cycle.
/// Clause vertex C_j hangs off positions 2j-1 and 2j of each of its
/// variables, oriented left-to-right for positive literals and
/// right-to-left for negative ones. Needs n >= 1 and k >= 1.
HamCycleInstance reduce_to_hamcycle(const CnfFormula& f, HamCycleOptions options = {});

/// Reads each variable's traversal direction off a Hamiltonian cycle.
/// Throws InvalidInput if the cycle is not Hamiltonian or visits some
/// variable path out of order ("non-canonical cycle").
Assignment hamcycle_witness_to_assignment(const HamCycleInstance& inst,
                                          const std::vector<std::string>& cycle);

/// Builds the canonical cycle for a satisfying assignment: each path in its
/// truth direction, detouring through every clause vertex the first time
/// one of its true literals offers the detour.
std::vector<std::string> assignment_to_hamcycle(const HamCycleInstance& inst, const Assignment& a);

// ---------------------------------------------------------------------------
// 3-COLOR

struct ColoringInstance {
    CnfFormula formula;  // padded source
    Graph graph;
    std::size_t T = 0, F = 0, B = 0;
    std::vector<std::size_t> positive_literal;  // [v-1] -> x:v
    std::vector<std::size_t> negative_literal;  // [v-1] -> nx:v
    std::vector<std::array<std::size_t, 6>> gadgets;  // [j-1] -> g:j:1..6

    std::size_t literal_vertex(Literal l) const {
        return l.negative() ? negative_literal.at(l.var() - 1) : positive_literal.at(l.var() - 1);
    }
    /// 2n + 3 + 6k.
    std::size_t expected_size() const;
};

/// Triangle T/F/B, a triangle (x_i, ~x_i, B) per variable and a six-vertex
/// gadget per clause. Needs n >= 1.
ColoringInstance reduce_to_3color(const CnfFormula& f);

/// x_i is true iff its vertex shares T's colour.
Assignment coloring_witness_to_assignment(const ColoringInstance& inst, const Coloring& c);

/// Colours the instance from a satisfying assignment (colours T=1, F=2, B=3).
Coloring assignment_to_coloring(const ColoringInstance& inst, const Assignment& a);

// ---------------------------------------------------------------------------

std::map<std::string, std::string> dot_styling(const CliqueInstance& inst);
std::map<std::string, std::string> dot_styling(const HamCycleInstance& inst);
std::map<std::string, std::string> dot_styling(const ColoringInstance& inst);

}  // namespace satkit
