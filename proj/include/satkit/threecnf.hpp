#pragma once

#include <vector>

#include "satkit/formula.hpp"

namespace satkit {

struct ThreeCnfResult {
    CnfFormula formula;
    /// fresh_vars[i] lists the auxiliary variables introduced for input clause i.
    std::vector<std::vector<int>> fresh_vars;
    int original_num_vars = 0;
};

/// Rewrites every clause into clauses of at most three literals:
///
///   (a)            -> (a|z1|z2) (a|~z1|z2) (a|z1|~z2) (a|~z1|~z2)
///   (a1|a2)        -> (a1|a2|z) (a1|a2|~z)
///   (a1|a2|a3)     -> unchanged
///   (a1|...|am)    -> (a1|a2|z1) (~z1|a3|z2) ... (~z_{m-3}|a_{m-1}|am)
///
/// The long-clause chain has m-2 clauses over m-3 fresh variables. Fresh
/// variables are numbered upward from num_vars+1 in clause order. Throws
/// InvalidInput if the input contains the empty clause, which has no
/// satisfiable rewriting.
ThreeCnfResult to_3cnf(const CnfFormula& f);

/// Restricts a model of the rewritten formula to the original variables.
/// Throws InvalidInput if `a3` does not satisfy `r.formula`.
Assignment project_witness(const ThreeCnfResult& r, const Assignment& a3);

}  // namespace satkit
