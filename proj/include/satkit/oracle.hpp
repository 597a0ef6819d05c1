#pragma once

#include <optional>

#include "satkit/formula.hpp"

namespace satkit {

/// Ground-truth searches over the full assignment space. Every other solver
/// in the library is measured against these.
namespace oracle {

inline constexpr int kDefaultVarBudget = 24;

/// Reads SATKIT_BUDGET_VARS, falling back to `fallback` when unset or invalid.
int budget_from_env(int fallback = kDefaultVarBudget);

}  // namespace oracle

enum class SatStatus { Satisfiable, Unsatisfiable };

struct SatResult {
    SatStatus status = SatStatus::Unsatisfiable;
    std::optional<Assignment> witness;  // present iff satisfiable

    bool satisfiable() const { return status == SatStatus::Satisfiable; }
};

/// Exhaustive satisfiability check.
///
/// Assignments are visited in lexicographic order (variable 1 most
/// significant, false before true). A subtree is skipped only once a clause
/// whose variables are all fixed is already false, so the result and the
/// witness are exactly those of plain 2^n enumeration: the witness is the
/// lexicographically first model. Throws BudgetExceeded if
/// `f.num_vars > max_vars`.
SatResult brute_force_sat(const CnfFormula& f, int max_vars = oracle::kDefaultVarBudget);

/// Both formulas satisfiable, or both unsatisfiable.
bool equisatisfiable(const CnfFormula& a, const CnfFormula& b,
                     int max_vars = oracle::kDefaultVarBudget);

/// Is there a total assignment satisfying at least k clauses?
bool max_sat_decide(const CnfFormula& f, int k, int max_vars = oracle::kDefaultVarBudget);

struct MaxSatResult {
    int optimum = 0;
    Assignment witness;  // lexicographically first assignment reaching the optimum
};

MaxSatResult max_sat_optimum(const CnfFormula& f, int max_vars = oracle::kDefaultVarBudget);

}  // namespace satkit
