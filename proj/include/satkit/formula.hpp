#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satkit/errors.hpp"

namespace satkit {

/// A propositional variable or its negation, stored in DIMACS form
/// (variable index with the sign as polarity).
class Literal {
public:
    constexpr Literal() = default;
    constexpr Literal(int var, bool negative) : code_(negative ? -var : var) {}

    /// Builds a literal from a signed DIMACS integer; 0 is not a literal.
    static Literal from_dimacs(int value);
    static constexpr Literal pos(int var) { return Literal(var, false); }
    static constexpr Literal neg(int var) { return Literal(var, true); }

    constexpr int var() const { return code_ < 0 ? -code_ : code_; }
    constexpr bool negative() const { return code_ < 0; }
    constexpr bool positive() const { return code_ > 0; }
    constexpr int dimacs() const { return code_; }

    constexpr Literal operator~() const { return Literal::raw(-code_); }

    friend constexpr bool operator==(Literal, Literal) = default;
    friend constexpr auto operator<=>(Literal a, Literal b) {
        // variable-major, positive before negative
        if (a.var() != b.var()) return a.var() <=> b.var();
        return a.negative() <=> b.negative();
    }

private:
    static constexpr Literal raw(int code) {
        Literal l;
        l.code_ = code;
        return l;
    }
    int code_ = 0;
};

/// Disjunction (in a CNF) or conjunction (in a DNF) of literals. May be empty.
using Clause = std::vector<Literal>;

/// Builds a clause from signed DIMACS integers, e.g. `clause({1, -2})`.
Clause clause(std::initializer_list<int> dimacs);

/// Sorts a clause, drops duplicate literals and reports whether it contains
/// both polarities of some variable.
struct CanonicalClause {
    Clause literals;
    bool tautology = false;
};
CanonicalClause canonicalize(const Clause& c);

struct CnfFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;

    /// Throws InvalidInput if a literal refers to a variable outside 1..num_vars.
    void validate() const;

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Disjunction of conjunctive terms.
struct DnfFormula {
    int num_vars = 0;
    std::vector<Clause> terms;

    void validate() const;

    friend bool operator==(const DnfFormula&, const DnfFormula&) = default;
};

/// Partial or total map from variables to truth values.
class Assignment {
public:
    Assignment() = default;
    /// A total assignment of `value` to variables 1..num_vars.
    static Assignment filled(int num_vars, bool value);
    /// Total assignment from a bit vector, bits[i] is variable i+1.
    static Assignment from_bits(const std::vector<bool>& bits);

    void set(int var, bool value);
    void unset(int var);
    std::optional<bool> get(int var) const;
    bool has(int var) const { return get(var).has_value(); }

    /// Value of a literal under this assignment, if its variable is assigned.
    std::optional<bool> value(Literal l) const;

    /// True iff every variable in 1..num_vars is assigned.
    bool total_over(int num_vars) const;
    /// Largest variable index that carries a value (0 when empty).
    int max_var() const;
    std::size_t size() const;
    bool empty() const { return size() == 0; }

    /// Copy keeping only variables 1..num_vars.
    Assignment restricted(int num_vars) const;

    /// Assigned (variable, value) pairs in increasing variable order.
    std::vector<std::pair<int, bool>> entries() const;

    friend bool operator==(const Assignment& a, const Assignment& b);

private:
    // index = variable; -1 unassigned, 0 false, 1 true
    std::vector<std::int8_t> values_;
};

enum class Truth { False, True, Undetermined };

Truth evaluate_clause(const Clause& c, const Assignment& a);
Truth evaluate(const CnfFormula& f, const Assignment& a);

/// Number of clauses satisfied by a total assignment.
int count_satisfied(const CnfFormula& f, const Assignment& a);

/// DNF value under a total assignment.
bool evaluate_dnf(const DnfFormula& f, const Assignment& a);

bool is_horn(const CnfFormula& f);
std::size_t max_clause_width(const CnfFormula& f);

/// Clause-set form used for structural equality: each clause canonicalized,
/// clause list sorted and deduplicated.
std::vector<Clause> clause_set(const CnfFormula& f);
bool same_clause_set(const CnfFormula& a, const CnfFormula& b);

/// CNF negation by De Morgan: every clause becomes a term of negated literals.
DnfFormula negate(const CnfFormula& f);

// ---------------------------------------------------------------------------
// DIMACS I/O

enum class DimacsErrorKind {
    MalformedHeader,
    MissingHeader,
    VariableOutOfRange,
    MissingTerminator,
    ClauseCountMismatch,
    BadToken,
};

class DimacsError : public ParseError {
public:
    DimacsError(DimacsErrorKind kind, std::size_t line, const std::string& what)
        : ParseError(line, what), kind_(kind) {}
    DimacsErrorKind kind() const noexcept { return kind_; }

private:
    DimacsErrorKind kind_;
};

/// Parses `p cnf <vars> <clauses>` text. Literal order and duplicates are
/// preserved exactly as written.
CnfFormula parse_dimacs(std::string_view text);
std::string write_dimacs(const CnfFormula& f);

/// Same grammar with a `p dnf <vars> <terms>` header; each line is a term.
DnfFormula parse_dimacs_dnf(std::string_view text);
std::string write_dimacs_dnf(const DnfFormula& f);

std::string to_string(Literal l);
std::string to_string(const Clause& c, std::string_view sep = " | ");

}  // namespace satkit
