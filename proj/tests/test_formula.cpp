#include <doctest.h>

#include <random>

#include "satkit/formula.hpp"
#include "support.hpp"

using namespace satkit;

namespace {

// (a | ~b)(~a | b)(~a | ~b)(a | ~c), a,b,c = 1,2,3
const char* kExample31 = "p cnf 3 4\n1 -2 0\n-1 2 0\n-1 -2 0\n1 -3 0\n";

CnfFormula example33() { return {2, {clause({1, 2}), clause({1, -2}), clause({-1, 2}), clause({-1, -2})}}; }

}  // namespace

TEST_CASE("literal basics") {
    Literal x = Literal::pos(3);
    CHECK(x.var() == 3);
    CHECK(x.positive());
    CHECK((~x).negative());
    CHECK(~~x == x);
    CHECK(Literal::from_dimacs(-4) == Literal::neg(4));
    CHECK_THROWS_AS(Literal::from_dimacs(0), InvalidInput);
    CHECK(Literal::pos(1) < Literal::neg(1));
    CHECK(Literal::neg(1) < Literal::pos(2));
}

TEST_CASE("canonicalize drops duplicates and spots tautologies") {
    auto c = canonicalize(clause({2, 1, 2}));
    CHECK(c.literals == clause({1, 2}));
    CHECK_FALSE(c.tautology);
    CHECK(canonicalize(clause({1, -1})).tautology);
}

TEST_CASE("parse_dimacs reads the four-clause 2-CNF example") {
    auto f = parse_dimacs(kExample31);
    CHECK(f.num_vars == 3);
    REQUIRE(f.clauses.size() == 4);
    CHECK(f.clauses[0] == clause({1, -2}));
    CHECK(f.clauses[3] == clause({1, -3}));
    CHECK(max_clause_width(f) == 2);
}

TEST_CASE("parse_dimacs accepts comments, multi-line clauses and empty formulas") {
    auto f = parse_dimacs("c hello\np cnf 1 0\n");
    CHECK(f.num_vars == 1);
    CHECK(f.clauses.empty());

    auto g = parse_dimacs("c x\np cnf 3 2\n1 2\n 3 0 -1\n0\n");
    REQUIRE(g.clauses.size() == 2);
    CHECK(g.clauses[0] == clause({1, 2, 3}));
    CHECK(g.clauses[1] == clause({-1}));

    auto dup = parse_dimacs("p cnf 2 1\n1 1 -2 0\n");
    CHECK(dup.clauses[0] == clause({1, 1, -2}));

    auto empty_clause = parse_dimacs("p cnf 1 1\n0\n");
    REQUIRE(empty_clause.clauses.size() == 1);
    CHECK(empty_clause.clauses[0].empty());
}

TEST_CASE("parse_dimacs errors are distinct and carry line numbers") {
    auto kind_of = [](const char* text) -> std::optional<std::pair<DimacsErrorKind, std::size_t>> {
        try {
            parse_dimacs(text);
        } catch (const DimacsError& e) {
            return std::make_pair(e.kind(), e.line());
        }
        return std::nullopt;
    };
    auto out_of_range = kind_of("p cnf 2 1\n1 3 0");
    REQUIRE(out_of_range);
    CHECK(out_of_range->first == DimacsErrorKind::VariableOutOfRange);
    CHECK(out_of_range->second == 2);

    auto header = kind_of("c\np cnf two 1\n1 0\n");
    REQUIRE(header);
    CHECK(header->first == DimacsErrorKind::MalformedHeader);
    CHECK(header->second == 2);

    auto missing_zero = kind_of("p cnf 2 1\n1 2\n");
    REQUIRE(missing_zero);
    CHECK(missing_zero->first == DimacsErrorKind::MissingTerminator);
    CHECK(missing_zero->second == 2);

    auto count = kind_of("p cnf 2 2\n1 2 0\n");
    REQUIRE(count);
    CHECK(count->first == DimacsErrorKind::ClauseCountMismatch);

    auto no_header = kind_of("1 2 0\n");
    REQUIRE(no_header);
    CHECK(no_header->first == DimacsErrorKind::MissingHeader);

    auto token = kind_of("p cnf 2 1\n1 b 0\n");
    REQUIRE(token);
    CHECK(token->first == DimacsErrorKind::BadToken);

    try {
        parse_dimacs("p cnf 2 1\n1 3 0");
        FAIL("expected an error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 2") == 0);
    }
}

TEST_CASE("write_dimacs exact text") {
    CHECK(write_dimacs(CnfFormula{}) == "p cnf 0 0\n");
    CHECK(write_dimacs(CnfFormula{1, {clause({1})}}) == "p cnf 1 1\n1 0\n");
    CHECK(write_dimacs(parse_dimacs(kExample31)) == kExample31);
}

TEST_CASE("DIMACS round trip on random formulas") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 1 + trial % 9;
        auto f = testing::random_cnf(rng, n, trial % 7, 0, 5);
        auto g = parse_dimacs(write_dimacs(f));
        CHECK(g == f);
        CHECK(same_clause_set(f, g));
    }
}

TEST_CASE("DNF text format") {
    auto d = parse_dimacs_dnf("p dnf 2 2\n1 -1 0\n2 0\n");
    REQUIRE(d.terms.size() == 2);
    CHECK(write_dimacs_dnf(d) == "p dnf 2 2\n1 -1 0\n2 0\n");
    CHECK_THROWS_AS(parse_dimacs_dnf("p cnf 2 1\n1 0\n"), DimacsError);
}

TEST_CASE("evaluate") {
    Assignment a;
    a.set(1, true);
    a.set(2, true);
    a.set(3, false);
    CnfFormula units{3, {clause({1}), clause({2}), clause({-3})}};
    CHECK(evaluate(units, a) == Truth::True);

    CnfFormula with_empty{1, {Clause{}}};
    CHECK(evaluate(with_empty, Assignment::filled(1, true)) == Truth::False);
    CHECK(evaluate(with_empty, Assignment{}) == Truth::False);

    CHECK(evaluate(parse_dimacs(kExample31), Assignment::filled(3, false)) == Truth::True);
    CHECK(evaluate(CnfFormula{}, Assignment{}) == Truth::True);

    Assignment partial;
    partial.set(1, false);
    CHECK(evaluate(CnfFormula{2, {clause({1, 2})}}, partial) == Truth::Undetermined);
}

TEST_CASE("count_satisfied") {
    auto f = example33();
    CHECK(count_satisfied(f, Assignment::filled(2, true)) == 3);
    CHECK(count_satisfied(f, Assignment::filled(2, false)) == 3);
    CHECK(count_satisfied(CnfFormula{2, {}}, Assignment::filled(2, true)) == 0);
    Assignment partial;
    partial.set(1, true);
    CHECK_THROWS_AS(count_satisfied(f, partial), InvalidInput);
}

TEST_CASE("evaluate_dnf") {
    DnfFormula contradiction{1, {clause({1, -1})}};
    CHECK_FALSE(evaluate_dnf(contradiction, Assignment::filled(1, true)));
    CHECK_FALSE(evaluate_dnf(contradiction, Assignment::filled(1, false)));
    CHECK(evaluate_dnf(DnfFormula{2, {clause({1, 2})}}, Assignment::filled(2, true)));
    CHECK(evaluate_dnf(DnfFormula{2, {clause({1, -1}), clause({2})}}, Assignment::from_bits({false, true})));
    CHECK_THROWS_AS(evaluate_dnf(contradiction, Assignment{}), InvalidInput);
}

TEST_CASE("is_horn and max_clause_width") {
    CHECK(is_horn(CnfFormula{3, {clause({-1, -2, 3})}}));
    CHECK_FALSE(is_horn(CnfFormula{2, {clause({1, 2})}}));
    CHECK(is_horn(CnfFormula{}));
    CHECK(max_clause_width(CnfFormula{}) == 0);
    CHECK(max_clause_width(CnfFormula{4, {clause({1}), clause({1, 2, 3, 4})}}) == 4);
}

TEST_CASE("evaluate is monotone under extension") {
    std::mt19937 rng(11);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 2000; ++trial) {
        auto f = testing::random_cnf(rng, 5, 4, 0, 3);
        Assignment partial;
        for (int v = 1; v <= 5; ++v)
            if (coin(rng)) partial.set(v, coin(rng));
        const Truth before = evaluate(f, partial);
        Assignment full = partial;
        for (int v = 1; v <= 5; ++v)
            if (!full.has(v)) full.set(v, coin(rng));
        const Truth after = evaluate(f, full);
        CHECK(after != Truth::Undetermined);
        if (before != Truth::Undetermined) CHECK(after == before);
        CHECK((count_satisfied(f, full) == static_cast<int>(f.clauses.size())) == (after == Truth::True));
    }
}

TEST_CASE("De Morgan duality through negate") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        auto f = testing::random_cnf(rng, 3, 3, 1, 3);
        auto d = negate(f);
        for (int bits = 0; bits < 8; ++bits) {
            auto a = Assignment::from_bits({bool(bits & 1), bool(bits & 2), bool(bits & 4)});
            CHECK(evaluate_dnf(d, a) == (evaluate(f, a) != Truth::True));
        }
    }
}
