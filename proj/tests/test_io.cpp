#include <doctest.h>
#include <json.hpp>

#include <random>

#include "satkit/io.hpp"
#include "satkit/oracle.hpp"
#include "support.hpp"

using namespace satkit;

namespace {

CnfFormula psi() { return {3, {clause({1, 2, 3}), clause({1, -2, 3}), clause({-1, 2, -3})}}; }

}  // namespace

TEST_CASE("assignment documents") {
    auto a = Assignment::from_bits({true, false, true});
    auto text = io::assignment_to_json(a);
    CHECK(nlohmann::json::parse(text) == nlohmann::json::parse(R"({"vars":{"1":true,"2":false,"3":true}})"));
    CHECK(io::assignment_from_json(text) == a);
    CHECK(io::assignment_to_vline(a) == "v 1 -2 3 0");
    CHECK(io::assignment_to_vline(Assignment{}) == "v 0");

    CHECK_THROWS_AS(io::assignment_from_json("{"), ParseError);
    CHECK_THROWS_AS(io::assignment_from_json(R"({"vars":{"x":true}})"), ParseError);
    CHECK_THROWS_AS(io::assignment_from_json(R"({"vars":{"1":3}})"), ParseError);
    CHECK_THROWS_AS(io::assignment_from_json(R"({"vars":{"0":true}})"), ParseError);
    CHECK_THROWS_AS(io::assignment_from_json(R"([1,2])"), ParseError);
}

TEST_CASE("instance documents round trip") {
    for (const io::Instance& inst : {io::Instance{reduce_to_clique(psi())}, io::Instance{reduce_to_hamcycle(psi())},
                                     io::Instance{reduce_to_hamcycle(psi(), {true})},
                                     io::Instance{reduce_to_3color(psi())}}) {
        auto text = io::instance_to_json(inst);
        auto back = io::instance_from_json(text);
        CHECK(io::kind_of(back) == io::kind_of(inst));
        CHECK(io::formula_of(back) == io::formula_of(inst));
        CHECK(io::instance_to_json(back) == text);
    }
    auto j = nlohmann::json::parse(io::instance_to_json(reduce_to_clique(psi())));
    CHECK(j["kind"] == "clique");
    CHECK(j["vertices"].size() == 9);
    CHECK(j["k"] == 3);
}

TEST_CASE("tampered instances are refused") {
    auto j = nlohmann::json::parse(io::instance_to_json(reduce_to_3color(psi())));
    j["edges"].erase(0);
    CHECK_THROWS_AS(io::instance_from_json(j.dump()), ParseError);

    auto k = nlohmann::json::parse(io::instance_to_json(reduce_to_clique(psi())));
    k["kind"] = "vertexcover";
    CHECK_THROWS_AS(io::instance_from_json(k.dump()), ParseError);
    CHECK_THROWS_AS(io::instance_from_json("not json"), ParseError);
}

TEST_CASE("witness documents round trip") {
    std::vector<std::string> clique{"v:1:1:+:1", "v:1:2:+:1", "v:2:3:+:2"};
    CHECK(io::clique_witness_from_json(io::clique_witness_to_json(clique)) == clique);

    auto h = reduce_to_hamcycle(psi());
    auto cycle = assignment_to_hamcycle(h, *brute_force_sat(psi()).witness);
    CHECK(io::cycle_witness_from_json(io::cycle_witness_to_json(cycle)) == cycle);

    auto c = reduce_to_3color(psi());
    auto coloring = assignment_to_coloring(c, *brute_force_sat(psi()).witness);
    CHECK(io::coloring_witness_from_json(io::coloring_witness_to_json(coloring)) == coloring);

    CHECK_THROWS_AS(io::clique_witness_from_json(R"({"cycle":[]})"), ParseError);
    CHECK_THROWS_AS(io::coloring_witness_from_json(R"({"coloring":{"T":"red"}})"), ParseError);
}

TEST_CASE("DIMACS round trip on random formulas") {
    std::mt19937 rng(97);
    for (int trial = 0; trial < 1000; ++trial) {
        auto f = testing::random_cnf(rng, 1 + trial % 6, trial % 8, 1, 4);
        CHECK(parse_dimacs(write_dimacs(f)) == f);
        DnfFormula d{f.num_vars, f.clauses};
        auto back = parse_dimacs_dnf(write_dimacs_dnf(d));
        CHECK(back.num_vars == d.num_vars);
        CHECK(back.terms == d.terms);
    }
}
