#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "satkit/formula.hpp"
#include "satkit/graph.hpp"
#include "satkit/reductions.hpp"

// JSON documents exchanged by the command line tool.
//
//   assignment  {"vars": {"1": true, "2": false}}
//   instance    {"kind": "clique"|"hamcycle"|"3color", "formula": {...},
//                "vertices": [...], "edges": [[u, v], ...], index maps}
//   witnesses   {"clique": [labels]}, {"cycle": [labels]},
//               {"coloring": {label: colour}}

namespace satkit::io {

std::string assignment_to_json(const Assignment& a);
/// Throws ParseError on malformed documents.
Assignment assignment_from_json(std::string_view text);

/// `v 1 -2 3 0` style line listing a witness in DIMACS literals.
std::string assignment_to_vline(const Assignment& a);

using Instance = std::variant<CliqueInstance, HamCycleInstance, ColoringInstance>;

std::string kind_of(const Instance& inst);
const CnfFormula& formula_of(const Instance& inst);

std::string instance_to_json(const Instance& inst);

/// Rebuilds the instance from its stored formula and checks that the stored
/// vertices and edges match the rebuilt graph. Throws ParseError otherwise.
Instance instance_from_json(std::string_view text);

std::string clique_witness_to_json(const std::vector<std::string>& clique);
std::string cycle_witness_to_json(const std::vector<std::string>& cycle);
std::string coloring_witness_to_json(const Coloring& c);

std::vector<std::string> clique_witness_from_json(std::string_view text);
std::vector<std::string> cycle_witness_from_json(std::string_view text);
Coloring coloring_witness_from_json(std::string_view text);

}  // namespace satkit::io
