#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "satkit/cooklevin.hpp"
#include "satkit/formula.hpp"
#include "satkit/io.hpp"
#include "satkit/oracle.hpp"
#include "satkit/reductions.hpp"
#include "satkit/threecnf.hpp"
#include "satkit/tractable.hpp"
#include "satkit/turing.hpp"

namespace py = pybind11;
using namespace satkit;

namespace {

// Python side: a formula is (num_vars, [[dimacs literals]]), an assignment is
// {var: bool}.

using PyClauses = std::vector<std::vector<int>>;

CnfFormula to_cnf(int num_vars, const PyClauses& clauses) {
    CnfFormula f{num_vars, {}};
    for (const auto& c : clauses) {
        Clause clause;
        for (int l : c) clause.push_back(Literal::from_dimacs(l));
        f.clauses.push_back(std::move(clause));
    }
    f.validate();
    return f;
}

PyClauses from_cnf(const CnfFormula& f) {
    PyClauses out;
    for (const auto& c : f.clauses) {
        std::vector<int> lits;
        for (Literal l : c) lits.push_back(l.dimacs());
        out.push_back(std::move(lits));
    }
    return out;
}

std::map<int, bool> to_dict(const Assignment& a) {
    std::map<int, bool> out;
    for (auto [v, value] : a.entries()) out[v] = value;
    return out;
}

Assignment from_dict(const std::map<int, bool>& d) {
    Assignment a;
    for (auto [v, value] : d) a.set(v, value);
    return a;
}

py::object sat_result(const SatResult& r) {
    if (!r.satisfiable()) return py::none();
    return py::cast(to_dict(*r.witness));
}

template <bool D>
py::dict graph_dict(const BasicGraph<D>& g) {
    py::dict d;
    d["vertices"] = g.labels();
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(g.label(u), g.label(v));
    d["edges"] = edges;
    d["directed"] = D;
    return d;
}

}  // namespace

PYBIND11_MODULE(_satkit, m) {
    m.doc() = "SAT fragments, reductions and Turing machine tools";

    py::register_exception<BudgetExceeded>(m, "BudgetExceeded");
    py::register_exception<ParseError>(m, "ParseError");
    py::register_exception<InvalidInput>(m, "InvalidInput");

    m.def("parse_dimacs", [](const std::string& text) {
        auto f = parse_dimacs(text);
        return py::make_tuple(f.num_vars, from_cnf(f));
    });
    m.def("write_dimacs", [](int n, const PyClauses& c) { return write_dimacs(to_cnf(n, c)); });
    m.def("evaluate", [](int n, const PyClauses& c, const std::map<int, bool>& a) -> py::object {
        switch (evaluate(to_cnf(n, c), from_dict(a))) {
            case Truth::True: return py::bool_(true);
            case Truth::False: return py::bool_(false);
            default: return py::none();
        }
    }, "True, False, or None when undetermined");

    m.def("brute_force_sat", [](int n, const PyClauses& c, int max_vars) {
        return sat_result(brute_force_sat(to_cnf(n, c), max_vars));
    }, py::arg("num_vars"), py::arg("clauses"), py::arg("max_vars") = oracle::kDefaultVarBudget,
       "First model in lexicographic order, or None");
    m.def("solve_2sat", [](int n, const PyClauses& c) { return sat_result(solve_2sat(to_cnf(n, c))); });
    m.def("solve_horn", [](int n, const PyClauses& c) { return sat_result(solve_horn(to_cnf(n, c))); });
    m.def("solve_dnf", [](int n, const PyClauses& terms) {
        return sat_result(solve_dnf(DnfFormula{n, to_cnf(n, terms).clauses}));
    });
    m.def("max_sat_optimum", [](int n, const PyClauses& c) {
        auto r = max_sat_optimum(to_cnf(n, c));
        return py::make_tuple(r.optimum, to_dict(r.witness));
    });
    m.def("max_sat_decide", [](int n, const PyClauses& c, int k) { return max_sat_decide(to_cnf(n, c), k); });

    m.def("to_3cnf", [](int n, const PyClauses& c) {
        auto r = to_3cnf(to_cnf(n, c));
        return py::make_tuple(r.formula.num_vars, from_cnf(r.formula));
    });

    m.def("reduce_to_clique", [](int n, const PyClauses& c) {
        auto inst = reduce_to_clique(to_cnf(n, c));
        auto d = graph_dict(inst.graph);
        d["k"] = inst.k;
        return d;
    });
    m.def("reduce_to_hamcycle", [](int n, const PyClauses& c, bool strict) {
        auto inst = reduce_to_hamcycle(to_cnf(n, c), HamCycleOptions{strict});
        return graph_dict(inst.graph);
    }, py::arg("num_vars"), py::arg("clauses"), py::arg("strict") = true);
    m.def("reduce_to_3color", [](int n, const PyClauses& c) {
        return graph_dict(reduce_to_3color(to_cnf(n, c)).graph);
    });
    m.def("clique_to_assignment", [](int n, const PyClauses& c, const std::vector<std::string>& clique) {
        auto inst = reduce_to_clique(to_cnf(n, c));
        return to_dict(clique_witness_to_assignment(inst, clique));
    });
    m.def("find_clique_witness", [](int n, const PyClauses& c) -> py::object {
        auto inst = reduce_to_clique(to_cnf(n, c));
        auto found = find_clique(inst.graph, inst.k);
        if (!found) return py::none();
        return py::cast(*found);
    });

    m.def("equality_checker", [] { return tm::write_machine(tm::build_equality_checker()); },
          "Machine description text of the s#s equality checker");
    m.def("run_machine", [](const std::string& machine, const std::string& input, std::size_t limit) {
        auto spec = tm::parse_machine(machine);
        auto r = tm::run_dtm(spec, tm::split_word(input), limit);
        return py::make_tuple(std::string(tm::to_string(r.verdict)), r.steps_used);
    }, py::arg("machine"), py::arg("input"), py::arg("limit") = 10000);
    m.def("run_ntm", [](const std::string& machine, const std::string& input, std::size_t depth) {
        auto spec = tm::parse_machine(machine);
        auto r = tm::run_ntm(spec, tm::split_word(input), depth);
        py::object choices = r.choices ? py::cast(*r.choices) : py::none();
        return py::make_tuple(std::string(tm::to_string(r.outcome.verdict)), r.outcome.steps_used, choices);
    });

    m.def("cooklevin_encode", [](const std::string& machine, const std::string& input, int p) {
        auto spec = tm::parse_machine(machine);
        auto enc = cooklevin::encode(spec, tm::split_word(input), p);
        return py::make_tuple(enc.formula.num_vars, from_cnf(enc.formula));
    });
}
