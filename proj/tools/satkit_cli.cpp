// satkit command line tool.
//
// Exit codes: 0 yes/success, 1 no, 2 usage or parse error, 3 budget or
// step limit exceeded.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "satkit/cooklevin.hpp"
#include "satkit/formula.hpp"
#include "satkit/io.hpp"
#include "satkit/oracle.hpp"
#include "satkit/reductions.hpp"
#include "satkit/threecnf.hpp"
#include "satkit/tractable.hpp"
#include "satkit/turing.hpp"

namespace {

using namespace satkit;

enum Exit { kYes = 0, kNo = 1, kUsage = 2, kBudget = 3 };

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void dump(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write '" + path + "'");
    out << text;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int report_sat(const SatResult& r, const std::string& witness_path) {
    if (!r.satisfiable()) {
        std::cout << "UNSAT\n";
        return kNo;
    }
    std::cout << "SAT\n" << io::assignment_to_vline(*r.witness) << "\n";
    if (!witness_path.empty()) dump(witness_path, io::assignment_to_json(*r.witness));
    return kYes;
}

struct Options {
    std::string method;
    std::string file;
    std::string file2;
    std::string witness;
    std::string out;
    std::string dot;
    std::string json;
    std::string map;
    std::string kind;
    std::string input;
    int k = -1;
    int p = 0;
    std::size_t limit = 10000;
    std::size_t depth = 0;
    bool trace = false;
    bool faithful = false;
    bool solve = false;
};

int cmd_solve(const Options& o) {
    const int budget = oracle::budget_from_env();
    std::string method = o.method;
    const std::string text = slurp(o.file);
    if (method.empty() && ends_with(o.file, ".dnf")) method = "dnf";
    if (method == "dnf") return report_sat(solve_dnf(parse_dimacs_dnf(text)), o.witness);

    const CnfFormula f = parse_dimacs(text);
    if (method.empty()) {
        if (max_clause_width(f) <= 2) {
            method = "2sat";
        } else if (is_horn(f)) {
            method = "horn";
        } else {
            method = "brute";
        }
    }
    if (method == "2sat") return report_sat(solve_2sat(f), o.witness);
    if (method == "horn") return report_sat(solve_horn(f), o.witness);
    return report_sat(brute_force_sat(f, budget), o.witness);
}

int cmd_maxsat(const Options& o) {
    const int budget = oracle::budget_from_env();
    const CnfFormula f = parse_dimacs(slurp(o.file));
    if (o.k < 0) {
        auto r = max_sat_optimum(f, budget);
        std::cout << "OPTIMUM " << r.optimum << "\n" << io::assignment_to_vline(r.witness) << "\n";
        if (!o.witness.empty()) dump(o.witness, io::assignment_to_json(r.witness));
        return kYes;
    }
    const bool yes = max_sat_decide(f, o.k, budget);
    std::cout << (yes ? "YES" : "NO") << "\n";
    return yes ? kYes : kNo;
}

int cmd_to3cnf(const Options& o) {
    const auto r = to_3cnf(parse_dimacs(slurp(o.file)));
    const std::string text = write_dimacs(r.formula);
    if (o.out.empty()) {
        std::cout << text;
    } else {
        dump(o.out, text);
        std::cout << "variables " << r.formula.num_vars << " clauses " << r.formula.clauses.size() << "\n";
    }
    return kYes;
}

int cmd_reduce(const Options& o) {
    const CnfFormula f = parse_dimacs(slurp(o.file));
    io::Instance inst = [&]() -> io::Instance {
        if (o.kind == "clique") return reduce_to_clique(f);
        if (o.kind == "hamcycle") return reduce_to_hamcycle(f, HamCycleOptions{!o.faithful});
        return reduce_to_3color(f);
    }();
    std::visit(
        [&](const auto& i) {
            std::cout << o.kind << " vertices " << i.graph.size() << " edges " << i.graph.num_edges() << "\n";
            if (!o.dot.empty()) dump(o.dot, to_dot(i.graph, dot_styling(i)));
        },
        inst);
    if (!o.json.empty()) dump(o.json, io::instance_to_json(inst));
    return kYes;
}

int cmd_verify(const Options& o) {
    bool ok = false;
    if (o.kind == "assignment") {
        const std::string text = slurp(o.file);
        const CnfFormula f =
            ends_with(o.file, ".cnf") ? parse_dimacs(text) : io::formula_of(io::instance_from_json(text));
        const Assignment a = io::assignment_from_json(slurp(o.file2));
        ok = evaluate(f, a) == Truth::True;
    } else {
        const io::Instance inst = io::instance_from_json(slurp(o.file));
        const std::string witness = slurp(o.file2);
        if (io::kind_of(inst) != o.kind) {
            throw InvalidInput("instance is of kind '" + io::kind_of(inst) + "', not '" + o.kind + "'");
        }
        if (const auto* c = std::get_if<CliqueInstance>(&inst)) {
            ok = verify_clique(c->graph, io::clique_witness_from_json(witness), c->k);
        } else if (const auto* h = std::get_if<HamCycleInstance>(&inst)) {
            ok = verify_hamiltonian_cycle(h->graph, io::cycle_witness_from_json(witness));
        } else {
            ok = verify_coloring(std::get<ColoringInstance>(inst).graph, io::coloring_witness_from_json(witness), 3);
        }
    }
    std::cout << (ok ? "YES" : "NO") << "\n";
    return ok ? kYes : kNo;
}

int cmd_translate(const Options& o) {
    const io::Instance inst = io::instance_from_json(slurp(o.file));
    const std::string witness = slurp(o.file2);
    Assignment a;
    if (const auto* c = std::get_if<CliqueInstance>(&inst)) {
        a = clique_witness_to_assignment(*c, io::clique_witness_from_json(witness));
    } else if (const auto* h = std::get_if<HamCycleInstance>(&inst)) {
        a = hamcycle_witness_to_assignment(*h, io::cycle_witness_from_json(witness));
    } else {
        a = coloring_witness_to_assignment(std::get<ColoringInstance>(inst), io::coloring_witness_from_json(witness));
    }
    const bool ok = evaluate(io::formula_of(inst), a) == Truth::True;
    std::cout << (ok ? "SAT" : "UNSAT") << "\n" << io::assignment_to_vline(a) << "\n";
    if (!o.out.empty()) dump(o.out, io::assignment_to_json(a));
    return ok ? kYes : kNo;
}

int verdict_exit(tm::Verdict v) {
    switch (v) {
        case tm::Verdict::Accept: return kYes;
        case tm::Verdict::Reject: return kNo;
        default: return kBudget;
    }
}

std::string upper(std::string_view s) {
    std::string out(s);
    for (auto& ch : out) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    return out;
}

int cmd_tm_run(const Options& o) {
    const auto m = tm::parse_machine(slurp(o.file));
    std::vector<tm::Configuration> trace;
    const auto r = tm::run_dtm(m, tm::split_word(o.input), o.limit, o.trace ? &trace : nullptr);
    for (const auto& c : trace) std::cout << tm::format_configuration(c, m.blank) << "\n";
    std::cout << upper(tm::to_string(r.verdict)) << "\n" << "steps " << r.steps_used << "\n";
    return verdict_exit(r.verdict);
}

int cmd_tm_ntm(const Options& o) {
    const auto m = tm::parse_machine(slurp(o.file));
    const auto r = tm::run_ntm(m, tm::split_word(o.input), o.depth);
    std::cout << upper(tm::to_string(r.outcome.verdict)) << "\n" << "steps " << r.outcome.steps_used << "\n";
    if (r.choices) {
        std::cout << "choices";
        for (int c : *r.choices) std::cout << ' ' << c;
        std::cout << "\n";
    }
    return verdict_exit(r.outcome.verdict);
}

int cmd_cooklevin(const Options& o) {
    const auto m = tm::parse_machine(slurp(o.file));
    const auto enc = cooklevin::encode(m, tm::split_word(o.input), o.p);
    std::cout << "variables " << enc.formula.num_vars << " clauses " << enc.formula.clauses.size() << "\n";
    if (!o.out.empty()) dump(o.out, write_dimacs(enc.formula));
    if (!o.map.empty()) dump(o.map, cooklevin::sidecar_json(enc.spec));
    if (!o.solve) return kYes;

    const int budget = std::max(oracle::budget_from_env(), enc.formula.num_vars);
    const auto r = brute_force_sat(enc.formula, budget);
    if (!r.satisfiable()) {
        std::cout << "UNSAT\n";
        return kNo;
    }
    std::cout << "SAT\n";
    for (const auto& row : cooklevin::decode_tableau(enc.spec, *r.witness)) {
        for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? " " : "") << row[j];
        std::cout << "\n";
    }
    return kYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Satisfiability fragments, reductions and Turing machine tools"};
    app.require_subcommand(1);
    Options o;

    auto* solve = app.add_subcommand("solve", "decide a CNF or DNF formula");
    solve->add_option("--method", o.method, "solver")->check(CLI::IsMember({"2sat", "horn", "dnf", "brute"}));
    solve->add_option("file", o.file, "DIMACS file")->required();
    solve->add_option("--witness", o.witness, "write the witness as JSON");

    auto* maxsat = app.add_subcommand("maxsat", "MAX-SAT decision or optimum");
    maxsat->add_option("--k", o.k, "clause threshold")->check(CLI::NonNegativeNumber);
    maxsat->add_option("file", o.file, "DIMACS file")->required();
    maxsat->add_option("--witness", o.witness, "write the optimum witness as JSON");

    auto* to3 = app.add_subcommand("to3cnf", "rewrite into clauses of width <= 3");
    to3->add_option("file", o.file, "DIMACS file")->required();
    to3->add_option("--out", o.out, "output DIMACS file");

    auto* reduce = app.add_subcommand("reduce", "reduce a 3-CNF formula to a graph problem");
    reduce->add_option("kind", o.kind)->required()->check(CLI::IsMember({"clique", "hamcycle", "3color"}));
    reduce->add_option("file", o.file, "DIMACS file")->required();
    reduce->add_option("--dot", o.dot, "write Graphviz DOT");
    reduce->add_option("--json", o.json, "write the instance as JSON");
    reduce->add_flag("--faithful", o.faithful, "hamcycle: omit the separator, buffer and hub vertices");

    auto* verify = app.add_subcommand("verify", "check a witness against an instance");
    verify->add_option("kind", o.kind)
        ->required()
        ->check(CLI::IsMember({"clique", "hamcycle", "3color", "assignment"}));
    verify->add_option("instance", o.file, "instance JSON (or DIMACS for assignment)")->required();
    verify->add_option("witness", o.file2, "witness JSON")->required();

    auto* translate = app.add_subcommand("translate", "map a graph witness back to an assignment");
    translate->add_option("instance", o.file, "instance JSON")->required();
    translate->add_option("witness", o.file2, "witness JSON")->required();
    translate->add_option("--out", o.out, "write the assignment as JSON");

    auto* tmcmd = app.add_subcommand("tm", "Turing machine simulation");
    tmcmd->require_subcommand(1);
    auto* run = tmcmd->add_subcommand("run", "run a deterministic machine");
    run->add_option("machine", o.file)->required();
    run->add_option("input", o.input)->required();
    run->add_option("--limit", o.limit, "step limit");
    run->add_flag("--trace", o.trace, "print every configuration");
    auto* ntm = tmcmd->add_subcommand("ntm", "simulate a nondeterministic machine");
    ntm->add_option("machine", o.file)->required();
    ntm->add_option("input", o.input)->required();
    ntm->add_option("--depth", o.depth, "depth limit")->required();

    auto* cl = app.add_subcommand("cooklevin", "encode machine acceptance as CNF");
    cl->add_option("machine", o.file)->required();
    cl->add_option("input", o.input)->required();
    cl->add_option("--steps", o.p, "tableau size p")->required();
    cl->add_option("--out", o.out, "write DIMACS");
    cl->add_option("--map", o.map, "write the variable map as JSON");
    cl->add_flag("--solve", o.solve, "decide the formula with the exhaustive oracle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        if (solve->parsed()) return cmd_solve(o);
        if (maxsat->parsed()) return cmd_maxsat(o);
        if (to3->parsed()) return cmd_to3cnf(o);
        if (reduce->parsed()) return cmd_reduce(o);
        if (verify->parsed()) return cmd_verify(o);
        if (translate->parsed()) return cmd_translate(o);
        if (run->parsed()) return cmd_tm_run(o);
        if (ntm->parsed()) return cmd_tm_ntm(o);
        if (cl->parsed()) return cmd_cooklevin(o);
    } catch (const BudgetExceeded& e) {
        std::cerr << "satkit: " << e.what() << "\n";
        return kBudget;
    } catch (const Error& e) {
        std::cerr << "satkit: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
