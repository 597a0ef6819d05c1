#include "satkit/io.hpp"

#include <json.hpp>

namespace satkit::io {

using json = nlohmann::ordered_json;

namespace {

json parse(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw ParseError(0, std::string("unexpected JSON shape: ") + e.what());
    }
}

json formula_json(const CnfFormula& f) {
    json clauses = json::array();
    for (const auto& c : f.clauses) {
        json lits = json::array();
        for (Literal l : c) lits.push_back(l.dimacs());
        clauses.push_back(std::move(lits));
    }
    return {{"num_vars", f.num_vars}, {"clauses", std::move(clauses)}};
}

CnfFormula formula_from(const json& j) {
    CnfFormula f;
    f.num_vars = j.at("num_vars").get<int>();
    for (const auto& c : j.at("clauses")) {
        Clause clause;
        for (const auto& l : c) clause.push_back(Literal::from_dimacs(l.get<int>()));
        f.clauses.push_back(std::move(clause));
    }
    f.validate();
    return f;
}

template <bool D>
void put_graph(json& doc, const BasicGraph<D>& g) {
    doc["vertices"] = g.labels();
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
    doc["edges"] = std::move(edges);
}

template <bool D>
void check_graph(const json& doc, const BasicGraph<D>& g) {
    const auto vertices = doc.at("vertices").get<std::vector<std::string>>();
    if (vertices != g.labels()) throw ParseError(0, "instance vertices do not match its formula");
    std::size_t count = 0;
    for (const auto& e : doc.at("edges")) {
        auto u = g.find(e.at(0).get<std::string>());
        auto v = g.find(e.at(1).get<std::string>());
        if (!u || !v || !g.has_edge(*u, *v)) throw ParseError(0, "instance edges do not match its formula");
        ++count;
    }
    if (count != g.num_edges()) throw ParseError(0, "instance edges do not match its formula");
}

}  // namespace

std::string assignment_to_json(const Assignment& a) {
    json vars = json::object();
    for (auto [v, value] : a.entries()) vars[std::to_string(v)] = value;
    return json{{"vars", std::move(vars)}}.dump() + "\n";
}

Assignment assignment_from_json(std::string_view text) {
    const json doc = parse(text);
    return guarded([&] {
        Assignment a;
        for (const auto& [key, value] : doc.at("vars").items()) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(key, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != key.size() || v < 1) throw ParseError(0, "bad variable key '" + key + "'");
            a.set(v, value.get<bool>());
        }
        return a;
    });
}

std::string assignment_to_vline(const Assignment& a) {
    std::string out = "v";
    for (auto [v, value] : a.entries()) out += " " + std::to_string(value ? v : -v);
    return out + " 0";
}

std::string kind_of(const Instance& inst) {
    switch (inst.index()) {
        case 0: return "clique";
        case 1: return "hamcycle";
        default: return "3color";
    }
}

const CnfFormula& formula_of(const Instance& inst) {
    return std::visit([](const auto& i) -> const CnfFormula& { return i.formula; }, inst);
}

std::string instance_to_json(const Instance& inst) {
    json doc;
    doc["kind"] = kind_of(inst);
    doc["formula"] = formula_json(formula_of(inst));
    if (const auto* c = std::get_if<CliqueInstance>(&inst)) {
        doc["k"] = c->k;
        put_graph(doc, c->graph);
        json index = json::object();
        for (std::size_t v = 0; v < c->graph.size(); ++v) {
            const auto& cv = c->vertex_index.at(c->graph.label(v));
            index[c->graph.label(v)] = {
                {"var", cv.var}, {"clause", cv.clause}, {"sign", cv.positive ? "+" : "-"}, {"slot", cv.slot}};
        }
        doc["vertex_index"] = std::move(index);
    } else if (const auto* h = std::get_if<HamCycleInstance>(&inst)) {
        doc["n"] = h->n;
        doc["k"] = h->k;
        doc["strict"] = h->strict;
        put_graph(doc, h->graph);
        json sub = json::array();
        for (int i = 1; i <= h->n; ++i) {
            for (int p = 1; p <= 2 * h->k; ++p) {
                sub.push_back({{"var", i}, {"pos", p}, {"vertex", h->graph.label(h->position[i - 1][p - 1])}});
            }
        }
        doc["subpath_index"] = std::move(sub);
        json cv = json::object();
        for (int j = 1; j <= h->k; ++j) cv[std::to_string(j)] = h->graph.label(h->clause_vertices[j - 1]);
        doc["clause_vertices"] = std::move(cv);
        doc["s"] = h->graph.label(h->s);
        doc["t"] = h->graph.label(h->t);
    } else {
        const auto& c = std::get<ColoringInstance>(inst);
        put_graph(doc, c.graph);
        doc["special"] = {{"T", c.graph.label(c.T)}, {"F", c.graph.label(c.F)}, {"B", c.graph.label(c.B)}};
        json lit = json::object();
        for (int v = 1; v <= c.formula.num_vars; ++v) {
            lit[std::to_string(v)] = c.graph.label(c.positive_literal[v - 1]);
            lit[std::to_string(-v)] = c.graph.label(c.negative_literal[v - 1]);
        }
        doc["literal_vertices"] = std::move(lit);
        json gadgets = json::object();
        for (std::size_t j = 0; j < c.gadgets.size(); ++j) {
            json g = json::array();
            for (std::size_t v : c.gadgets[j]) g.push_back(c.graph.label(v));
            gadgets[std::to_string(j + 1)] = std::move(g);
        }
        doc["gadget_vertices"] = std::move(gadgets);
    }
    return doc.dump(2) + "\n";
}

Instance instance_from_json(std::string_view text) {
    const json doc = parse(text);
    return guarded([&]() -> Instance {
        const std::string kind = doc.at("kind").get<std::string>();
        CnfFormula f;
        try {
            f = formula_from(doc.at("formula"));
        } catch (const InvalidInput& e) {
            throw ParseError(0, e.what());
        }
        if (kind == "clique") {
            auto inst = reduce_to_clique(f);
            check_graph(doc, inst.graph);
            return inst;
        }
        if (kind == "hamcycle") {
            auto inst = reduce_to_hamcycle(f, HamCycleOptions{doc.value("strict", false)});
            check_graph(doc, inst.graph);
            return inst;
        }
        if (kind == "3color") {
            auto inst = reduce_to_3color(f);
            check_graph(doc, inst.graph);
            return inst;
        }
        throw ParseError(0, "unknown instance kind '" + kind + "'");
    });
}

std::string clique_witness_to_json(const std::vector<std::string>& clique) {
    return json{{"clique", clique}}.dump() + "\n";
}

std::string cycle_witness_to_json(const std::vector<std::string>& cycle) {
    return json{{"cycle", cycle}}.dump() + "\n";
}

std::string coloring_witness_to_json(const Coloring& c) {
    json colors = json::object();
    for (const auto& [label, color] : c) colors[label] = color;
    return json{{"coloring", std::move(colors)}}.dump() + "\n";
}

std::vector<std::string> clique_witness_from_json(std::string_view text) {
    const json doc = parse(text);
    return guarded([&] { return doc.at("clique").get<std::vector<std::string>>(); });
}

std::vector<std::string> cycle_witness_from_json(std::string_view text) {
    const json doc = parse(text);
    return guarded([&] { return doc.at("cycle").get<std::vector<std::string>>(); });
}

Coloring coloring_witness_from_json(std::string_view text) {
    const json doc = parse(text);
    return guarded([&] {
        Coloring c;
        for (const auto& [label, color] : doc.at("coloring").items()) c[label] = color.get<int>();
        return c;
    });
}

}  // namespace satkit::io
