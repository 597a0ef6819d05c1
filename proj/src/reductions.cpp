#include "satkit/reductions.hpp"

#include <algorithm>
#include <stdexcept>

namespace satkit {

CnfFormula pad_to_three(const CnfFormula& f) {
    f.validate();
    CnfFormula out{f.num_vars, {}};
    out.clauses.reserve(f.clauses.size());
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        Clause c = f.clauses[j];
        if (c.empty()) throw InvalidInput("clause " + std::to_string(j + 1) + " is empty");
        if (c.size() > 3) {
            throw InvalidInput("clause " + std::to_string(j + 1) + " has " + std::to_string(c.size()) +
                               " literals; reductions need 3-CNF");
        }
        while (c.size() < 3) c.push_back(c.back());
        out.clauses.push_back(std::move(c));
    }
    return out;
}

namespace {

std::string str(int x) { return std::to_string(x); }

void require_satisfies(const CnfFormula& f, const Assignment& a) {
    if (!a.total_over(f.num_vars) || evaluate(f, a) != Truth::True) {
        throw InvalidInput("assignment does not satisfy the source formula");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// CLIQUE

CliqueInstance reduce_to_clique(const CnfFormula& f) {
    if (f.clauses.empty()) throw InvalidInput("CLIQUE reduction needs at least one clause");
    CliqueInstance inst;
    inst.formula = pad_to_three(f);
    inst.k = static_cast<int>(inst.formula.clauses.size());

    std::vector<CliqueVertex> info;
    for (int j = 1; j <= inst.k; ++j) {
        const Clause& c = inst.formula.clauses[j - 1];
        for (int slot = 1; slot <= 3; ++slot) {
            Literal l = c[slot - 1];
            CliqueVertex cv{l.var(), j, l.positive(), slot};
            std::string label = "v:" + str(cv.var) + ":" + str(j) + ":" + (cv.positive ? "+" : "-") +
                                ":" + str(slot);
            inst.graph.add_vertex(label);
            inst.vertex_index.emplace(std::move(label), cv);
            info.push_back(cv);
        }
    }
    for (std::size_t a = 0; a < info.size(); ++a) {
        for (std::size_t b = a + 1; b < info.size(); ++b) {
            if (info[a].clause == info[b].clause) continue;
            if (info[a].var == info[b].var && info[a].positive != info[b].positive) continue;
            inst.graph.add_edge(a, b);
        }
    }
    return inst;
}

Assignment clique_witness_to_assignment(const CliqueInstance& inst,
                                        const std::vector<std::string>& clique) {
    if (!verify_clique(inst.graph, clique, inst.k)) {
        throw InvalidInput("vertex set is not a " + str(inst.k) + "-clique of the instance");
    }
    Assignment a;
    for (const auto& label : clique) {
        const CliqueVertex& cv = inst.vertex_index.at(label);
        auto prior = a.get(cv.var);
        if (prior && *prior != cv.positive) {
            throw std::logic_error("clique joins complementary literals");
        }
        a.set(cv.var, cv.positive);
    }
    for (int v = 1; v <= inst.formula.num_vars; ++v) {
        if (!a.has(v)) a.set(v, false);
    }
    return a;
}

std::vector<std::string> assignment_to_clique(const CliqueInstance& inst, const Assignment& a) {
    require_satisfies(inst.formula, a);
    std::vector<std::string> out;
    for (std::size_t v = 0; v < inst.graph.size(); ++v) {
        const auto& label = inst.graph.label(v);
        const CliqueVertex& cv = inst.vertex_index.at(label);
        if (static_cast<int>(out.size()) >= cv.clause) continue;  // clause already covered
        if (a.value(cv.literal()).value_or(false)) out.push_back(label);
    }
    return out;
}

// ---------------------------------------------------------------------------
// HAM-CYCLE

std::size_t HamCycleInstance::expected_size() const {
    std::size_t base = 2 * static_cast<std::size_t>(n) * k + k + 2;
    if (strict) base += static_cast<std::size_t>(n) * (k + 1) + (n - 1);
    return base;
}

HamCycleInstance reduce_to_hamcycle(const CnfFormula& f, HamCycleOptions options) {
    HamCycleInstance inst;
    inst.formula = pad_to_three(f);
    inst.n = inst.formula.num_vars;
    inst.k = static_cast<int>(inst.formula.clauses.size());
    inst.strict = options.strict_separators;
    if (inst.n < 1 || inst.k < 1) {
        throw InvalidInput("HAM-CYCLE reduction needs at least one variable and one clause");
    }
    Digraph& g = inst.graph;

    inst.s = g.add_vertex("s");
    inst.paths.resize(inst.n);
    inst.position.resize(inst.n);
    for (int i = 1; i <= inst.n; ++i) {
        auto& path = inst.paths[i - 1];
        // in strict mode d:i:j follows clause pair j; d:i:0 and d:i:k are end buffers
        if (inst.strict) path.push_back(g.add_vertex("d:" + str(i) + ":0"));
        for (int pos = 1; pos <= 2 * inst.k; ++pos) {
            std::size_t v = g.add_vertex("p:" + str(i) + ":" + str(pos));
            path.push_back(v);
            inst.position[i - 1].push_back(v);
            if (inst.strict && pos % 2 == 0) path.push_back(g.add_vertex("d:" + str(i) + ":" + str(pos / 2)));
        }
        for (std::size_t q = 1; q < path.size(); ++q) {
            g.add_edge(path[q - 1], path[q]);
            g.add_edge(path[q], path[q - 1]);
        }
    }
    for (int j = 1; j <= inst.k; ++j) inst.clause_vertices.push_back(g.add_vertex("C:" + str(j)));
    inst.t = g.add_vertex("t");

    auto ends = [&](int i) {
        const auto& path = inst.paths[i - 1];
        return std::array<std::size_t, 2>{path.front(), path.back()};
    };
    for (std::size_t e : ends(1)) g.add_edge(inst.s, e);
    for (int i = 2; i <= inst.n; ++i) {
        if (inst.strict) {
            const std::size_t hub = g.add_vertex("h:" + str(i - 1));
            inst.hubs.push_back(hub);
            for (std::size_t from : ends(i - 1)) g.add_edge(from, hub);
            for (std::size_t to : ends(i)) g.add_edge(hub, to);
        } else {
            for (std::size_t from : ends(i - 1)) {
                for (std::size_t to : ends(i)) g.add_edge(from, to);
            }
        }
    }
    for (std::size_t e : ends(inst.n)) g.add_edge(e, inst.t);
    g.add_edge(inst.t, inst.s);

    for (int j = 1; j <= inst.k; ++j) {
        const std::size_t cj = inst.clause_vertices[j - 1];
        for (Literal l : inst.formula.clauses[j - 1]) {
            const std::size_t left = inst.position[l.var() - 1][2 * j - 2];
            const std::size_t right = inst.position[l.var() - 1][2 * j - 1];
            if (l.positive()) {
                g.add_edge(left, cj);
                g.add_edge(cj, right);
            } else {
                g.add_edge(right, cj);
                g.add_edge(cj, left);
            }
        }
    }
    return inst;
}

Assignment hamcycle_witness_to_assignment(const HamCycleInstance& inst,
                                          const std::vector<std::string>& cycle) {
    if (!verify_hamiltonian_cycle(inst.graph, cycle)) {
        throw InvalidInput("vertex list is not a Hamiltonian cycle of the instance");
    }
    // order[v] = offset of v along the cycle, counted from s
    std::vector<std::size_t> order(inst.graph.size());
    std::size_t start = 0;
    for (std::size_t q = 0; q < cycle.size(); ++q) {
        if (inst.graph.at(cycle[q]) == inst.s) start = q;
    }
    for (std::size_t q = 0; q < cycle.size(); ++q) {
        order[inst.graph.at(cycle[(start + q) % cycle.size()])] = q;
    }

    Assignment a;
    for (int i = 1; i <= inst.n; ++i) {
        const auto& path = inst.paths[i - 1];
        bool increasing = true, decreasing = true;
        for (std::size_t q = 1; q < path.size(); ++q) {
            if (order[path[q]] < order[path[q - 1]]) increasing = false;
            if (order[path[q]] > order[path[q - 1]]) decreasing = false;
        }
        if (increasing == decreasing) {
            throw InvalidInput("non-canonical cycle: path of variable " + str(i) +
                               " is not traversed in a single direction");
        }
        a.set(i, increasing);
    }
    return a;
}

std::vector<std::string> assignment_to_hamcycle(const HamCycleInstance& inst, const Assignment& a) {
    require_satisfies(inst.formula, a);
    const Digraph& g = inst.graph;
    std::vector<bool> covered(inst.k, false);
    std::vector<std::string> out{g.label(inst.s)};

    for (int i = 1; i <= inst.n; ++i) {
        std::vector<std::size_t> walk = inst.paths[i - 1];
        if (!*a.get(i)) std::reverse(walk.begin(), walk.end());
        for (std::size_t q = 0; q < walk.size(); ++q) {
            out.push_back(g.label(walk[q]));
            if (q + 1 == walk.size()) break;
            for (int j = 1; j <= inst.k; ++j) {
                const std::size_t cj = inst.clause_vertices[j - 1];
                if (!covered[j - 1] && g.has_edge(walk[q], cj) && g.has_edge(cj, walk[q + 1])) {
                    covered[j - 1] = true;
                    out.push_back(g.label(cj));
                    break;
                }
            }
        }
        if (inst.strict && i < inst.n) out.push_back(g.label(inst.hubs[i - 1]));
    }
    out.push_back(g.label(inst.t));
    return out;
}

// ---------------------------------------------------------------------------
// 3-COLOR

std::size_t ColoringInstance::expected_size() const {
    return 2 * static_cast<std::size_t>(formula.num_vars) + 3 + 6 * formula.clauses.size();
}

ColoringInstance reduce_to_3color(const CnfFormula& f) {
    ColoringInstance inst;
    inst.formula = pad_to_three(f);
    if (inst.formula.num_vars < 1) throw InvalidInput("3-COLOR reduction needs at least one variable");
    Graph& g = inst.graph;

    inst.T = g.add_vertex("T");
    inst.F = g.add_vertex("F");
    inst.B = g.add_vertex("B");
    g.add_edge(inst.T, inst.F);
    g.add_edge(inst.F, inst.B);
    g.add_edge(inst.B, inst.T);

    for (int v = 1; v <= inst.formula.num_vars; ++v) {
        std::size_t x = g.add_vertex("x:" + str(v));
        std::size_t nx = g.add_vertex("nx:" + str(v));
        inst.positive_literal.push_back(x);
        inst.negative_literal.push_back(nx);
        g.add_edge(x, nx);
        g.add_edge(x, inst.B);
        g.add_edge(nx, inst.B);
    }

    for (std::size_t j = 1; j <= inst.formula.clauses.size(); ++j) {
        const Clause& c = inst.formula.clauses[j - 1];
        std::array<std::size_t, 6> h{};
        for (int q = 0; q < 6; ++q) h[q] = g.add_vertex("g:" + str(static_cast<int>(j)) + ":" + str(q + 1));
        const std::size_t t1 = inst.literal_vertex(c[0]);
        const std::size_t t2 = inst.literal_vertex(c[1]);
        const std::size_t t3 = inst.literal_vertex(c[2]);
        // h[0] is the centre vertex, h[5] the top vertex that cannot be
        // coloured when t1, t2 and t3 all take F's colour.
        g.add_edge(h[0], h[5]);
        g.add_edge(h[0], inst.T);
        g.add_edge(h[0], t3);
        g.add_edge(inst.T, h[3]);
        g.add_edge(inst.T, h[4]);
        g.add_edge(inst.T, h[2]);
        g.add_edge(h[3], h[1]);
        g.add_edge(h[3], t2);
        g.add_edge(inst.F, h[1]);
        g.add_edge(t1, h[4]);
        g.add_edge(h[2], h[5]);
        g.add_edge(h[2], h[4]);
        g.add_edge(h[1], h[5]);
        inst.gadgets.push_back(h);
    }
    return inst;
}

Assignment coloring_witness_to_assignment(const ColoringInstance& inst, const Coloring& c) {
    if (!verify_coloring(inst.graph, c, 3)) {
        throw InvalidInput("colouring is not a valid 3-colouring of the instance");
    }
    const int true_color = c.at(inst.graph.label(inst.T));
    Assignment a;
    for (int v = 1; v <= inst.formula.num_vars; ++v) {
        a.set(v, c.at(inst.graph.label(inst.positive_literal[v - 1])) == true_color);
    }
    return a;
}

Coloring assignment_to_coloring(const ColoringInstance& inst, const Assignment& a) {
    require_satisfies(inst.formula, a);
    const Graph& g = inst.graph;
    std::vector<int> color(g.size(), 0);
    color[inst.T] = 1;
    color[inst.F] = 2;
    color[inst.B] = 3;
    for (int v = 1; v <= inst.formula.num_vars; ++v) {
        bool value = *a.get(v);
        color[inst.positive_literal[v - 1]] = value ? 1 : 2;
        color[inst.negative_literal[v - 1]] = value ? 2 : 1;
    }
    // Gadgets only touch T, F and their clause's literal vertices, so each can
    // be coloured on its own by trying all 3^6 options.
    for (const auto& h : inst.gadgets) {
        bool done = false;
        for (int code = 0; code < 729 && !done; ++code) {
            int rest = code;
            for (std::size_t v : h) {
                color[v] = rest % 3 + 1;
                rest /= 3;
            }
            done = std::all_of(h.begin(), h.end(), [&](std::size_t v) {
                for (std::size_t w : g.neighbors(v)) {
                    if (color[w] == color[v]) return false;
                }
                return true;
            });
        }
        if (!done) throw std::logic_error("clause gadget has no colouring under a satisfying assignment");
    }
    Coloring out;
    for (std::size_t v = 0; v < g.size(); ++v) out[g.label(v)] = color[v];
    return out;
}

// ---------------------------------------------------------------------------

std::map<std::string, std::string> dot_styling(const CliqueInstance& inst) {
    static const char* palette[] = {"lightblue", "lightpink", "palegreen", "khaki", "plum", "lightsalmon"};
    std::map<std::string, std::string> out;
    for (const auto& [label, cv] : inst.vertex_index) {
        out[label] = std::string("style=filled, fillcolor=") + palette[(cv.clause - 1) % 6] +
                     ", label=\"" + (cv.positive ? "x" : "~x") + str(cv.var) + "\"";
    }
    return out;
}

std::map<std::string, std::string> dot_styling(const HamCycleInstance& inst) {
    std::map<std::string, std::string> out;
    const auto& g = inst.graph;
    out[g.label(inst.s)] = "shape=doublecircle";
    out[g.label(inst.t)] = "shape=doublecircle, style=filled, fillcolor=gray30, fontcolor=white";
    for (std::size_t cj : inst.clause_vertices) out[g.label(cj)] = "shape=box, style=filled, fillcolor=teal";
    return out;
}

std::map<std::string, std::string> dot_styling(const ColoringInstance& inst) {
    std::map<std::string, std::string> out;
    const auto& g = inst.graph;
    out[g.label(inst.T)] = "style=filled, fillcolor=darkgreen, fontcolor=white";
    out[g.label(inst.F)] = "style=filled, fillcolor=red, fontcolor=white";
    out[g.label(inst.B)] = "style=filled, fillcolor=cyan";
    for (const auto& h : inst.gadgets) {
        for (std::size_t v : h) out[g.label(v)] = "shape=point, width=0.15";
    }
    return out;
}

}  // namespace satkit
