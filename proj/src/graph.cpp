#include "satkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace satkit {

SccResult strongly_connected_components(const Digraph& g) {
    const std::size_t n = g.size();
    constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(n, kUnvisited), low(n, 0), tarjan_id(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> found;
    std::size_t counter = 0;

    struct Frame {
        std::size_t v;
        std::size_t next;
    };
    std::vector<Frame> call;

    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!call.empty()) {
            Frame& fr = call.back();
            auto nbrs = g.neighbors(fr.v);
            if (fr.next < nbrs.size()) {
                std::size_t w = nbrs[fr.next++];
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[fr.v] = std::min(low[fr.v], index[w]);
                }
                continue;
            }
            std::size_t v = fr.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<std::size_t> comp;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    tarjan_id[w] = found.size();
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                found.push_back(std::move(comp));
            }
        }
    }

    // Tarjan completes sink components first, so its emission order is a
    // reverse topological order of the condensation.
    SccResult out;
    out.comp.resize(n);
    for (std::size_t v = 0; v < n; ++v) out.comp[v] = found.size() - 1 - tarjan_id[v];
    out.components.reserve(found.size());
    for (const auto& comp : found) {
        std::vector<std::string> labels;
        labels.reserve(comp.size());
        for (std::size_t v : comp) labels.push_back(g.label(v));
        out.components.push_back(std::move(labels));
    }
    return out;
}

std::optional<Coloring> is_bipartite(const Graph& g) {
    std::vector<int> color(g.size(), -1);
    std::deque<std::size_t> queue;
    for (std::size_t root = 0; root < g.size(); ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        queue.push_back(root);
        while (!queue.empty()) {
            std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v : g.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    Coloring out;
    for (std::size_t v = 0; v < g.size(); ++v) out[g.label(v)] = color[v] + 1;
    return out;
}

bool verify_clique(const Graph& g, std::span<const std::string> vertices, int k) {
    if (static_cast<long long>(vertices.size()) < k) return false;
    std::vector<std::size_t> ids;
    ids.reserve(vertices.size());
    for (const auto& label : vertices) {
        auto v = g.find(label);
        if (!v) return false;
        ids.push_back(*v);
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            if (!g.has_edge(ids[i], ids[j])) return false;  // also rejects repeats
        }
    }
    return true;
}

namespace {

std::vector<std::string> to_labels(const auto& g, const std::vector<std::size_t>& ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (std::size_t v : ids) out.push_back(g.label(v));
    return out;
}

void guard(std::size_t n, std::size_t max_vertices, const char* what) {
    if (n > max_vertices) {
        throw BudgetExceeded(std::string(what) + ": graph has " + std::to_string(n) +
                             " vertices, limit is " + std::to_string(max_vertices));
    }
}

bool extend_clique(const Graph& g, std::size_t k, std::vector<std::size_t>& chosen,
                   std::vector<std::size_t>& candidates) {
    if (chosen.size() == k) return true;
    if (chosen.size() + candidates.size() < k) return false;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        std::size_t v = candidates[i];
        std::vector<std::size_t> next;
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            if (g.has_edge(v, candidates[j])) next.push_back(candidates[j]);
        }
        chosen.push_back(v);
        if (extend_clique(g, k, chosen, next)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::string>> find_clique(const Graph& g, int k, std::size_t max_vertices) {
    guard(g.size(), max_vertices, "find_clique");
    if (k <= 0) return std::vector<std::string>{};
    std::vector<std::size_t> chosen, candidates(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) candidates[v] = v;
    if (!extend_clique(g, static_cast<std::size_t>(k), chosen, candidates)) return std::nullopt;
    return to_labels(g, chosen);
}

bool verify_hamiltonian_cycle(const Digraph& g, std::span<const std::string> cycle) {
    if (cycle.size() != g.size() || cycle.empty()) return false;
    std::vector<bool> seen(g.size(), false);
    std::vector<std::size_t> ids;
    ids.reserve(cycle.size());
    for (const auto& label : cycle) {
        auto v = g.find(label);
        if (!v || seen[*v]) return false;
        seen[*v] = true;
        ids.push_back(*v);
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (!g.has_edge(ids[i], ids[(i + 1) % ids.size()])) return false;
    }
    return true;
}

std::size_t for_each_hamiltonian_cycle(const Digraph& g,
                                       const std::function<bool(const std::vector<std::string>&)>& visit,
                                       std::size_t max_vertices) {
    guard(g.size(), max_vertices, "hamiltonian cycle search");
    const std::size_t n = g.size();
    if (n < 2) return 0;

    std::vector<std::size_t> path{0};
    std::vector<bool> used(n, false);
    used[0] = true;
    // iterator position into the neighbour list of each path vertex
    std::vector<std::size_t> cursor{0};
    std::size_t visited = 0;

    while (!path.empty()) {
        std::size_t u = path.back();
        if (path.size() == n) {
            if (g.has_edge(u, 0)) {
                ++visited;
                if (!visit(to_labels(g, path))) return visited;
            }
            used[u] = false;
            path.pop_back();
            cursor.pop_back();
            continue;
        }
        auto nbrs = g.neighbors(u);
        std::size_t& c = cursor.back();
        while (c < nbrs.size() && used[nbrs[c]]) ++c;
        if (c == nbrs.size()) {
            used[u] = false;
            path.pop_back();
            cursor.pop_back();
            continue;
        }
        std::size_t w = nbrs[c++];
        used[w] = true;
        path.push_back(w);
        cursor.push_back(0);
    }
    return visited;
}

std::optional<std::vector<std::string>> find_hamiltonian_cycle(const Digraph& g,
                                                               std::size_t max_vertices) {
    std::optional<std::vector<std::string>> found;
    for_each_hamiltonian_cycle(
        g,
        [&](const std::vector<std::string>& cycle) {
            found = cycle;
            return false;
        },
        max_vertices);
    return found;
}

bool verify_coloring(const Graph& g, const Coloring& c, int k) {
    std::vector<int> color(g.size(), 0);
    for (std::size_t v = 0; v < g.size(); ++v) {
        auto it = c.find(g.label(v));
        if (it == c.end() || it->second < 1 || it->second > k) return false;
        color[v] = it->second;
    }
    for (auto [u, v] : g.edges()) {
        if (color[u] == color[v]) return false;
    }
    return true;
}

std::optional<Coloring> find_k_coloring(const Graph& g, int k, std::size_t max_vertices) {
    guard(g.size(), max_vertices, "find_k_coloring");
    const std::size_t n = g.size();
    if (n == 0) return Coloring{};
    if (k < 1) return std::nullopt;

    std::vector<int> color(n, 0);
    std::size_t v = 0;
    while (true) {
        // try the next colour for v
        int c = color[v] + 1;
        for (; c <= k; ++c) {
            bool clash = false;
            for (std::size_t w : g.neighbors(v)) {
                if (w < v && color[w] == c) {
                    clash = true;
                    break;
                }
            }
            if (!clash) break;
        }
        if (c <= k) {
            color[v] = c;
            if (v + 1 == n) break;
            ++v;
            color[v] = 0;
        } else {
            color[v] = 0;
            if (v == 0) return std::nullopt;
            --v;
        }
    }
    Coloring out;
    for (std::size_t u = 0; u < n; ++u) out[g.label(u)] = color[u];
    return out;
}

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

template <bool Directed>
std::string dot_impl(const BasicGraph<Directed>& g, const std::map<std::string, std::string>& styling) {
    std::ostringstream os;
    os << (Directed ? "digraph" : "graph") << " G {\n";
    for (const auto& label : g.labels()) {
        os << "  " << quote(label);
        auto it = styling.find(label);
        if (it != styling.end() && !it->second.empty()) os << " [" << it->second << "]";
        os << ";\n";
    }
    const char* arrow = Directed ? " -> " : " -- ";
    for (auto [u, v] : g.edges()) {
        os << "  " << quote(g.label(u)) << arrow << quote(g.label(v)) << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace

std::string to_dot(const Graph& g, const std::map<std::string, std::string>& styling) {
    return dot_impl(g, styling);
}

std::string to_dot(const Digraph& g, const std::map<std::string, std::string>& styling) {
    return dot_impl(g, styling);
}

}  // namespace satkit
