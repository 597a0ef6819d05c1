#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "satkit/errors.hpp"

namespace satkit {

/// Simple graph with string-labelled vertices. Parallel edges collapse and
/// self-loops are rejected. Undirected edges are stored once with the smaller
/// vertex index first.
template <bool Directed>
class BasicGraph {
public:
    static constexpr bool directed = Directed;

    std::size_t add_vertex(std::string label) {
        if (index_.count(label)) throw InvalidInput("duplicate vertex '" + label + "'");
        std::size_t id = labels_.size();
        index_.emplace(label, id);
        labels_.push_back(std::move(label));
        out_.emplace_back();
        return id;
    }

    /// Returns false when the edge was already present.
    bool add_edge(std::size_t u, std::size_t v) {
        if (u >= size() || v >= size()) throw InvalidInput("edge endpoint out of range");
        if (u == v) throw InvalidInput("self-loop on '" + labels_[u] + "'");
        if (has_edge(u, v)) return false;
        insert_sorted(out_[u], v);
        if constexpr (!Directed) insert_sorted(out_[v], u);
        ++edge_count_;
        return true;
    }
    bool add_edge(std::string_view u, std::string_view v) { return add_edge(at(u), at(v)); }

    std::size_t size() const { return labels_.size(); }
    std::size_t num_edges() const { return edge_count_; }

    const std::string& label(std::size_t v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const { return labels_; }

    std::optional<std::size_t> find(std::string_view label) const {
        auto it = index_.find(std::string(label));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    std::size_t at(std::string_view label) const {
        auto v = find(label);
        if (!v) throw InvalidInput("unknown vertex '" + std::string(label) + "'");
        return *v;
    }

    /// Out-neighbours (all neighbours when undirected), sorted by index.
    std::span<const std::size_t> neighbors(std::size_t v) const { return out_.at(v); }

    bool has_edge(std::size_t u, std::size_t v) const {
        const auto& n = out_.at(u);
        return std::binary_search(n.begin(), n.end(), v);
    }

    /// Edges as index pairs; undirected edges reported once as (min, max).
    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        out.reserve(edge_count_);
        for (std::size_t u = 0; u < size(); ++u) {
            for (std::size_t v : out_[u]) {
                if (Directed || u < v) out.emplace_back(u, v);
            }
        }
        return out;
    }

private:
    static void insert_sorted(std::vector<std::size_t>& xs, std::size_t v) {
        xs.insert(std::lower_bound(xs.begin(), xs.end(), v), v);
    }

    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> out_;
    std::size_t edge_count_ = 0;
};

using Graph = BasicGraph<false>;
using Digraph = BasicGraph<true>;

/// Vertex label -> colour in 1..k.
using Coloring = std::map<std::string, int>;

struct SccResult {
    /// Components in reverse topological order of the condensation (sinks first).
    std::vector<std::vector<std::string>> components;
    /// Topological index of each vertex's component: comp[u] <= comp[v]
    /// whenever v is reachable from u.
    std::vector<std::size_t> comp;
};

/// Tarjan's algorithm, iterative.
SccResult strongly_connected_components(const Digraph& g);

/// Breadth-first 2-colouring. Each component root gets colour 1, its
/// neighbours colour 2, and so on; nullopt when an odd cycle exists.
std::optional<Coloring> is_bipartite(const Graph& g);

bool verify_clique(const Graph& g, std::span<const std::string> vertices, int k);

inline constexpr std::size_t kCliqueVertexBudget = 40;
inline constexpr std::size_t kHamCycleVertexBudget = 32;
inline constexpr std::size_t kColoringVertexBudget = 24;

/// Exhaustive k-clique search; returns the first clique in index order.
std::optional<std::vector<std::string>> find_clique(const Graph& g, int k,
                                                    std::size_t max_vertices = kCliqueVertexBudget);

bool verify_hamiltonian_cycle(const Digraph& g, std::span<const std::string> cycle);

/// Backtracking search anchored at the first vertex.
std::optional<std::vector<std::string>> find_hamiltonian_cycle(
    const Digraph& g, std::size_t max_vertices = kHamCycleVertexBudget);

/// Calls `visit` for every Hamiltonian cycle (each listed once, starting at
/// vertex 0) until it returns false. Returns the number of cycles visited.
std::size_t for_each_hamiltonian_cycle(const Digraph& g,
                                       const std::function<bool(const std::vector<std::string>&)>& visit,
                                       std::size_t max_vertices = kHamCycleVertexBudget);

bool verify_coloring(const Graph& g, const Coloring& c, int k);

std::optional<Coloring> find_k_coloring(const Graph& g, int k,
                                        std::size_t max_vertices = kColoringVertexBudget);

/// Graphviz DOT text. `styling` maps a vertex label to a raw attribute list
/// such as `shape=box, color=red`.
std::string to_dot(const Graph& g, const std::map<std::string, std::string>& styling = {});
std::string to_dot(const Digraph& g, const std::map<std::string, std::string>& styling = {});

}  // namespace satkit
