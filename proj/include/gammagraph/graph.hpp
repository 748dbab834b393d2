#pragma once

#include "errors.hpp"
#include "vertex_set.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace gammagraph {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

inline auto default_names(std::size_t n) -> std::vector<std::string>
{
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        names.push_back(std::to_string(i));
    return names;
}

class GraphBuilder;

/// Immutable finite simple undirected graph with named vertices.
///
/// Vertices are indices 0..size()-1; each carries an opaque name (by default
/// "1".."n"). Construct with from_edges() or a GraphBuilder.
class Graph
{
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n, std::vector<std::string> names = {}) :
        _names(names.empty() ? default_names(n) : std::move(names)),
        _adjacency(n, VertexSet(n))
    {
        if (_names.size() != n)
            throw ArgumentError("expected " + std::to_string(n) + " vertex names, got " + std::to_string(_names.size()));
        std::unordered_set<std::string> seen(_names.begin(), _names.end());
        if (seen.size() != n)
            throw ArgumentError("vertex names must be pairwise distinct");
    }

    static auto from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> names = {}) -> Graph;

    static auto from_edges(std::size_t n, std::initializer_list<Edge> edges, std::vector<std::string> names = {}) -> Graph
    {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()), std::move(names));
    }

    auto size() const -> std::size_t { return _adjacency.size(); }
    auto empty() const -> bool { return _adjacency.empty(); }

    auto name(Vertex v) const -> const std::string & { return _names.at(v); }
    auto names() const -> const std::vector<std::string> & { return _names; }

    auto find(const std::string & name) const -> std::optional<Vertex>
    {
        auto it = std::find(_names.begin(), _names.end(), name);
        if (it == _names.end())
            return std::nullopt;
        return static_cast<Vertex>(it - _names.begin());
    }

    auto adjacent(Vertex u, Vertex v) const -> bool { return _adjacency[u].test(v); }
    auto neighbours(Vertex v) const -> const VertexSet & { return _adjacency[v]; }
    auto degree(Vertex v) const -> std::size_t { return _adjacency[v].count(); }

    auto edge_count() const -> std::size_t
    {
        std::size_t total = 0;
        for (const auto & row : _adjacency)
            total += row.count();
        return total / 2;
    }

    /// All edges (u, v) with u < v, sorted.
    auto edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        for (Vertex u = 0; u < size(); ++u)
            _adjacency[u].for_each([&](Vertex v) {
                if (u < v)
                    result.emplace_back(u, v);
            });
        return result;
    }

    auto with_names(std::vector<std::string> names) const -> Graph
    {
        Graph result(size(), std::move(names));
        result._adjacency = _adjacency;
        return result;
    }

    auto same_adjacency(const Graph & other) const -> bool { return _adjacency == other._adjacency; }

    friend auto operator==(const Graph &, const Graph &) -> bool = default;

private:
    friend class GraphBuilder;

    std::vector<std::string> _names;
    std::vector<VertexSet> _adjacency;
};

/// Mutable staging area for a Graph.
class GraphBuilder
{
public:
    explicit GraphBuilder(std::size_t n, std::vector<std::string> names = {}) :
        _graph(n, std::move(names))
    {
    }

    auto size() const -> std::size_t { return _graph.size(); }

    auto add_edge(Vertex u, Vertex v) -> GraphBuilder &
    {
        if (u >= size() || v >= size())
            throw ArgumentError("edge endpoint out of range");
        if (u == v)
            throw ArgumentError("self-loop on vertex " + _graph.name(u));
        _graph._adjacency[u].set(v);
        _graph._adjacency[v].set(u);
        return *this;
    }

    auto adjacent(Vertex u, Vertex v) const -> bool { return _graph.adjacent(u, v); }

    auto build() && -> Graph { return std::move(_graph); }
    auto build() const & -> Graph { return _graph; }

private:
    Graph _graph;
};

inline auto Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<std::string> names) -> Graph
{
    GraphBuilder builder(n, std::move(names));
    for (auto [u, v] : edges)
        builder.add_edge(u, v);
    return std::move(builder).build();
}

/// Subgraph induced by the given vertices, in the given order, names preserved.
inline auto induced_subgraph(const Graph & g, std::span<const Vertex> vertices) -> Graph
{
    std::vector<std::string> names;
    names.reserve(vertices.size());
    for (auto v : vertices) {
        if (v >= g.size())
            throw ArgumentError("vertex index " + std::to_string(v) + " out of range");
        names.push_back(g.name(v));
    }
    GraphBuilder builder(vertices.size(), std::move(names));
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j]))
                builder.add_edge(i, j);
    return std::move(builder).build();
}

inline auto induced_subgraph(const Graph & g, const VertexSet & vertices) -> Graph
{
    auto list = vertices.to_vector();
    return induced_subgraph(g, std::span<const Vertex>(list));
}

inline auto remove_vertex(const Graph & g, Vertex v) -> Graph
{
    std::vector<Vertex> keep;
    for (Vertex u = 0; u < g.size(); ++u)
        if (u != v)
            keep.push_back(u);
    return induced_subgraph(g, std::span<const Vertex>(keep));
}

/// Relabels vertices: vertex v of g becomes vertex perm[v] of the result.
inline auto permute(const Graph & g, std::span<const Vertex> perm) -> Graph
{
    std::vector<std::string> names(g.size());
    for (Vertex v = 0; v < g.size(); ++v)
        names.at(perm[v]) = g.name(v);
    GraphBuilder builder(g.size(), std::move(names));
    for (auto [u, v] : g.edges())
        builder.add_edge(perm[u], perm[v]);
    return std::move(builder).build();
}

/// Vertex sets of the connected components, each sorted, ordered by smallest member.
inline auto connected_components(const Graph & g) -> std::vector<std::vector<Vertex>>
{
    std::vector<std::vector<Vertex>> result;
    std::vector<bool> seen(g.size(), false);
    for (Vertex start = 0; start < g.size(); ++start) {
        if (seen[start])
            continue;
        std::vector<Vertex> component{start}, stack{start};
        seen[start] = true;
        while (! stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            g.neighbours(u).for_each([&](Vertex w) {
                if (! seen[w]) {
                    seen[w] = true;
                    component.push_back(w);
                    stack.push_back(w);
                }
            });
        }
        std::sort(component.begin(), component.end());
        result.push_back(std::move(component));
    }
    return result;
}

inline auto is_connected(const Graph & g) -> bool
{
    return g.size() <= 1 || connected_components(g).size() == 1;
}

/// Cartesian product; vertex (u, v) has index u * h.size() + v and name "u_name:v_name".
inline auto cartesian_product(const Graph & g, const Graph & h) -> Graph
{
    auto n = g.size(), m = h.size();
    std::vector<std::string> names;
    names.reserve(n * m);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < m; ++v)
            names.push_back(g.name(u) + ":" + h.name(v));
    GraphBuilder builder(n * m, std::move(names));
    for (Vertex u = 0; u < n; ++u)
        for (auto [a, b] : h.edges())
            builder.add_edge(u * m + a, u * m + b);
    for (auto [a, b] : g.edges())
        for (Vertex v = 0; v < m; ++v)
            builder.add_edge(a * m + v, b * m + v);
    return std::move(builder).build();
}

} // namespace gammagraph
