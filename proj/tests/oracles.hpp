#pragma once

// Independent reference implementations for the unit tests: plain loops over
// adjacency matrices, bitmasks and powersets, sharing no code with the library
// beyond the Graph container.

#include <gammagraph/graph.hpp>
#include <gammagraph/symbol_set.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using gammagraph::Graph;
using gammagraph::SymbolSet;
using gammagraph::Vertex;

inline constexpr unsigned far = 1u << 20;

inline auto random_graph(std::mt19937_64 & rng, std::size_t n, double p) -> Graph
{
    std::bernoulli_distribution coin(p);
    gammagraph::GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (coin(rng))
                b.add_edge(u, v);
    return std::move(b).build();
}

inline auto floyd_warshall(const Graph & g) -> std::vector<std::vector<unsigned>>
{
    auto n = g.size();
    std::vector dist(n, std::vector<unsigned>(n, far));
    for (Vertex u = 0; u < n; ++u) {
        dist[u][u] = 0;
        for (Vertex v = 0; v < n; ++v)
            if (g.adjacent(u, v))
                dist[u][v] = 1;
    }
    for (Vertex w = 0; w < n; ++w)
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v)
                dist[u][v] = std::min(dist[u][v], dist[u][w] + dist[w][v]);
    return dist;
}

/// All minimum distance-d dominating sets, as sorted vertex lists in
/// lexicographic order, by testing every subset.
inline auto min_dominating_sets(const Graph & g, unsigned d) -> std::vector<std::vector<Vertex>>
{
    auto n = g.size();
    auto dist = floyd_warshall(g);
    std::vector<std::vector<Vertex>> best;
    int best_size = static_cast<int>(n) + 1;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        auto size = std::popcount(mask);
        if (size > best_size)
            continue;
        bool dominates = true;
        for (Vertex v = 0; v < n && dominates; ++v) {
            bool hit = false;
            for (Vertex u = 0; u < n && ! hit; ++u)
                hit = ((mask >> u) & 1) && dist[u][v] <= d;
            dominates = hit;
        }
        if (! dominates)
            continue;
        if (size < best_size) {
            best.clear();
            best_size = size;
        }
        std::vector<Vertex> s;
        for (Vertex u = 0; u < n; ++u)
            if ((mask >> u) & 1)
                s.push_back(u);
        best.push_back(s);
    }
    std::sort(best.begin(), best.end());
    return best;
}

/// Minimal transversals of the members (bitmasks over [n]) by powerset scan.
inline auto blocker(unsigned n, const std::vector<std::uint64_t> & members) -> std::vector<std::uint64_t>
{
    std::vector<std::uint64_t> transversals;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << n); ++t)
        if (std::all_of(members.begin(), members.end(), [&](std::uint64_t m) { return (m & t) != 0; }))
            transversals.push_back(t);
    std::vector<std::uint64_t> minimal;
    for (auto t : transversals)
        if (std::none_of(transversals.begin(), transversals.end(), [&](std::uint64_t s) { return s != t && (s & t) == s; }))
            minimal.push_back(t);
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

/// Every antichain of nonempty subsets of [n] with at least one member.
inline auto all_clutters(unsigned n) -> std::vector<std::vector<std::uint64_t>>
{
    std::vector<std::uint64_t> subsets;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s)
        subsets.push_back(s);
    std::vector<std::vector<std::uint64_t>> result;
    std::vector<std::uint64_t> current;
    auto extend = [&](auto && self, std::size_t from) -> void {
        if (! current.empty())
            result.push_back(current);
        for (auto i = from; i < subsets.size(); ++i) {
            auto s = subsets[i];
            if (std::any_of(current.begin(), current.end(), [&](std::uint64_t m) { return (m & s) == m || (m & s) == s; }))
                continue;
            current.push_back(s);
            self(self, i + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);
    return result;
}

inline auto connected(const Graph & g) -> bool
{
    auto dist = floyd_warshall(g);
    for (auto & row : dist)
        for (auto x : row)
            if (x >= far)
                return false;
    return true;
}

/// Whether g has a labelling by k-subsets of {1..k+n-1} ({1..kn} when g is
/// disconnected), by trying every assignment in vertex order. Up to renaming
/// symbols, every labelling fits in that range.
inline auto labellable(const Graph & g, unsigned k) -> bool
{
    auto n = g.size();
    auto symbols = connected(g) ? k + static_cast<unsigned>(n) - 1 : k * static_cast<unsigned>(n);
    std::vector<std::uint64_t> ksets;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << symbols); ++s)
        if (std::popcount(s) == static_cast<int>(k))
            ksets.push_back(s);
    std::vector<std::uint64_t> label(n);
    auto place = [&](auto && self, Vertex v) -> bool {
        if (v == n)
            return true;
        for (auto s : ksets) {
            bool ok = true;
            for (Vertex u = 0; u < v && ok; ++u) {
                auto common = std::popcount(label[u] & s);
                ok = common != static_cast<int>(k) && ((common == static_cast<int>(k) - 1) == g.adjacent(u, v));
            }
            if (! ok)
                continue;
            label[v] = s;
            if (self(self, v + 1))
                return true;
        }
        return false;
    };
    return place(place, 0);
}

/// All graphs on n vertices (one per edge subset), for n <= 5.
inline auto all_graphs(std::size_t n) -> std::vector<Graph>
{
    std::vector<gammagraph::Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    std::vector<Graph> result;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<gammagraph::Edge> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1)
                edges.push_back(pairs[i]);
        result.push_back(Graph::from_edges(n, std::span<const gammagraph::Edge>(edges)));
    }
    return result;
}

} // namespace oracle
