#pragma once

#include "graph.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

namespace gammagraph {

/// All-pairs shortest path lengths; entries between components are unreachable.
class DistanceMatrix
{
public:
    static constexpr std::uint32_t unreachable = std::numeric_limits<std::uint32_t>::max();

    explicit DistanceMatrix(std::size_t n) :
        _n(n),
        _entries(n * n, unreachable)
    {
    }

    auto size() const -> std::size_t { return _n; }

    auto at(Vertex u, Vertex v) const -> std::uint32_t { return _entries[u * _n + v]; }
    auto reachable(Vertex u, Vertex v) const -> bool { return at(u, v) != unreachable; }

    auto distance(Vertex u, Vertex v) const -> std::optional<std::uint32_t>
    {
        if (! reachable(u, v))
            return std::nullopt;
        return at(u, v);
    }

    auto set(Vertex u, Vertex v, std::uint32_t d) -> void { _entries[u * _n + v] = d; }

private:
    std::size_t _n;
    std::vector<std::uint32_t> _entries;
};

/// One BFS per vertex.
inline auto all_pairs_distances(const Graph & g) -> DistanceMatrix
{
    auto n = g.size();
    DistanceMatrix result(n);
    std::vector<Vertex> queue;
    queue.reserve(n);
    for (Vertex s = 0; s < n; ++s) {
        queue.clear();
        queue.push_back(s);
        result.set(s, s, 0);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto u = queue[head];
            auto du = result.at(s, u);
            g.neighbours(u).for_each([&](Vertex w) {
                if (! result.reachable(s, w)) {
                    result.set(s, w, du + 1);
                    queue.push_back(w);
                }
            });
        }
    }
    return result;
}

/// Closed distance-d balls: ball[v] = { u : dist(u, v) <= d }.
inline auto distance_balls(const Graph & g, const DistanceMatrix & distances, unsigned d) -> std::vector<VertexSet>
{
    std::vector<VertexSet> balls(g.size(), VertexSet(g.size()));
    for (Vertex v = 0; v < g.size(); ++v)
        for (Vertex u = 0; u < g.size(); ++u)
            if (distances.reachable(v, u) && distances.at(v, u) <= d)
                balls[v].set(u);
    return balls;
}

inline auto distance_balls(const Graph & g, unsigned d) -> std::vector<VertexSet>
{
    return distance_balls(g, all_pairs_distances(g), d);
}

/// Largest distance from v to any vertex, or nullopt when g is disconnected.
inline auto eccentricity(const DistanceMatrix & distances, Vertex v) -> std::optional<std::uint32_t>
{
    std::uint32_t result = 0;
    for (Vertex u = 0; u < distances.size(); ++u) {
        if (! distances.reachable(v, u))
            return std::nullopt;
        result = std::max(result, distances.at(v, u));
    }
    return result;
}

} // namespace gammagraph
