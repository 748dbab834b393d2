#pragma once

#include "errors.hpp"
#include "graph.hpp"
#include "graph6.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace gammagraph {

inline constexpr std::size_t canonical_form_max_vertices = 16;

namespace detail {

    using Cells = std::vector<std::vector<Vertex>>;

    /// Splits cells by the number of neighbours each vertex has in every cell,
    /// until stable. Sub-cells keep the parent's position and are ordered by
    /// their count vectors, so the result depends only on the isomorphism class
    /// of (graph, ordered partition).
    inline auto refine(const Graph & g, Cells cells) -> Cells
    {
        auto n = g.size();
        std::vector<std::size_t> cell_of(n);
        while (true) {
            for (std::size_t c = 0; c < cells.size(); ++c)
                for (auto v : cells[c])
                    cell_of[v] = c;

            std::vector<std::vector<std::size_t>> signature(n, std::vector<std::size_t>(cells.size(), 0));
            for (Vertex v = 0; v < n; ++v)
                g.neighbours(v).for_each([&](Vertex w) { ++signature[v][cell_of[w]]; });

            Cells next;
            next.reserve(n);
            for (auto & cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                std::stable_sort(cell.begin(), cell.end(),
                    [&](Vertex a, Vertex b) { return signature[a] < signature[b]; });
                std::size_t start = 0;
                for (std::size_t i = 1; i <= cell.size(); ++i)
                    if (i == cell.size() || signature[cell[i]] != signature[cell[start]]) {
                        next.emplace_back(cell.begin() + start, cell.begin() + i);
                        start = i;
                    }
            }
            if (next.size() == cells.size())
                return next;
            cells = std::move(next);
        }
    }

    /// Twins (same neighbourhood apart from each other) are swapped by an
    /// automorphism that fixes every other vertex.
    inline auto twins(const Graph & g, Vertex u, Vertex v) -> bool
    {
        auto nu = g.neighbours(u), nv = g.neighbours(v);
        nu.reset(v);
        nv.reset(u);
        return nu == nv;
    }

    inline auto search_canonical(const Graph & g, const Cells & cells, std::string & best, std::vector<Vertex> & best_order) -> void
    {
        auto target = cells.end();
        for (auto it = cells.begin(); it != cells.end(); ++it)
            if (it->size() > 1 && (target == cells.end() || it->size() < target->size()))
                target = it;

        if (target == cells.end()) {
            std::vector<Vertex> perm(g.size());
            for (std::size_t pos = 0; pos < cells.size(); ++pos)
                perm[cells[pos].front()] = pos;
            auto code = write_graph6(permute(g, perm));
            if (best.empty() || code < best) {
                best = std::move(code);
                best_order = perm;
            }
            return;
        }

        auto index = static_cast<std::size_t>(target - cells.begin());
        std::vector<Vertex> tried;
        for (auto v : *target) {
            if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(g, t, v); }))
                continue;
            tried.push_back(v);

            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != index) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<Vertex> rest;
                for (auto w : cells[c])
                    if (w != v)
                        rest.push_back(w);
                child.push_back(std::move(rest));
            }
            search_canonical(g, refine(g, std::move(child)), best, best_order);
        }
    }
} // namespace detail

/// Canonical labelling: perm[v] is the position of v in the canonical ordering.
inline auto canonical_labelling(const Graph & g) -> std::vector<Vertex>
{
    if (g.size() > canonical_form_max_vertices)
        throw UnsupportedSize("canonical form supports at most 16 vertices, got " + std::to_string(g.size()));
    if (g.empty())
        return {};

    detail::Cells initial(1);
    for (Vertex v = 0; v < g.size(); ++v)
        initial[0].push_back(v);

    std::string best;
    std::vector<Vertex> order;
    detail::search_canonical(g, detail::refine(g, std::move(initial)), best, order);
    return order;
}

/// A byte string equal for two graphs exactly when they are isomorphic; it is
/// the graph6 word of the canonically relabelled graph.
inline auto canonical_form(const Graph & g) -> std::string
{
    if (g.empty())
        return write_graph6(g);
    auto perm = canonical_labelling(g);
    return write_graph6(permute(g, perm));
}

inline auto isomorphic(const Graph & a, const Graph & b) -> bool
{
    return a.size() == b.size() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b);
}

} // namespace gammagraph
