#pragma once

#include "canonical.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "graph6.hpp"

#include <set>
#include <string>
#include <vector>

namespace gammagraph {

inline constexpr unsigned enumerate_max_vertices = 7;

namespace detail {
    inline auto from_forms(const std::set<std::string> & forms) -> std::vector<Graph>
    {
        std::vector<Graph> result;
        result.reserve(forms.size());
        for (const auto & f : forms)
            result.push_back(parse_graph6(f));
        return result;
    }
}

/// One representative of each isomorphism class of connected graphs on n
/// vertices, in canonical-form order.
///
/// Grown one vertex at a time: every connected graph has a vertex whose removal
/// leaves it connected, so extending each connected class on n-1 vertices by a
/// vertex with every nonempty neighbourhood reaches every class on n vertices.
inline auto enumerate_connected_graphs(unsigned n) -> std::vector<Graph>
{
    if (n == 0)
        throw ArgumentError("enumeration needs n >= 1");
    if (n > enumerate_max_vertices)
        throw UnsupportedSize("built-in enumeration stops at 7 vertices; ingest larger corpora from graph6 files");

    std::set<std::string> level{canonical_form(Graph(1))};
    for (unsigned m = 2; m <= n; ++m) {
        std::set<std::string> next;
        for (const auto & form : level) {
            auto g = parse_graph6(form);
            auto previous = g.edges();
            for (unsigned mask = 1; mask < (1u << (m - 1)); ++mask) {
                GraphBuilder builder(m);
                for (auto [u, v] : previous)
                    builder.add_edge(u, v);
                for (Vertex v = 0; v + 1 < m; ++v)
                    if (mask & (1u << v))
                        builder.add_edge(v, m - 1);
                next.insert(canonical_form(std::move(builder).build()));
            }
        }
        level = std::move(next);
    }
    return detail::from_forms(level);
}

/// Same classes found by filtering all 2^C(n,2) labelled graphs; a cross-check
/// for small n only.
inline auto enumerate_connected_graphs_exhaustive(unsigned n) -> std::vector<Graph>
{
    if (n == 0)
        throw ArgumentError("enumeration needs n >= 1");
    if (n > 6)
        throw UnsupportedSize("exhaustive enumeration is limited to 6 vertices");

    std::vector<Edge> pairs;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i)
            pairs.emplace_back(i, j);

    std::set<std::string> forms;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        GraphBuilder builder(n);
        for (std::size_t e = 0; e < pairs.size(); ++e)
            if (mask & (std::uint64_t{1} << e))
                builder.add_edge(pairs[e].first, pairs[e].second);
        auto g = std::move(builder).build();
        if (is_connected(g))
            forms.insert(canonical_form(g));
    }
    return detail::from_forms(forms);
}

} // namespace gammagraph
