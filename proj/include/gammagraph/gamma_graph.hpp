#pragma once

#include "domination.hpp"
#include "graph.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace gammagraph {

/// The gamma_d-graph: one vertex per minimum distance-d dominating set of the
/// source graph, two adjacent when their sets share exactly gamma - 1 members.
struct GammaGraph
{
    Graph graph;
    /// tags[i] is the dominating set naming vertex i (source vertex indices).
    std::vector<VertexList> tags;
    std::size_t gamma = 0;
    unsigned d = 1;
};

/// "25" when every source name is a single character, otherwise "2,5".
inline auto render_tag(const Graph & source, const VertexList & tag) -> std::string
{
    bool compact = std::all_of(source.names().begin(), source.names().end(),
        [](const std::string & s) { return s.size() == 1; });
    std::string result;
    for (std::size_t i = 0; i < tag.size(); ++i) {
        if (! compact && i > 0)
            result += ",";
        result += source.name(tag[i]);
    }
    return result;
}

inline auto intersection_size(const VertexList & a, const VertexList & b) -> std::size_t
{
    std::size_t count = 0;
    auto i = a.begin(), j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

/// Builds the intersection graph on the given equal-size sets (sorted into
/// lexicographic order first).
inline auto gamma_graph_from_sets(const Graph & source, std::vector<VertexList> sets, unsigned d) -> GammaGraph
{
    for (auto & s : sets)
        std::sort(s.begin(), s.end());
    std::sort(sets.begin(), sets.end());
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].size() != sets.front().size())
            throw ArgumentError("gamma-graph sets must all have the same size");
        if (std::adjacent_find(sets[i].begin(), sets[i].end()) != sets[i].end()
            || (! sets[i].empty() && sets[i].back() >= source.size()))
            throw ArgumentError("gamma-graph set has a repeated or out-of-range vertex");
        if (i > 0 && sets[i] == sets[i - 1])
            throw ArgumentError("gamma-graph sets must be distinct");
    }

    GammaGraph result;
    result.d = d;
    result.gamma = sets.empty() ? 0 : sets.front().size();

    std::vector<std::string> names;
    for (const auto & s : sets)
        names.push_back(render_tag(source, s));
    GraphBuilder builder(sets.size(), std::move(names));
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if (intersection_size(sets[i], sets[j]) + 1 == result.gamma)
                builder.add_edge(i, j);
    result.graph = std::move(builder).build();
    result.tags = std::move(sets);
    return result;
}

inline auto build_gamma_graph(const Graph & g, unsigned d, const DominationOptions & options = {}) -> GammaGraph
{
    auto domination = min_dominating_sets(g, d, options);
    return gamma_graph_from_sets(g, std::move(domination.min_sets), d);
}

/// Same tags and same adjacency.
inline auto tag_equal(const GammaGraph & a, const GammaGraph & b) -> bool
{
    return a.gamma == b.gamma && a.tags == b.tags && a.graph.same_adjacency(b.graph);
}

} // namespace gammagraph
