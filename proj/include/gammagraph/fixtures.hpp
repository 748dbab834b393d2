#pragma once

// Example graphs and labellings used by verify-fixtures and the
// acceptance suite. Vertex i of each graph is named "i+1".

#include "families.hpp"
#include "graph.hpp"
#include "labelling.hpp"
#include "symbol_set.hpp"

#include <string>
#include <vector>

namespace gammagraph::fixtures {

namespace detail {
    /// "234" -> {2,3,4}
    inline auto label(const std::string & digits) -> SymbolSet
    {
        SymbolSet result;
        for (char c : digits)
            result.insert(static_cast<unsigned>(c - '0'));
        return result;
    }

    inline auto labels(unsigned k, std::initializer_list<const char *> words) -> Labelling
    {
        Labelling result{k, {}};
        for (const auto * w : words)
            result.labels.push_back(label(w));
        return result;
    }
}

/// 7 vertices: hexagon 1-2-3-4-5-6 with chords 2-6 and 3-5, and 7 joined to 5 and 6.
/// gamma_1 = 2 (sets 15 25 56 36 46), gamma_2 = 1 (sets 2 3 5 6 7).
inline auto domination_example() -> Graph
{
    return Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {5, 6}, {6, 4}, {1, 5}, {2, 4}});
}

/// K_{2,3} (parts {2,4} and {1,3,5}) with a pendant vertex 6 on vertex 4.
inline auto k23_with_pendant() -> Graph
{
    return Graph::from_edges(6, {{5, 3}, {3, 0}, {0, 1}, {1, 4}, {4, 3}, {1, 2}, {2, 3}});
}

/// The four minimally unlabellable graphs on at most five vertices:
/// K_{2,3}, F_{3,2}, K_{2,3} plus an edge inside the larger part, and K_5 - e.
inline auto minimal_unlabellable_five() -> std::vector<Graph>
{
    auto k5e = GraphBuilder(5);
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = u + 1; v < 5; ++v)
            if (! (u == 2 && v == 4))
                k5e.add_edge(u, v);
    return {
        Graph::from_edges(5, {{4, 0}, {0, 2}, {2, 1}, {1, 4}, {0, 3}, {3, 1}}),
        Graph::from_edges(5, {{1, 2}, {2, 0}, {0, 3}, {3, 1}, {1, 0}, {0, 4}, {4, 1}}),
        Graph::from_edges(5, {{1, 3}, {3, 0}, {0, 4}, {4, 1}, {1, 2}, {2, 0}, {2, 3}}),
        std::move(k5e).build(),
    };
}

/// The four minimally unlabellable graphs on six vertices; the last is W_6.
inline auto minimal_unlabellable_six() -> std::vector<Graph>
{
    return {
        Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {0, 4}}),
        Graph::from_edges(6, {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {0, 5}, {5, 4}, {4, 3}, {1, 2}}),
        Graph::from_edges(6, {{0, 1}, {1, 4}, {4, 3}, {3, 0}, {0, 2}, {2, 5}, {4, 5}, {5, 3}}),
        wheel_graph(6),
    };
}

/// Hexagon 1-2-4-6-5-3 with vertex 7 joined to the opposite vertices 3 and 4.
inline auto theta_graph() -> Graph
{
    return Graph::from_edges(7, {{0, 1}, {1, 3}, {3, 5}, {5, 4}, {4, 2}, {2, 0}, {2, 6}, {6, 3}});
}

/// theta_graph() plus the edge 7-6.
inline auto theta_graph_with_spoke() -> Graph
{
    return Graph::from_edges(7, {{0, 1}, {1, 3}, {3, 5}, {5, 4}, {4, 2}, {2, 0}, {2, 6}, {6, 3}, {6, 5}});
}

/// theta_graph() plus the chord 2-6; minimally unlabellable.
inline auto theta_graph_with_chord() -> Graph
{
    return Graph::from_edges(7, {{0, 1}, {1, 3}, {3, 5}, {5, 4}, {4, 2}, {2, 0}, {2, 6}, {6, 3}, {1, 5}});
}

inline auto theta_graph_labelling() -> Labelling
{
    return detail::labels(3, {"234", "245", "123", "145", "126", "146", "135"});
}

inline auto theta_graph_with_spoke_labelling() -> Labelling
{
    return detail::labels(3, {"245", "235", "246", "356", "126", "136", "346"});
}

/// Hexagon 2-3-4-5-6-7 with vertex 1 joined to 2 and 6.
inline auto hexagon_with_ear() -> Graph
{
    return Graph::from_edges(7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {1, 0}, {0, 5}});
}

inline auto hexagon_with_ear_labelling() -> Labelling
{
    return detail::labels(3, {"234", "123", "135", "145", "456", "246", "126"});
}

/// W_9 labelled as in the odd-wheel construction: rim v1..v8, then the hub.
inline auto wheel9_labelling() -> Labelling
{
    return detail::labels(4, {"2345", "2346", "1346", "1347", "1247", "1248", "1238", "1235", "1234"});
}

} // namespace gammagraph::fixtures
