#pragma once

#include "errors.hpp"
#include "graph.hpp"

#include <string>
#include <vector>

namespace gammagraph {

/// A named graph family and its integer parameters, e.g. {"fan", {3, 2}}.
struct FamilySpec
{
    std::string name;
    std::vector<unsigned> params;

    /// Parses "wheel:9", "fan:3,2", "complete-bipartite:2,3".
    static auto parse(const std::string & text) -> FamilySpec
    {
        FamilySpec result;
        auto colon = text.find(':');
        result.name = text.substr(0, colon);
        if (colon != std::string::npos) {
            std::string rest = text.substr(colon + 1);
            std::size_t start = 0;
            while (start <= rest.size()) {
                auto comma = rest.find(',', start);
                auto token = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
                if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
                    throw ArgumentError("bad family parameter '" + token + "' in '" + text + "'");
                result.params.push_back(static_cast<unsigned>(std::stoul(token)));
                if (comma == std::string::npos)
                    break;
                start = comma + 1;
            }
        }
        return result;
    }

    auto to_string() const -> std::string
    {
        std::string result = name;
        for (std::size_t i = 0; i < params.size(); ++i)
            result += (i == 0 ? ":" : ",") + std::to_string(params[i]);
        return result;
    }
};

namespace detail {
    inline auto require(bool ok, const std::string & what) -> void
    {
        if (! ok)
            throw ArgumentError(what);
    }
}

inline auto complete_graph(unsigned n) -> Graph
{
    detail::require(n >= 1, "complete graph needs n >= 1");
    GraphBuilder b(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            b.add_edge(u, v);
    return std::move(b).build();
}

inline auto path_graph(unsigned n) -> Graph
{
    detail::require(n >= 1, "path needs n >= 1");
    GraphBuilder b(n);
    for (Vertex v = 0; v + 1 < n; ++v)
        b.add_edge(v, v + 1);
    return std::move(b).build();
}

inline auto cycle_graph(unsigned n) -> Graph
{
    detail::require(n >= 3, "cycle needs n >= 3");
    GraphBuilder b(n);
    for (Vertex v = 0; v < n; ++v)
        b.add_edge(v, (v + 1) % n);
    return std::move(b).build();
}

/// Parts {1..m} and {m+1..m+n}.
inline auto complete_bipartite_graph(unsigned m, unsigned n) -> Graph
{
    detail::require(m >= 1 && n >= 1, "complete bipartite graph needs m, n >= 1");
    GraphBuilder b(m + n);
    for (Vertex u = 0; u < m; ++u)
        for (Vertex v = 0; v < n; ++v)
            b.add_edge(u, m + v);
    return std::move(b).build();
}

/// W_n: rim cycle on vertices "1".."n-1", hub "n" last.
inline auto wheel_graph(unsigned n) -> Graph
{
    detail::require(n >= 4, "wheel needs n >= 4");
    GraphBuilder b(n);
    auto rim = n - 1;
    for (Vertex v = 0; v < rim; ++v) {
        b.add_edge(v, (v + 1) % rim);
        b.add_edge(v, rim);
    }
    return std::move(b).build();
}

/// F_{m,n}: path spine "1".."n" first, then the m apexes "n+1".."n+m", each
/// joined to every spine vertex.
inline auto fan_graph(unsigned m, unsigned n) -> Graph
{
    detail::require(m >= 1 && n >= 1, "fan needs m, n >= 1");
    GraphBuilder b(m + n);
    for (Vertex v = 0; v + 1 < n; ++v)
        b.add_edge(v, v + 1);
    for (Vertex a = 0; a < m; ++a)
        for (Vertex v = 0; v < n; ++v)
            b.add_edge(n + a, v);
    return std::move(b).build();
}

/// Two n-cycles "1".."n" and "n+1".."2n" with i joined to n+i.
inline auto prism_graph(unsigned n) -> Graph
{
    detail::require(n >= 3, "prism needs n >= 3");
    GraphBuilder b(2 * n);
    for (Vertex v = 0; v < n; ++v) {
        b.add_edge(v, (v + 1) % n);
        b.add_edge(n + v, n + (v + 1) % n);
        b.add_edge(v, n + v);
    }
    return std::move(b).build();
}

/// Q_n on binary n-tuples; vertex i is named by its n-bit binary expansion.
inline auto hypercube_graph(unsigned n) -> Graph
{
    detail::require(n >= 1 && n <= 20, "hypercube needs 1 <= n <= 20");
    std::size_t count = std::size_t{1} << n;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < count; ++i) {
        std::string s;
        for (unsigned bit = n; bit-- > 0;)
            s.push_back((i >> bit) & 1 ? '1' : '0');
        names.push_back(s);
    }
    GraphBuilder b(count, std::move(names));
    for (std::size_t i = 0; i < count; ++i)
        for (unsigned bit = 0; bit < n; ++bit)
            if (auto j = i ^ (std::size_t{1} << bit); i < j)
                b.add_edge(i, j);
    return std::move(b).build();
}

inline auto make_family(const FamilySpec & spec) -> Graph
{
    auto arity = [&](std::size_t k) {
        if (spec.params.size() != k)
            throw ArgumentError("family '" + spec.name + "' takes " + std::to_string(k) + " parameter(s)");
    };
    const auto & p = spec.params;
    if (spec.name == "complete") {
        arity(1);
        return complete_graph(p[0]);
    }
    if (spec.name == "path") {
        arity(1);
        return path_graph(p[0]);
    }
    if (spec.name == "cycle") {
        arity(1);
        return cycle_graph(p[0]);
    }
    if (spec.name == "complete-bipartite") {
        arity(2);
        return complete_bipartite_graph(p[0], p[1]);
    }
    if (spec.name == "wheel") {
        arity(1);
        return wheel_graph(p[0]);
    }
    if (spec.name == "fan") {
        arity(2);
        return fan_graph(p[0], p[1]);
    }
    if (spec.name == "prism") {
        arity(1);
        return prism_graph(p[0]);
    }
    if (spec.name == "hypercube") {
        arity(1);
        return hypercube_graph(p[0]);
    }
    throw ArgumentError("unknown family '" + spec.name + "'");
}

inline auto make_family(const std::string & text) -> Graph
{
    return make_family(FamilySpec::parse(text));
}

} // namespace gammagraph
