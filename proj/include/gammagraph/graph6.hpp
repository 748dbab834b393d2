#pragma once

#include "errors.hpp"
#include "graph.hpp"

#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace gammagraph {

/// Largest vertex count representable in the short graph6 form.
inline constexpr std::size_t graph6_max_vertices = 62;

/// Encodes g in graph6 short form: one byte 63+n, then the upper-triangle
/// adjacency bits in column order (0,1),(0,2),(1,2),(0,3),... packed six to a
/// byte, big-endian, offset by 63 and zero-padded.
inline auto write_graph6(const Graph & g) -> std::string
{
    auto n = g.size();
    if (n > graph6_max_vertices)
        throw UnsupportedSize("graph6 short form supports at most 62 vertices, got " + std::to_string(n));

    std::string result;
    result.push_back(static_cast<char>(63 + n));

    unsigned acc = 0, used = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
            if (++used == 6) {
                result.push_back(static_cast<char>(63 + acc));
                acc = used = 0;
            }
        }
    if (used != 0)
        result.push_back(static_cast<char>(63 + (acc << (6 - used))));
    return result;
}

inline auto parse_graph6(std::string_view text) -> Graph
{
    if (text.empty())
        throw ParseError(0, "empty graph6 word");

    for (std::size_t i = 0; i < text.size(); ++i) {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError(i, "byte value " + std::to_string(c) + " outside [63,126]");
    }

    auto first = static_cast<unsigned char>(text[0]);
    if (first == 126)
        throw ParseError(0, "long-form graph6 (n > 62) is not supported");

    std::size_t n = first - 63;
    std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    std::size_t expected = 1 + (bits + 5) / 6;
    if (text.size() < expected)
        throw ParseError(text.size(), "truncated: expected " + std::to_string(expected) + " bytes for n=" + std::to_string(n));
    if (text.size() > expected)
        throw ParseError(expected, "trailing garbage after graph6 word");

    GraphBuilder builder(n);
    std::size_t index = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++index) {
            auto byte = static_cast<unsigned char>(text[1 + index / 6]) - 63u;
            if (byte & (0x20u >> (index % 6)))
                builder.add_edge(i, j);
        }

    if (bits % 6 != 0) {
        auto last = static_cast<unsigned char>(text[expected - 1]) - 63u;
        auto pad = 6 - bits % 6;
        if (last & ((1u << pad) - 1))
            throw ParseError(expected - 1, "nonzero padding bits");
    }
    return std::move(builder).build();
}

/// Reads one graph6 word per line; blank lines are skipped. Parse errors carry
/// the line number in their message.
inline auto read_graph6_lines(std::istream & in) -> std::vector<Graph>
{
    std::vector<Graph> result;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (! line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty())
            continue;
        try {
            result.push_back(parse_graph6(line));
        }
        catch (const ParseError & e) {
            throw ParseError(e.offset(), "line " + std::to_string(line_number) + ": " + e.what());
        }
    }
    return result;
}

} // namespace gammagraph
