#pragma once

#include "distance.hpp"
#include "errors.hpp"
#include "graph.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace gammagraph {

using VertexList = std::vector<Vertex>;

struct DominationOptions
{
    /// Maximum number of candidate subsets examined before giving up.
    std::uint64_t work_limit = 2'000'000'000;
};

/// All minimum distance-d dominating sets of a graph.
struct DominationResult
{
    unsigned d = 1;
    std::size_t gamma = 0;
    /// Sorted vertex-index lists, in lexicographic order.
    std::vector<VertexList> min_sets;
    std::uint64_t subsets_examined = 0;
};

inline auto is_distance_d_dominating(const Graph & g, std::span<const Vertex> s, unsigned d) -> bool
{
    if (d == 0)
        throw ArgumentError("distance parameter d must be positive");
    auto balls = distance_balls(g, d);
    VertexSet covered(g.size());
    for (auto v : s) {
        if (v >= g.size())
            throw ArgumentError("vertex index out of range");
        covered |= balls[v];
    }
    return covered.full();
}

namespace detail {

    /// Lexicographic scan of all size-k subsets, maintaining partial unions of
    /// the distance balls one word-row per depth.
    class SubsetScanner
    {
    public:
        SubsetScanner(const std::vector<VertexSet> & balls, std::size_t n, std::uint64_t limit, std::uint64_t & examined) :
            _n(n),
            _words(n == 0 ? 0 : balls.front().words().size()),
            _limit(limit),
            _examined(examined)
        {
            _rows.reserve(n * _words);
            for (const auto & b : balls)
                _rows.insert(_rows.end(), b.words().begin(), b.words().end());
            _full.assign(_words, ~std::uint64_t{0});
            if (n % 64 != 0)
                _full.back() = (std::uint64_t{1} << (n % 64)) - 1;
        }

        /// Calls emit(subset) for each dominating subset of size k; stops early if
        /// emit returns false. Returns false if stopped early.
        template <typename Emit>
        auto scan(std::size_t k, Emit && emit) -> bool
        {
            if (k == 0 || k > _n)
                return true;
            _stack.assign((k + 1) * _words, 0);
            _chosen.assign(k, 0);
            return recurse(0, 0, k, emit);
        }

    private:
        template <typename Emit>
        auto recurse(std::size_t depth, Vertex from, std::size_t k, Emit & emit) -> bool
        {
            const auto * parent = _stack.data() + depth * _words;
            auto * child = _stack.data() + (depth + 1) * _words;
            for (Vertex v = from; v + (k - depth) <= _n; ++v) {
                const auto * row = _rows.data() + v * _words;
                for (std::size_t w = 0; w < _words; ++w)
                    child[w] = parent[w] | row[w];
                _chosen[depth] = v;
                if (depth + 1 == k) {
                    if (++_examined > _limit)
                        throw ResourceError(_examined - 1, "domination work limit exceeded");
                    if (std::equal(child, child + _words, _full.begin()))
                        if (! emit(std::as_const(_chosen)))
                            return false;
                }
                else if (! recurse(depth + 1, v + 1, k, emit))
                    return false;
            }
            return true;
        }

        std::size_t _n, _words;
        std::uint64_t _limit;
        std::uint64_t & _examined;
        std::vector<std::uint64_t> _rows, _full, _stack;
        VertexList _chosen;
    };
} // namespace detail

/// Minimum size of a distance-d dominating set.
inline auto domination_number(const Graph & g, unsigned d, const DominationOptions & options = {}) -> std::size_t
{
    if (g.empty())
        throw ArgumentError("domination number of the empty graph is undefined");
    if (d == 0)
        throw ArgumentError("distance parameter d must be positive");
    auto balls = distance_balls(g, d);
    std::uint64_t examined = 0;
    detail::SubsetScanner scanner(balls, g.size(), options.work_limit, examined);
    for (std::size_t k = 1; k <= g.size(); ++k) {
        bool found = false;
        scanner.scan(k, [&](const VertexList &) {
            found = true;
            return false;
        });
        if (found)
            return k;
    }
    return g.size();
}

/// Every minimum distance-d dominating set. Sizes are tried in increasing
/// order and subsets of one size lexicographically; the scan stops after the
/// first size with any dominating set.
inline auto min_dominating_sets(const Graph & g, unsigned d, const DominationOptions & options = {}) -> DominationResult
{
    if (g.empty())
        throw ArgumentError("minimum dominating sets of the empty graph are undefined");
    if (d == 0)
        throw ArgumentError("distance parameter d must be positive");

    DominationResult result;
    result.d = d;
    auto balls = distance_balls(g, d);
    detail::SubsetScanner scanner(balls, g.size(), options.work_limit, result.subsets_examined);
    for (std::size_t k = 1; k <= g.size(); ++k) {
        scanner.scan(k, [&](const VertexList & s) {
            result.min_sets.push_back(s);
            return true;
        });
        if (! result.min_sets.empty()) {
            result.gamma = k;
            break;
        }
    }
    return result;
}

/// Vertex names of a set, in index order.
inline auto set_names(const Graph & g, const VertexList & s) -> std::vector<std::string>
{
    std::vector<std::string> names;
    for (auto v : s)
        names.push_back(g.name(v));
    return names;
}

} // namespace gammagraph
