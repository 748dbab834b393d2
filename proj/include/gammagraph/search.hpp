#pragma once

#include "errors.hpp"
#include "graph.hpp"
#include "labelling.hpp"
#include "symbol_set.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace gammagraph {

struct SearchBudget
{
    /// Largest label size tried.
    unsigned k_max = 2;
    /// Search-tree nodes allowed across all label sizes.
    std::uint64_t node_limit = 100'000'000;

    /// k_max = max(2, |V(g)|), node_limit = 10^8.
    static auto defaults_for(const Graph & g) -> SearchBudget
    {
        return {static_cast<unsigned>(std::max<std::size_t>(2, g.size())), 100'000'000};
    }
};

struct SearchOptions
{
    /// Take candidates for a vertex with two non-adjacent labelled neighbours
    /// from middle_label_candidates() instead of all single swaps.
    bool middle_candidates = true;
    /// Symbols present in every label so far are interchangeable; only the
    /// smallest of them may be swapped out.
    bool interchangeable_symbols = true;
};

enum class SearchStatus
{
    found,
    absent,
    budget_exhausted
};

struct SearchOutcome
{
    SearchStatus status = SearchStatus::absent;
    std::optional<Labelling> labelling;
    /// The bound a negative answer is relative to.
    unsigned k_max = 0;
    /// The label size being searched when the budget ran out.
    unsigned frontier_k = 0;
    std::uint64_t nodes = 0;
};

namespace detail {

    /// Vertex order in which each vertex after the first has an earlier neighbour
    /// (maximum-cardinality search from a vertex of largest degree), and each
    /// vertex's earliest neighbour in that order.
    struct SearchOrder
    {
        std::vector<Vertex> order;
        std::vector<std::size_t> position;
        std::vector<Vertex> parent;
    };

    inline auto make_search_order(const Graph & g) -> SearchOrder
    {
        auto n = g.size();
        SearchOrder result;
        result.position.assign(n, n);
        result.parent.assign(n, n);
        std::vector<std::size_t> weight(n, 0);
        for (std::size_t step = 0; step < n; ++step) {
            Vertex best = n;
            for (Vertex v = 0; v < n; ++v) {
                if (result.position[v] != n)
                    continue;
                if (best == n || weight[v] > weight[best] || (weight[v] == weight[best] && g.degree(v) > g.degree(best)))
                    best = v;
            }
            if (step > 0 && weight[best] == 0)
                throw PreconditionError("labelling search needs a connected graph");
            result.position[best] = step;
            result.order.push_back(best);
            g.neighbours(best).for_each([&](Vertex w) { ++weight[w]; });
        }
        for (auto v : result.order)
            for (auto u : result.order) {
                if (result.position[u] >= result.position[v])
                    break;
                if (g.adjacent(u, v)) {
                    result.parent[v] = u;
                    break;
                }
            }
        return result;
    }

    struct BudgetExceeded
    {
    };

    /// Complete backtracking search for a labelling with fixed k.
    ///
    /// The first vertex gets {1..k}; every later vertex gets its parent's label
    /// with one symbol swapped, where a symbol not used so far must be the
    /// smallest unused one. Every labelling is equivalent under renaming of
    /// symbols to one of this form, so the search is complete with at most
    /// k + n - 1 symbols.
    class FixedKSearch
    {
    public:
        FixedKSearch(const Graph & g, const SearchOrder & order, unsigned k, const SearchOptions & options,
            std::uint64_t & nodes, std::uint64_t node_limit) :
            _g(g),
            _order(order),
            _k(k),
            _options(options),
            _nodes(nodes),
            _node_limit(node_limit),
            _labels(g.size())
        {
        }

        auto run() -> std::optional<Labelling>
        {
            if (_g.empty())
                return Labelling{_k, {}};
            if (_k > SymbolSet::max_symbol)
                throw UnsupportedSize("label size beyond the symbol limit");
            _labels[_order.order[0]] = SymbolSet::range(_k);
            if (! assign(1, SymbolSet::range(_k)))
                return std::nullopt;
            return Labelling{_k, _labels};
        }

    private:
        auto candidates(Vertex v, const SymbolSet & used, const SymbolSet & everywhere) const -> std::vector<SymbolSet>
        {
            std::vector<SymbolSet> result;
            auto pos = _order.position[v];

            if (_options.middle_candidates) {
                for (std::size_t i = 0; i < pos; ++i) {
                    auto a = _order.order[i];
                    if (! _g.adjacent(a, v))
                        continue;
                    for (std::size_t j = i + 1; j < pos; ++j) {
                        auto c = _order.order[j];
                        if (! _g.adjacent(c, v) || _g.adjacent(a, c))
                            continue;
                        if (_labels[a].intersection_size(_labels[c]) + 2 != _k)
                            return {};
                        return middle_label_candidates(_labels[a], _labels[c]);
                    }
                }
            }

            const auto & base = _labels[_order.parent[v]];
            auto removable = base;
            if (_options.interchangeable_symbols && everywhere.size() > 1)
                removable = (base - everywhere) | SymbolSet{everywhere.min()};
            auto fresh = used.max() + 1;
            auto addable = used - base;
            if (fresh <= SymbolSet::max_symbol)
                addable.insert(fresh);

            removable.for_each([&](unsigned out) {
                addable.for_each([&](unsigned in) {
                    auto label = base;
                    label.erase(out);
                    label.insert(in);
                    result.push_back(label);
                });
            });
            std::sort(result.begin(), result.end());
            return result;
        }

        auto consistent(Vertex v, const SymbolSet & label, std::size_t pos) const -> bool
        {
            for (std::size_t i = 0; i < pos; ++i) {
                auto u = _order.order[i];
                auto common = _labels[u].intersection_size(label);
                if (common == _k || (common + 1 == _k) != _g.adjacent(u, v))
                    return false;
            }
            return true;
        }

        auto assign(std::size_t pos, const SymbolSet & used) -> bool
        {
            if (pos == _order.order.size())
                return true;
            auto v = _order.order[pos];

            auto everywhere = used;
            for (std::size_t i = 0; i < pos; ++i)
                everywhere = everywhere & _labels[_order.order[i]];

            for (const auto & label : candidates(v, used, everywhere)) {
                if (_options.interchangeable_symbols && everywhere.size() > 1) {
                    auto dropped = everywhere - label;
                    if (! dropped.empty() && dropped != SymbolSet{everywhere.min()})
                        continue;
                }
                if (! consistent(v, label, pos))
                    continue;
                if (++_nodes > _node_limit)
                    throw BudgetExceeded{};
                _labels[v] = label;
                if (assign(pos + 1, used | label))
                    return true;
            }
            return false;
        }

        const Graph & _g;
        const SearchOrder & _order;
        unsigned _k;
        const SearchOptions & _options;
        std::uint64_t & _nodes;
        std::uint64_t _node_limit;
        std::vector<SymbolSet> _labels;
    };
} // namespace detail

/// Searches for a labelling with exactly label size k.
inline auto search_labelling_at(const Graph & g, unsigned k, std::uint64_t node_limit = 100'000'000,
    const SearchOptions & options = {}) -> SearchOutcome
{
    if (k == 0)
        throw ArgumentError("label size must be positive");
    auto order = detail::make_search_order(g);
    SearchOutcome outcome;
    outcome.k_max = k;
    outcome.frontier_k = k;
    try {
        detail::FixedKSearch search(g, order, k, options, outcome.nodes, node_limit);
        if (auto found = search.run()) {
            outcome.status = SearchStatus::found;
            outcome.labelling = std::move(found);
        }
        else
            outcome.status = SearchStatus::absent;
    }
    catch (const detail::BudgetExceeded &) {
        outcome.status = SearchStatus::budget_exhausted;
    }
    return outcome;
}

/// Tries k = 1, 2, ..., budget.k_max and returns the first labelling found.
/// An absent outcome means no labelling with any k <= k_max exists. Requires a
/// connected graph.
inline auto find_labelling(const Graph & g, const SearchBudget & budget, const SearchOptions & options = {}) -> SearchOutcome
{
    if (budget.k_max < 1 || budget.node_limit < 1)
        throw ArgumentError("search budget needs k_max >= 1 and node_limit >= 1");
    auto order = detail::make_search_order(g);

    SearchOutcome outcome;
    outcome.k_max = budget.k_max;
    for (unsigned k = 1; k <= budget.k_max; ++k) {
        outcome.frontier_k = k;
        try {
            detail::FixedKSearch search(g, order, k, options, outcome.nodes, budget.node_limit);
            if (auto found = search.run()) {
                outcome.status = SearchStatus::found;
                outcome.labelling = std::move(found);
                return outcome;
            }
        }
        catch (const detail::BudgetExceeded &) {
            outcome.status = SearchStatus::budget_exhausted;
            return outcome;
        }
    }
    outcome.status = SearchStatus::absent;
    return outcome;
}

} // namespace gammagraph
