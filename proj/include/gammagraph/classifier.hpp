#pragma once

#include "canonical.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "labelling.hpp"
#include "search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace gammagraph {

enum class Decision
{
    labellable,
    unlabellable,
    undecided
};

/// Outcome of decide_labellable(); unlabellable is relative to k_bound.
struct LabellabilityDecision
{
    Decision decision = Decision::undecided;
    std::optional<Labelling> labelling;
    unsigned k_bound = 0;
    std::uint64_t nodes = 0;
};

enum class Status
{
    labellable,
    minimally_unlabellable,
    unlabellable_nonminimal,
    undecided
};

inline auto to_string(Status s) -> std::string
{
    switch (s) {
    case Status::labellable: return "labellable";
    case Status::minimally_unlabellable: return "minimally_unlabellable";
    case Status::unlabellable_nonminimal: return "unlabellable_nonminimal";
    case Status::undecided: return "undecided";
    }
    return "undecided";
}

struct Verdict
{
    Status status = Status::undecided;
    /// Present when labellable.
    std::optional<Labelling> labelling;
    /// Vertices of a smallest unlabellable proper induced subgraph, when nonminimal.
    std::optional<std::vector<Vertex>> witness;
    unsigned k_bound = 0;
};

/// Decisions keyed by canonical form, shared between subproblems and threads.
class DecisionCache
{
public:
    auto lookup(const std::string & form) const -> std::optional<Decision>
    {
        std::lock_guard lock(_mutex);
        auto it = _entries.find(form);
        if (it == _entries.end())
            return std::nullopt;
        return it->second;
    }

    auto store(const std::string & form, Decision d) -> void
    {
        std::lock_guard lock(_mutex);
        _entries.emplace(form, d);
    }

private:
    mutable std::mutex _mutex;
    std::unordered_map<std::string, Decision> _entries;
};

namespace detail {

    /// Combines per-component labellings: all are padded to a common k >= 2 with
    /// private common symbols and shifted onto disjoint symbol ranges, so labels
    /// from different components meet in nothing.
    inline auto merge_component_labellings(std::size_t n, const std::vector<std::vector<Vertex>> & components,
        std::vector<Labelling> parts) -> Labelling
    {
        if (parts.size() == 1) {
            Labelling result{parts[0].k, std::vector<SymbolSet>(n)};
            for (std::size_t i = 0; i < components[0].size(); ++i)
                result.labels[components[0][i]] = parts[0].labels[i];
            return result;
        }
        unsigned k = 2;
        for (const auto & p : parts)
            k = std::max(k, p.k);
        Labelling result{k, std::vector<SymbolSet>(n)};
        unsigned offset = 0;
        for (std::size_t c = 0; c < parts.size(); ++c) {
            auto part = parts[c];
            while (part.k < k)
                part = add_common_symbol(part);
            part = offset_symbols(part, offset);
            offset = max_symbol(part);
            for (std::size_t i = 0; i < components[c].size(); ++i)
                result.labels[components[c][i]] = part.labels[i];
        }
        return result;
    }
} // namespace detail

/// Decides labellability by splitting into components, deleting pendant and
/// isolated vertices, searching each nonempty reduct, and rebuilding a labelling
/// of the whole graph from the pieces.
inline auto decide_labellable(const Graph & g, const SearchBudget & budget, const SearchOptions & options = {}) -> LabellabilityDecision
{
    LabellabilityDecision result;
    result.k_bound = budget.k_max;
    if (g.empty()) {
        result.decision = Decision::labellable;
        result.labelling = Labelling{1, {}};
        return result;
    }

    auto components = connected_components(g);
    std::vector<Labelling> parts;
    for (const auto & component : components) {
        auto sub = induced_subgraph(g, std::span<const Vertex>(component));
        auto reduction = pendant_reduction(sub);
        Labelling reduct_labelling{1, {}};
        if (! reduction.reduct.empty()) {
            auto outcome = find_labelling(reduction.reduct, budget, options);
            result.nodes += outcome.nodes;
            if (outcome.status == SearchStatus::absent) {
                result.decision = Decision::unlabellable;
                return result;
            }
            if (outcome.status == SearchStatus::budget_exhausted) {
                result.decision = Decision::undecided;
                return result;
            }
            reduct_labelling = *outcome.labelling;
        }
        parts.push_back(restore_pendants(sub, reduction, reduct_labelling));
    }

    result.decision = Decision::labellable;
    result.labelling = detail::merge_component_labellings(g.size(), components, std::move(parts));
    return result;
}

namespace detail {

    inline auto cached_decision(const Graph & g, const SearchBudget & budget, DecisionCache * cache) -> Decision
    {
        std::optional<std::string> form;
        if (cache && g.size() <= canonical_form_max_vertices) {
            form = canonical_form(g);
            if (auto hit = cache->lookup(*form))
                return *hit;
        }
        auto decision = decide_labellable(g, budget).decision;
        if (form)
            cache->store(*form, decision);
        return decision;
    }

    inline auto next_combination(std::vector<Vertex> & c, std::size_t n) -> bool
    {
        auto k = c.size();
        for (std::size_t i = k; i-- > 0;)
            if (c[i] < n - k + i) {
                ++c[i];
                for (auto j = i + 1; j < k; ++j)
                    c[j] = c[j - 1] + 1;
                return true;
            }
        return false;
    }
} // namespace detail

/// Smallest unlabellable proper induced subgraph: by size, then canonical form,
/// then vertex list. Returns nullopt if every proper induced subgraph is
/// labellable (or undecided).
inline auto smallest_unlabellable_induced(const Graph & g, const SearchBudget & budget, DecisionCache * cache = nullptr)
    -> std::optional<std::vector<Vertex>>
{
    for (std::size_t size = 1; size < g.size(); ++size) {
        std::optional<std::pair<std::string, std::vector<Vertex>>> best;
        std::vector<Vertex> subset(size);
        for (std::size_t i = 0; i < size; ++i)
            subset[i] = i;
        do {
            auto sub = induced_subgraph(g, std::span<const Vertex>(subset));
            if (detail::cached_decision(sub, budget, cache) == Decision::unlabellable) {
                auto form = sub.size() <= canonical_form_max_vertices ? canonical_form(sub) : write_graph6(sub);
                if (! best || std::tie(form, subset) < std::tie(best->first, best->second))
                    best.emplace(form, subset);
            }
        } while (detail::next_combination(subset, g.size()));
        if (best)
            return best->second;
    }
    return std::nullopt;
}

/// Full verdict for one graph. A non-labellable graph is minimal exactly when
/// every one-vertex-deleted subgraph is labellable.
inline auto is_minimally_unlabellable(const Graph & g, const SearchBudget & budget, DecisionCache * cache = nullptr) -> Verdict
{
    Verdict verdict;
    verdict.k_bound = budget.k_max;

    auto top = decide_labellable(g, budget);
    if (top.decision == Decision::labellable) {
        verdict.status = Status::labellable;
        verdict.labelling = std::move(top.labelling);
        return verdict;
    }
    if (top.decision == Decision::undecided) {
        verdict.status = Status::undecided;
        return verdict;
    }

    bool any_unlabellable = false, any_undecided = false;
    for (Vertex v = 0; v < g.size(); ++v) {
        auto d = detail::cached_decision(remove_vertex(g, v), budget, cache);
        any_unlabellable = any_unlabellable || d == Decision::unlabellable;
        any_undecided = any_undecided || d == Decision::undecided;
        if (any_unlabellable)
            break;
    }

    if (any_unlabellable) {
        verdict.status = Status::unlabellable_nonminimal;
        verdict.witness = smallest_unlabellable_induced(g, budget, cache);
    }
    else if (any_undecided)
        verdict.status = Status::undecided;
    else
        verdict.status = Status::minimally_unlabellable;
    return verdict;
}

struct ClassificationEntry
{
    std::string graph6;
    Graph graph;
    Verdict verdict;
};

struct StatusCounts
{
    std::size_t labellable = 0, minimally_unlabellable = 0, unlabellable_nonminimal = 0, undecided = 0;

    auto add(Status s) -> void
    {
        switch (s) {
        case Status::labellable: ++labellable; break;
        case Status::minimally_unlabellable: ++minimally_unlabellable; break;
        case Status::unlabellable_nonminimal: ++unlabellable_nonminimal; break;
        case Status::undecided: ++undecided; break;
        }
    }

    auto total() const -> std::size_t { return labellable + minimally_unlabellable + unlabellable_nonminimal + undecided; }

    friend auto operator==(const StatusCounts &, const StatusCounts &) -> bool = default;
};

struct ClassificationReport
{
    SearchBudget budget;
    /// Sorted by graph6, one entry per distinct graph6 word.
    std::vector<ClassificationEntry> entries;
    StatusCounts counts;
    std::map<std::size_t, StatusCounts> counts_by_order;

    auto find(const std::string & graph6) const -> const ClassificationEntry *
    {
        auto it = std::lower_bound(entries.begin(), entries.end(), graph6,
            [](const ClassificationEntry & e, const std::string & key) { return e.graph6 < key; });
        return it != entries.end() && it->graph6 == graph6 ? &*it : nullptr;
    }
};

/// Classifies every graph (deduplicated by graph6 word) on `jobs` worker
/// threads. The report does not depend on the number of jobs.
inline auto classify(const std::vector<Graph> & graphs, const SearchBudget & budget, unsigned jobs = 1) -> ClassificationReport
{
    ClassificationReport report;
    report.budget = budget;

    std::map<std::string, Graph> unique;
    for (const auto & g : graphs)
        unique.emplace(write_graph6(g), g);
    for (auto & [word, g] : unique)
        report.entries.push_back({word, g, {}});

    DecisionCache cache;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (auto i = next++; i < report.entries.size(); i = next++)
            report.entries[i].verdict = is_minimally_unlabellable(report.entries[i].graph, budget, &cache);
    };

    jobs = std::max(1u, jobs);
    if (jobs == 1)
        worker();
    else {
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < jobs; ++t)
            threads.emplace_back(worker);
        for (auto & t : threads)
            t.join();
    }

    for (const auto & e : report.entries) {
        report.counts.add(e.verdict.status);
        report.counts_by_order[e.graph.size()].add(e.verdict.status);
    }
    return report;
}

/// Whether h is isomorphic to an induced subgraph of g.
inline auto has_induced_subgraph(const Graph & g, const Graph & h) -> bool
{
    if (h.size() > g.size())
        return false;
    if (h.empty())
        return true;
    auto target = canonical_form(h);
    std::vector<Vertex> subset(h.size());
    for (std::size_t i = 0; i < subset.size(); ++i)
        subset[i] = i;
    do {
        auto sub = induced_subgraph(g, std::span<const Vertex>(subset));
        if (sub.edge_count() == h.edge_count() && canonical_form(sub) == target)
            return true;
    } while (detail::next_combination(subset, g.size()));
    return false;
}

/// Pairs (labellable graph, unlabellable graph) in the report where the second
/// is an induced subgraph of the first. Empty for a consistent report.
inline auto hereditary_violations(const ClassificationReport & report) -> std::vector<std::pair<std::string, std::string>>
{
    std::vector<std::pair<std::string, std::string>> result;
    for (const auto & big : report.entries) {
        if (big.verdict.status != Status::labellable)
            continue;
        for (const auto & small : report.entries) {
            auto s = small.verdict.status;
            if (s != Status::minimally_unlabellable && s != Status::unlabellable_nonminimal)
                continue;
            if (small.graph.size() < big.graph.size() && has_induced_subgraph(big.graph, small.graph))
                result.emplace_back(big.graph6, small.graph6);
        }
    }
    return result;
}

} // namespace gammagraph
