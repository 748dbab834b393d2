#pragma once

#include "errors.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "symbol_set.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace gammagraph {

/// Distinct k-subsets of {1,2,...} on the vertices of a graph, indexed by vertex.
struct Labelling
{
    unsigned k = 0;
    std::vector<SymbolSet> labels;

    friend auto operator==(const Labelling &, const Labelling &) -> bool = default;
};

struct LabellingViolation
{
    enum class Kind
    {
        wrong_size,
        duplicate,
        adjacency_mismatch
    };

    Kind kind;
    Vertex u = 0, v = 0;
    unsigned intersection = 0;

    auto describe(const Graph & g) const -> std::string
    {
        switch (kind) {
        case Kind::wrong_size:
            return "label of " + g.name(u) + " has the wrong size";
        case Kind::duplicate:
            return "vertices " + g.name(u) + " and " + g.name(v) + " share a label";
        case Kind::adjacency_mismatch:
            return "vertices " + g.name(u) + " and " + g.name(v) + " are " + (g.adjacent(u, v) ? "" : "not ")
                + "adjacent but their labels meet in " + std::to_string(intersection) + " symbols";
        }
        return {};
    }
};

struct LabellingCheck
{
    bool valid = false;
    std::optional<LabellingViolation> violation;

    explicit operator bool() const { return valid; }
};

/// Checks that labels are distinct k-sets and that u ~ v iff |l(u) & l(v)| = k - 1.
/// Pairs are scanned in (u, v) lexicographic order and the first failure is reported.
inline auto is_valid_labelling(const Graph & g, const Labelling & labelling) -> LabellingCheck
{
    if (labelling.labels.size() != g.size())
        throw ArgumentError("labelling assigns " + std::to_string(labelling.labels.size()) + " labels to a graph with "
            + std::to_string(g.size()) + " vertices");

    using Kind = LabellingViolation::Kind;
    const auto & l = labelling.labels;
    for (Vertex u = 0; u < g.size(); ++u)
        if (l[u].size() != labelling.k)
            return {false, LabellingViolation{Kind::wrong_size, u, u, l[u].size()}};

    for (Vertex u = 0; u < g.size(); ++u)
        for (Vertex v = u + 1; v < g.size(); ++v) {
            auto common = l[u].intersection_size(l[v]);
            if (common == labelling.k)
                return {false, LabellingViolation{Kind::duplicate, u, v, common}};
            if ((common + 1 == labelling.k) != g.adjacent(u, v))
                return {false, LabellingViolation{Kind::adjacency_mismatch, u, v, common}};
        }
    return {true, std::nullopt};
}

/// The possible labels for the middle vertex of an induced path whose ends carry
/// the given labels: with T the common part and {u1,u2}, {w1,w2} the private
/// parts, the answers are u1w1T, u1w2T, u2w1T and u2w2T (lexicographic order).
inline auto middle_label_candidates(const SymbolSet & end1, const SymbolSet & end2) -> std::vector<SymbolSet>
{
    if (end1.size() != end2.size())
        throw PreconditionError("end labels have different sizes");
    auto common = end1 & end2;
    if (common.size() + 2 != end1.size())
        throw PreconditionError("end labels " + end1.to_string() + " and " + end2.to_string()
            + " must differ in exactly two symbols");

    auto own1 = (end1 - common).to_vector();
    auto own2 = (end2 - common).to_vector();
    std::vector<SymbolSet> result;
    for (auto a : own1)
        for (auto b : own2) {
            auto label = common;
            label.insert(a);
            label.insert(b);
            result.push_back(label);
        }
    std::sort(result.begin(), result.end());
    return result;
}

/// Adds one new symbol (one past the largest in use) to every label.
inline auto add_common_symbol(const Labelling & labelling) -> Labelling
{
    unsigned top = 0;
    for (const auto & l : labelling.labels)
        top = std::max(top, l.max());
    auto result = labelling;
    result.k += 1;
    for (auto & l : result.labels)
        l.insert(top + 1);
    return result;
}

/// Shifts every symbol up by offset.
inline auto offset_symbols(const Labelling & labelling, unsigned offset) -> Labelling
{
    Labelling result{labelling.k, {}};
    for (const auto & l : labelling.labels) {
        SymbolSet shifted;
        l.for_each([&](unsigned s) { shifted.insert(s + offset); });
        result.labels.push_back(shifted);
    }
    return result;
}

inline auto max_symbol(const Labelling & labelling) -> unsigned
{
    unsigned top = 0;
    for (const auto & l : labelling.labels)
        top = std::max(top, l.max());
    return top;
}

/// Labelling of the Cartesian product (see cartesian_product()): vertex (u, v)
/// gets l1(u) together with l2(v) shifted past the symbols of l1.
inline auto product_labelling(const Graph & g1, const Labelling & l1, const Graph & g2, const Labelling & l2) -> Labelling
{
    if (auto check = is_valid_labelling(g1, l1); ! check)
        throw ArgumentError("first labelling is invalid: " + check.violation->describe(g1));
    if (auto check = is_valid_labelling(g2, l2); ! check)
        throw ArgumentError("second labelling is invalid: " + check.violation->describe(g2));

    auto shifted = offset_symbols(l2, max_symbol(l1));
    Labelling result{l1.k + l2.k, {}};
    for (const auto & a : l1.labels)
        for (const auto & b : shifted.labels)
            result.labels.push_back(a | b);
    return result;
}

/// Record of the repeated deletion of isolated and pendant vertices.
struct PendantReduction
{
    Graph reduct;
    /// kept[i] is the original index of reduct vertex i.
    std::vector<Vertex> kept;
    /// Deleted vertices in deletion order, with their sole neighbour at the time
    /// of deletion (none for isolated vertices).
    std::vector<std::pair<Vertex, std::optional<Vertex>>> deleted;
};

/// Repeatedly deletes the lowest-index vertex of degree at most one.
inline auto pendant_reduction(const Graph & g) -> PendantReduction
{
    std::vector<bool> alive(g.size(), true);
    std::vector<std::size_t> degree(g.size());
    for (Vertex v = 0; v < g.size(); ++v)
        degree[v] = g.degree(v);

    PendantReduction result;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v = 0; v < g.size(); ++v) {
            if (! alive[v] || degree[v] > 1)
                continue;
            std::optional<Vertex> neighbour;
            g.neighbours(v).for_each([&](Vertex w) {
                if (alive[w])
                    neighbour = w;
            });
            alive[v] = false;
            if (neighbour)
                --degree[*neighbour];
            result.deleted.emplace_back(v, neighbour);
            changed = true;
            break;
        }
    }
    for (Vertex v = 0; v < g.size(); ++v)
        if (alive[v])
            result.kept.push_back(v);
    result.reduct = induced_subgraph(g, std::span<const Vertex>(result.kept));
    return result;
}

inline auto reduce_pendants(const Graph & g) -> Graph
{
    return pendant_reduction(g).reduct;
}

/// Extends a labelling of the reduct back to the whole graph by re-adding the
/// deleted vertices in reverse order. A pendant vertex on u gets l(u) with one
/// symbol swapped for a new one; when no swap avoids a spurious adjacency, a
/// common symbol is added to every label first and that symbol is swapped out.
inline auto restore_pendants(const Graph & g, const PendantReduction & reduction, const Labelling & reduct_labelling) -> Labelling
{
    std::vector<std::optional<SymbolSet>> labels(g.size());
    unsigned k = reduct_labelling.k;
    for (std::size_t i = 0; i < reduction.kept.size(); ++i)
        labels[reduction.kept[i]] = reduct_labelling.labels.at(i);

    auto top_symbol = [&] {
        unsigned top = 0;
        for (const auto & l : labels)
            if (l)
                top = std::max(top, l->max());
        return top;
    };
    auto pad = [&] {
        auto z = top_symbol() + 1;
        for (auto & l : labels)
            if (l)
                l->insert(z);
        ++k;
        return z;
    };
    auto fits = [&](Vertex v, const SymbolSet & candidate, std::optional<Vertex> neighbour) {
        for (Vertex w = 0; w < g.size(); ++w) {
            if (! labels[w] || w == v)
                continue;
            auto common = labels[w]->intersection_size(candidate);
            bool adjacent = neighbour && *neighbour == w;
            if (common == k || (common + 1 == k) != adjacent)
                return false;
        }
        return true;
    };

    bool any_present = std::any_of(labels.begin(), labels.end(), [](const auto & l) { return l.has_value(); });
    if (! any_present)
        k = 1;

    for (auto it = reduction.deleted.rbegin(); it != reduction.deleted.rend(); ++it) {
        auto [v, neighbour] = *it;
        if (! any_present) {
            labels[v] = SymbolSet{1};
            any_present = true;
            continue;
        }
        if (! neighbour) {
            if (k < 2)
                pad();
            auto first = top_symbol() + 1;
            SymbolSet label;
            for (unsigned i = 0; i < k; ++i)
                label.insert(first + i);
            labels[v] = label;
            continue;
        }
        auto base = *labels[*neighbour];
        auto fresh = top_symbol() + 1;
        std::optional<SymbolSet> chosen;
        base.for_each([&](unsigned a) {
            if (chosen)
                return;
            auto candidate = base;
            candidate.erase(a);
            candidate.insert(fresh);
            if (fits(v, candidate, neighbour))
                chosen = candidate;
        });
        if (! chosen) {
            auto z = pad();
            auto candidate = *labels[*neighbour];
            candidate.erase(z);
            candidate.insert(z + 1);
            chosen = candidate;
        }
        labels[v] = *chosen;
    }

    Labelling result{k, {}};
    for (Vertex v = 0; v < g.size(); ++v)
        result.labels.push_back(labels[v].value());
    return result;
}

/// Labelling of W_n with the rim "1".."n-1" and hub "n" (see wheel_graph()).
///
/// For n = 2m + 1 the hub gets [m]; rim vertex 2i-1 gets [m] - {i} + {m+i} and
/// rim vertex 2i gets [m] - {i} + {m + 1 + (i mod m)}. W_4 is K_4 and gets the
/// singletons {1}..{4}.
inline auto wheel_labelling(unsigned n) -> Labelling
{
    if (n == 4)
        return Labelling{1, {SymbolSet{1}, SymbolSet{2}, SymbolSet{3}, SymbolSet{4}}};
    if (n < 4)
        throw ArgumentError("wheel needs n >= 4");
    if (n % 2 == 0)
        throw ArgumentError("W_" + std::to_string(n) + " is unlabellable: even wheels with n >= 6 admit no labelling");

    unsigned m = (n - 1) / 2;
    auto hub = SymbolSet::range(m);
    Labelling result{m, std::vector<SymbolSet>(n)};
    for (unsigned i = 1; i <= m; ++i) {
        auto odd = hub;
        odd.erase(i);
        odd.insert(m + i);
        auto even = hub;
        even.erase(i);
        even.insert(m + 1 + (i % m));
        result.labels[2 * i - 2] = odd;
        result.labels[2 * i - 1] = even;
    }
    result.labels[n - 1] = hub;
    return result;
}

/// Labelling of the star F_{m,1} = K_{1,m} as built by fan_graph(m, 1): centre
/// (vertex "1") gets [m], leaf i gets [m] - {i} + {m+i}.
inline auto star_labelling(unsigned m) -> Labelling
{
    if (m < 1)
        throw ArgumentError("star needs m >= 1");
    auto centre = SymbolSet::range(m);
    Labelling result{m, {centre}};
    for (unsigned i = 1; i <= m; ++i) {
        auto leaf = centre;
        leaf.erase(i);
        leaf.insert(m + i);
        result.labels.push_back(leaf);
    }
    return result;
}

/// The two shapes a labelled triangle can take: three labels sharing k-2
/// symbols and drawn from k+1 (alpha, like 12X 13X 23X), or sharing k-1 symbols
/// and drawn from k+2 (beta, like 1X 2X 3X).
enum class TriangleForm
{
    alpha,
    beta,
    neither
};

inline auto triangle_form(const SymbolSet & a, const SymbolSet & b, const SymbolSet & c) -> TriangleForm
{
    auto k = a.size();
    auto common = (a & b & c).size();
    auto all = (a | b | c).size();
    if (k >= 2 && common + 2 == k && all == k + 1)
        return TriangleForm::alpha;
    if (common + 1 == k && all == k + 2)
        return TriangleForm::beta;
    return TriangleForm::neither;
}

} // namespace gammagraph
