#pragma once

#include "clutter.hpp"
#include "domination.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "symbol_set.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gammagraph {

/// The two pendant paths hanging off one blocker member.
struct Gadget
{
    /// Blocker member, in relabelled symbols.
    SymbolSet member;
    Vertex x = 0, y = 0;
    /// Path vertices beyond x (resp. y), nearest first; the last one is the pendant end.
    std::vector<Vertex> x_path, y_path;
};

/// A graph whose minimum distance-d dominating sets are a prescribed family.
struct RealizedGraph
{
    Graph graph;
    /// Core vertices are 0..core_size-1, named "1".."core_size".
    unsigned core_size = 0;
    unsigned d = 1;
    unsigned k = 0;
    /// original_symbol[i - 1] is the caller's symbol for relabelled symbol i.
    std::vector<unsigned> original_symbol;
    /// The family and its blocker over the relabelled ground set [core_size].
    Clutter family;
    Clutter blocker;
    std::vector<Gadget> gadgets;

    auto to_original(const SymbolSet & relabelled) const -> SymbolSet
    {
        SymbolSet result;
        relabelled.for_each([&](unsigned s) { result.insert(original_symbol.at(s - 1)); });
        return result;
    }
};

struct ConstructionSize
{
    std::uint64_t vertices = 0;
    std::uint64_t edges = 0;

    friend auto operator==(const ConstructionSize &, const ConstructionSize &) -> bool = default;
};

namespace detail {

    struct RelabelledFamily
    {
        unsigned n = 0, k = 0;
        std::vector<unsigned> original_symbol;
        Clutter clutter;
    };

    inline auto relabel_family(const std::vector<SymbolSet> & family) -> RelabelledFamily
    {
        if (family.empty())
            throw ArgumentError("the family of dominating sets must be nonempty");
        auto k = family.front().size();
        SymbolSet ground;
        for (const auto & m : family) {
            if (m.size() != k)
                throw ArgumentError("all members must have the same size; found " + std::to_string(k) + " and "
                    + std::to_string(m.size()));
            ground = ground | m;
        }
        if (k == 0)
            throw ArgumentError("members must be nonempty");

        RelabelledFamily result;
        result.k = k;
        result.original_symbol = ground.to_vector();
        result.n = static_cast<unsigned>(result.original_symbol.size());
        std::map<unsigned, unsigned> to_new;
        for (unsigned i = 0; i < result.n; ++i)
            to_new[result.original_symbol[i]] = i + 1;

        std::vector<SymbolSet> relabelled;
        for (const auto & m : family) {
            SymbolSet r;
            m.for_each([&](unsigned s) { r.insert(to_new[s]); });
            relabelled.push_back(r);
        }
        result.clutter = Clutter::validate(result.n, std::move(relabelled));
        return result;
    }

    inline auto checked_mul(std::uint64_t a, std::uint64_t b) -> std::uint64_t
    {
        std::uint64_t r;
        if (__builtin_mul_overflow(a, b, &r))
            throw UnsupportedSize("size formula overflows 64 bits");
        return r;
    }

    inline auto checked_add(std::uint64_t a, std::uint64_t b) -> std::uint64_t
    {
        std::uint64_t r;
        if (__builtin_add_overflow(a, b, &r))
            throw UnsupportedSize("size formula overflows 64 bits");
        return r;
    }

    inline auto binomial(std::uint64_t n, std::uint64_t r) -> std::uint64_t
    {
        if (r > n)
            return 0;
        r = std::min(r, n - r);
        std::uint64_t result = 1;
        for (std::uint64_t i = 1; i <= r; ++i)
            result = checked_mul(result, n - r + i) / i;
        return result;
    }
} // namespace detail

/// Builds a graph whose minimum distance-d dominating sets are exactly the given
/// family of equal-size sets.
///
/// The union of the members is relabelled onto 1..n in increasing order. The
/// graph is K_n on the relabelled symbols plus, for every member B of the
/// blocker of the family, two vertices x{B}, y{B} joined to the vertices of B,
/// each carrying a pendant path of d - 1 further vertices ("x{B}.p1", ...).
inline auto realize(const std::vector<SymbolSet> & family, unsigned d) -> RealizedGraph
{
    if (d == 0)
        throw ArgumentError("distance parameter d must be positive");

    auto relabelled = detail::relabel_family(family);
    RealizedGraph result;
    result.core_size = relabelled.n;
    result.d = d;
    result.k = relabelled.k;
    result.original_symbol = relabelled.original_symbol;
    result.family = relabelled.clutter;
    result.blocker = blocker(result.family);

    std::vector<std::string> names = default_names(result.core_size);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < result.core_size; ++u)
        for (Vertex v = u + 1; v < result.core_size; ++v)
            edges.emplace_back(u, v);

    auto add_side = [&](const SymbolSet & member, const std::string & prefix, Vertex & hub, std::vector<Vertex> & path) {
        auto base = prefix + member.to_string();
        hub = names.size();
        names.push_back(base);
        member.for_each([&](unsigned s) { edges.emplace_back(s - 1, hub); });
        auto previous = hub;
        for (unsigned i = 1; i < d; ++i) {
            auto p = names.size();
            names.push_back(base + ".p" + std::to_string(i));
            edges.emplace_back(previous, p);
            path.push_back(p);
            previous = p;
        }
    };

    for (const auto & member : result.blocker.members()) {
        Gadget gadget;
        gadget.member = member;
        add_side(member, "x", gadget.x, gadget.x_path);
        add_side(member, "y", gadget.y, gadget.y_path);
        result.gadgets.push_back(std::move(gadget));
    }

    auto n = names.size();
    result.graph = Graph::from_edges(n, edges, std::move(names));
    return result;
}

/// Closed-form size of realize(family, d): n + 2d|B| vertices and
/// C(n,2) + 2 sum|B| + 2(d-1)|B| edges, where B is the blocker.
inline auto construction_size(const std::vector<SymbolSet> & family, unsigned d) -> ConstructionSize
{
    if (d == 0)
        throw ArgumentError("distance parameter d must be positive");
    auto relabelled = detail::relabel_family(family);
    auto b = blocker(relabelled.clutter);
    std::uint64_t n = relabelled.n, count = b.size(), total = 0;
    for (const auto & m : b.members())
        total += m.size();
    return {
        n + 2 * d * count,
        detail::binomial(n, 2) + 2 * total + 2 * (d - 1) * count,
    };
}

/// Size of the earlier distance-1 construction for the same family:
/// n + (k+1)C(n,k-1) + (k+1)(C(n,k) - |D|) vertices and
/// C(n,2) + (k+1)(n-k+1)C(n,k-1) + (k+1)(n-k)(C(n,k) - |D|) edges.
inline auto hhl_size(const std::vector<SymbolSet> & family) -> ConstructionSize
{
    using detail::binomial;
    using detail::checked_add;
    using detail::checked_mul;

    auto relabelled = detail::relabel_family(family);
    std::uint64_t n = relabelled.n, k = relabelled.k, members = relabelled.clutter.size();
    auto below = binomial(n, k - 1);
    auto missing = binomial(n, k) - members;

    auto vertices = checked_add(checked_add(n, checked_mul(k + 1, below)), checked_mul(k + 1, missing));
    auto edges = checked_add(checked_add(binomial(n, 2), checked_mul(checked_mul(k + 1, n - k + 1), below)),
        checked_mul(checked_mul(k + 1, n - k), missing));
    return {vertices, edges};
}

struct RealizationReport
{
    bool matches = false;
    std::size_t gamma = 0;
    /// Expected sets that are not minimum dominating sets (original symbols).
    std::vector<SymbolSet> missing;
    /// Minimum dominating sets that were not expected, as vertex names.
    std::vector<std::vector<std::string>> extra;
    /// Whether some minimum dominating set used a gadget vertex.
    bool gadget_vertex_used = false;
};

/// Enumerates the minimum distance-d dominating sets of r.graph exhaustively and
/// compares them, in the caller's symbols, with the expected family.
inline auto verify_realization(const RealizedGraph & r, const std::vector<SymbolSet> & expected,
    const DominationOptions & options = {}) -> RealizationReport
{
    RealizationReport report;
    auto domination = min_dominating_sets(r.graph, r.d, options);
    report.gamma = domination.gamma;

    std::vector<SymbolSet> found;
    for (const auto & s : domination.min_sets) {
        SymbolSet symbols;
        bool core_only = true;
        for (auto v : s) {
            const auto & name = r.graph.name(v);
            bool is_core = ! name.empty() && name.find_first_not_of("0123456789") == std::string::npos
                && std::stoul(name) >= 1 && std::stoul(name) <= r.core_size;
            if (! is_core) {
                core_only = false;
                break;
            }
            symbols.insert(r.original_symbol.at(std::stoul(name) - 1));
        }
        if (core_only)
            found.push_back(symbols);
        else {
            report.gadget_vertex_used = true;
            report.extra.push_back(set_names(r.graph, s));
        }
    }

    for (const auto & s : expected)
        if (std::find(found.begin(), found.end(), s) == found.end())
            report.missing.push_back(s);
    for (const auto & s : found)
        if (std::find(expected.begin(), expected.end(), s) == expected.end()) {
            std::vector<std::string> names;
            s.for_each([&](unsigned x) { names.push_back(std::to_string(x)); });
            report.extra.push_back(std::move(names));
        }
    std::sort(report.missing.begin(), report.missing.end());
    std::sort(report.extra.begin(), report.extra.end());
    report.matches = report.missing.empty() && report.extra.empty();
    return report;
}

} // namespace gammagraph
