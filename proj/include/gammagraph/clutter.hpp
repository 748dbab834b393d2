#pragma once

#include "errors.hpp"
#include "symbol_set.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

namespace gammagraph {

/// An antichain of subsets of the ground set [n] = {1..n}.
///
/// Members are kept sorted by size, then lexicographically.
class Clutter
{
public:
    Clutter() = default;

    /// Checks the antichain condition and returns the clutter.
    static auto validate(unsigned ground_size, std::vector<SymbolSet> family) -> Clutter
    {
        if (ground_size > SymbolSet::max_symbol)
            throw UnsupportedSize("clutter ground set larger than " + std::to_string(SymbolSet::max_symbol));
        auto ground = SymbolSet::range(ground_size);
        for (const auto & m : family)
            if (! m.is_subset_of(ground))
                throw ArgumentError("member " + m.to_string() + " is not a subset of [" + std::to_string(ground_size) + "]");

        std::sort(family.begin(), family.end(), size_then_lex_less);
        for (std::size_t i = 0; i < family.size(); ++i) {
            if (family[i].empty() && family.size() > 1)
                throw PreconditionError("the empty set can only be a member of the clutter {{}}");
            for (std::size_t j = i + 1; j < family.size(); ++j)
                if (family[i].is_subset_of(family[j]))
                    throw PreconditionError("not a clutter: " + family[i].to_string()
                        + (family[i] == family[j] ? " appears twice" : " is contained in " + family[j].to_string()));
        }
        return Clutter(ground_size, std::move(family));
    }

    auto ground_size() const -> unsigned { return _ground_size; }
    auto members() const -> const std::vector<SymbolSet> & { return _members; }
    auto size() const -> std::size_t { return _members.size(); }
    auto empty() const -> bool { return _members.empty(); }

    auto contains(const SymbolSet & s) const -> bool
    {
        return std::find(_members.begin(), _members.end(), s) != _members.end();
    }

    friend auto operator==(const Clutter &, const Clutter &) -> bool = default;

private:
    Clutter(unsigned n, std::vector<SymbolSet> members) :
        _ground_size(n),
        _members(std::move(members))
    {
    }

    unsigned _ground_size = 0;
    std::vector<SymbolSet> _members;
};

namespace detail {

    inline auto hits_all(const SymbolSet & t, const std::vector<SymbolSet> & members) -> bool
    {
        return std::all_of(members.begin(), members.end(), [&](const SymbolSet & m) { return ! (m & t).empty(); });
    }

    /// Every element of t meets some member in which it is t's only element.
    inline auto every_element_private(const SymbolSet & t, const std::vector<SymbolSet> & members) -> bool
    {
        std::uint64_t has_private = 0;
        for (const auto & m : members) {
            auto hit = (m & t).bits();
            if (hit != 0 && (hit & (hit - 1)) == 0)
                has_private |= hit;
        }
        return has_private == t.bits();
    }

    /// Extends t by one element of an uncovered member at a time. A branch is
    /// abandoned as soon as some chosen element loses its private member, since
    /// no superset can restore it.
    inline auto extend_transversal(const SymbolSet & t, const std::vector<SymbolSet> & members,
        std::unordered_set<std::uint64_t> & found) -> void
    {
        const SymbolSet * uncovered = nullptr;
        for (const auto & m : members)
            if ((m & t).empty() && (uncovered == nullptr || m.size() < uncovered->size()))
                uncovered = &m;

        if (uncovered == nullptr) {
            found.insert(t.bits());
            return;
        }

        uncovered->for_each([&](unsigned e) {
            auto next = t;
            next.insert(e);
            if (every_element_private(next, members))
                extend_transversal(next, members, found);
        });
    }
} // namespace detail

/// The inclusion-minimal subsets of the ground set meeting every member.
inline auto blocker(const Clutter & c) -> Clutter
{
    if (c.empty())
        throw PreconditionError("the blocker of the empty clutter is undefined");

    std::unordered_set<std::uint64_t> found;
    if (! c.members().front().empty())
        detail::extend_transversal(SymbolSet{}, c.members(), found);

    std::vector<SymbolSet> result;
    result.reserve(found.size());
    for (auto bits : found)
        result.push_back(SymbolSet::from_bits(bits));
    return Clutter::validate(c.ground_size(), std::move(result));
}

} // namespace gammagraph
