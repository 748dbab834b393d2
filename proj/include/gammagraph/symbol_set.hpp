#pragma once

#include "errors.hpp"

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gammagraph {

/// A finite set of positive integer symbols 1..SymbolSet::max_symbol, stored as a bitmask.
///
/// Used for vertex labels, clutter members and anything else that is "a small set of
/// symbols". Ordering (operator<) is lexicographic on the sorted element sequence,
/// which is the ordering used for every emitted family of sets.
class SymbolSet
{
public:
    static constexpr unsigned max_symbol = 64;

    constexpr SymbolSet() = default;

    SymbolSet(std::initializer_list<unsigned> symbols)
    {
        for (auto s : symbols)
            insert(s);
    }

    static auto from_vector(const std::vector<unsigned> & symbols) -> SymbolSet
    {
        SymbolSet result;
        for (auto s : symbols)
            result.insert(s);
        return result;
    }

    static constexpr auto from_bits(std::uint64_t bits) -> SymbolSet
    {
        SymbolSet result;
        result._bits = bits;
        return result;
    }

    /// {1, ..., n}
    static auto range(unsigned n) -> SymbolSet
    {
        if (n > max_symbol)
            throw UnsupportedSize("symbol " + std::to_string(n) + " exceeds " + std::to_string(max_symbol));
        return from_bits(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    auto insert(unsigned s) -> void
    {
        check(s);
        _bits |= bit(s);
    }

    auto erase(unsigned s) -> void
    {
        check(s);
        _bits &= ~bit(s);
    }

    auto contains(unsigned s) const -> bool { return s >= 1 && s <= max_symbol && (_bits & bit(s)); }
    auto size() const -> unsigned { return static_cast<unsigned>(std::popcount(_bits)); }
    auto empty() const -> bool { return _bits == 0; }
    auto bits() const -> std::uint64_t { return _bits; }

    /// Largest symbol, or 0 when empty.
    auto max() const -> unsigned { return _bits ? 64u - static_cast<unsigned>(std::countl_zero(_bits)) : 0u; }
    /// Smallest symbol, or 0 when empty.
    auto min() const -> unsigned { return _bits ? 1u + static_cast<unsigned>(std::countr_zero(_bits)) : 0u; }

    auto intersection_size(const SymbolSet & other) const -> unsigned
    {
        return static_cast<unsigned>(std::popcount(_bits & other._bits));
    }

    auto is_subset_of(const SymbolSet & other) const -> bool { return (_bits & ~other._bits) == 0; }

    friend auto operator|(SymbolSet a, SymbolSet b) -> SymbolSet { return from_bits(a._bits | b._bits); }
    friend auto operator&(SymbolSet a, SymbolSet b) -> SymbolSet { return from_bits(a._bits & b._bits); }
    friend auto operator-(SymbolSet a, SymbolSet b) -> SymbolSet { return from_bits(a._bits & ~b._bits); }

    template <typename F>
    auto for_each(F && f) const -> void
    {
        auto w = _bits;
        while (w) {
            f(1u + static_cast<unsigned>(std::countr_zero(w)));
            w &= w - 1;
        }
    }

    auto to_vector() const -> std::vector<unsigned>
    {
        std::vector<unsigned> result;
        for_each([&](unsigned s) { result.push_back(s); });
        return result;
    }

    /// "{1,2,5}"
    auto to_string() const -> std::string
    {
        std::string result = "{";
        bool first = true;
        for_each([&](unsigned s) {
            if (! first)
                result += ",";
            result += std::to_string(s);
            first = false;
        });
        return result + "}";
    }

    /// "125" when every symbol is a single digit, otherwise the braced form.
    auto to_compact_string() const -> std::string
    {
        if (max() >= 10)
            return to_string();
        std::string result;
        for_each([&](unsigned s) { result += static_cast<char>('0' + s); });
        return result;
    }

    friend constexpr auto operator==(const SymbolSet &, const SymbolSet &) -> bool = default;

    friend auto operator<(const SymbolSet & a, const SymbolSet & b) -> bool
    {
        // the smallest element of the symmetric difference decides, unless one
        // set is a proper prefix of the other
        auto diff = a._bits ^ b._bits;
        if (diff == 0)
            return false;
        auto lowest = diff & (~diff + 1);
        bool in_a = (a._bits & lowest) != 0;
        // if the element belongs to a, a is smaller unless b has run out of elements
        // before it, i.e. b is a proper prefix of a
        if (in_a)
            return (b._bits & ~(lowest - 1)) != 0;
        return (a._bits & ~(lowest - 1)) == 0;
    }

private:
    static auto bit(unsigned s) -> std::uint64_t { return std::uint64_t{1} << (s - 1); }

    static auto check(unsigned s) -> void
    {
        if (s < 1)
            throw ArgumentError("symbols start at 1");
        if (s > max_symbol)
            throw UnsupportedSize("symbol " + std::to_string(s) + " outside 1.." + std::to_string(max_symbol));
    }

    std::uint64_t _bits = 0;
};

/// Orders by size first, then lexicographically.
inline auto size_then_lex_less(const SymbolSet & a, const SymbolSet & b) -> bool
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

} // namespace gammagraph
