#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace gammagraph {

/// Dynamic bitset over vertex indices 0..universe()-1.
class VertexSet
{
public:
    static constexpr std::size_t word_bits = 64;

    VertexSet() = default;

    explicit VertexSet(std::size_t universe) :
        _universe(universe),
        _words((universe + word_bits - 1) / word_bits, 0)
    {
    }

    auto universe() const -> std::size_t { return _universe; }

    auto set(std::size_t v) -> void { _words[v / word_bits] |= bit(v); }
    auto reset(std::size_t v) -> void { _words[v / word_bits] &= ~bit(v); }
    auto test(std::size_t v) const -> bool { return (_words[v / word_bits] & bit(v)) != 0; }

    auto count() const -> std::size_t
    {
        std::size_t result = 0;
        for (auto w : _words)
            result += static_cast<std::size_t>(std::popcount(w));
        return result;
    }

    auto none() const -> bool
    {
        return std::all_of(_words.begin(), _words.end(), [](auto w) { return w == 0; });
    }

    auto full() const -> bool { return count() == _universe; }

    auto intersects(const VertexSet & other) const -> bool
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            if (_words[i] & other._words[i])
                return true;
        return false;
    }

    auto operator|=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] |= other._words[i];
        return *this;
    }

    auto operator&=(const VertexSet & other) -> VertexSet &
    {
        for (std::size_t i = 0; i < _words.size(); ++i)
            _words[i] &= other._words[i];
        return *this;
    }

    template <typename F>
    auto for_each(F && f) const -> void
    {
        for (std::size_t i = 0; i < _words.size(); ++i) {
            auto w = _words[i];
            while (w) {
                auto b = static_cast<std::size_t>(std::countr_zero(w));
                f(i * word_bits + b);
                w &= w - 1;
            }
        }
    }

    auto to_vector() const -> std::vector<std::size_t>
    {
        std::vector<std::size_t> result;
        for_each([&](std::size_t v) { result.push_back(v); });
        return result;
    }

    auto words() const -> const std::vector<std::uint64_t> & { return _words; }

    friend auto operator==(const VertexSet &, const VertexSet &) -> bool = default;

private:
    static auto bit(std::size_t v) -> std::uint64_t { return std::uint64_t{1} << (v % word_bits); }

    std::size_t _universe = 0;
    std::vector<std::uint64_t> _words;
};

} // namespace gammagraph
