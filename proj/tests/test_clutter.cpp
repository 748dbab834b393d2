#include "oracles.hpp"
#include "seed.hpp"

#include <gammagraph/clutter.hpp>

#include <gtest/gtest.h>

using namespace gammagraph;

namespace {
auto sets(std::initializer_list<std::initializer_list<unsigned>> list) -> std::vector<SymbolSet>
{
    std::vector<SymbolSet> out;
    for (auto s : list)
        out.push_back(SymbolSet::from_vector(s));
    return out;
}

auto to_masks(const Clutter & c) -> std::vector<std::uint64_t>
{
    std::vector<std::uint64_t> out;
    for (const auto & m : c.members())
        out.push_back(m.bits());
    std::sort(out.begin(), out.end());
    return out;
}

auto from_masks(unsigned n, const std::vector<std::uint64_t> & masks) -> Clutter
{
    std::vector<SymbolSet> members;
    for (auto m : masks)
        members.push_back(SymbolSet::from_bits(m));
    return Clutter::validate(n, members);
}
}

TEST(Clutter, ValidateSortsBySizeThenLex)
{
    auto c = Clutter::validate(4, sets({{3, 4}, {1}, {2}}));
    EXPECT_EQ(c.members(), sets({{1}, {2}, {3, 4}}));
    EXPECT_EQ(c.ground_size(), 4u);
}

TEST(Clutter, ValidateRejects)
{
    EXPECT_THROW(Clutter::validate(3, sets({{1, 2}, {1, 2, 3}})), PreconditionError);
    EXPECT_THROW(Clutter::validate(3, sets({{1, 2}, {1, 2}})), PreconditionError);
    EXPECT_THROW(Clutter::validate(3, sets({{1, 4}})), ArgumentError);
    EXPECT_THROW(Clutter::validate(3, {SymbolSet{}, SymbolSet::from_vector({1})}), PreconditionError);
    EXPECT_NO_THROW(Clutter::validate(3, {SymbolSet{}}));
    try {
        Clutter::validate(4, sets({{1, 3}, {1, 2, 3}}));
        FAIL();
    }
    catch (const PreconditionError & e) {
        EXPECT_NE(std::string(e.what()).find("{1,3}"), std::string::npos);
    }
}

TEST(Blocker, Examples)
{
    EXPECT_EQ(blocker(Clutter::validate(4, sets({{1, 2, 3}, {1, 2, 4}}))).members(), sets({{1}, {2}, {3, 4}}));
    auto big = Clutter::validate(8, sets({{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 4, 6}, {2, 3, 5, 7}, {3, 5, 7, 8}}));
    EXPECT_EQ(blocker(big).members(),
        sets({{1, 3}, {1, 5}, {1, 7}, {2, 3}, {2, 5}, {2, 7}, {2, 8}, {3, 4}, {3, 6}, {4, 5}}));
}

TEST(Blocker, EdgeCases)
{
    EXPECT_THROW(blocker(Clutter::validate(3, {})), PreconditionError);
    EXPECT_TRUE(blocker(Clutter::validate(3, {SymbolSet{}})).empty());
    EXPECT_EQ(blocker(Clutter::validate(3, sets({{1, 2, 3}}))).members(), sets({{1}, {2}, {3}}));
}

TEST(Blocker, MatchesOracleExhaustively)
{
    for (unsigned n = 1; n <= 4; ++n)
        for (const auto & masks : oracle::all_clutters(n)) {
            auto c = from_masks(n, masks);
            auto b = blocker(c);
            EXPECT_EQ(to_masks(b), oracle::blocker(n, masks));
            EXPECT_EQ(blocker(b), c);
        }
}

TEST(Blocker, InvolutionRandom)
{
    std::mt19937_64 rng(test_seed());
    for (int i = 0; i < 300; ++i) {
        unsigned n = 1 + rng() % 10;
        std::vector<SymbolSet> members;
        for (int tries = 1 + rng() % 12; tries > 0; --tries) {
            auto s = SymbolSet::from_bits(rng() & ((1ull << n) - 1));
            if (s.empty())
                continue;
            if (std::any_of(members.begin(), members.end(),
                    [&](const SymbolSet & m) { return m.is_subset_of(s) || s.is_subset_of(m); }))
                continue;
            members.push_back(s);
        }
        if (members.empty())
            continue;
        auto c = Clutter::validate(n, members);
        auto b = blocker(c);
        if (n <= 8) {
            std::vector<std::uint64_t> masks;
            for (const auto & m : members)
                masks.push_back(m.bits());
            EXPECT_EQ(to_masks(b), oracle::blocker(n, masks));
        }
        EXPECT_EQ(blocker(b), c);
    }
}
