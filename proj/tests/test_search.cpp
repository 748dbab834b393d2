#include "label_forms.hpp"
#include "oracles.hpp"
#include "seed.hpp"

#include <gammagraph/enumerate.hpp>
#include <gammagraph/families.hpp>
#include <gammagraph/graph6.hpp>
#include <gammagraph/fixtures.hpp>
#include <gammagraph/search.hpp>

#include <gtest/gtest.h>

using namespace gammagraph;

TEST(Search, SmallFamilies)
{
    auto k4 = find_labelling(complete_graph(4), {4, 1000});
    ASSERT_EQ(k4.status, SearchStatus::found);
    EXPECT_EQ(k4.labelling->k, 1u);
    auto c5 = find_labelling(cycle_graph(5), {4, 100000});
    ASSERT_EQ(c5.status, SearchStatus::found);
    EXPECT_EQ(c5.labelling->k, 2u);
    EXPECT_EQ(find_labelling(complete_bipartite_graph(2, 3), {6, 1000000}).status, SearchStatus::absent);
    EXPECT_EQ(find_labelling(wheel_graph(6), {6, 1000000}).status, SearchStatus::absent);
}

TEST(Search, FixedK)
{
    EXPECT_EQ(search_labelling_at(cycle_graph(5), 1).status, SearchStatus::absent);
    EXPECT_EQ(search_labelling_at(cycle_graph(5), 2).status, SearchStatus::found);
    EXPECT_THROW(search_labelling_at(cycle_graph(5), 0), ArgumentError);
}

TEST(Search, Errors)
{
    EXPECT_THROW(find_labelling(Graph::from_edges(3, {{0, 1}}), {3, 100}), PreconditionError);
    EXPECT_THROW(find_labelling(path_graph(3), {0, 100}), ArgumentError);
}

TEST(Search, BudgetExhaustion)
{
    auto outcome = find_labelling(wheel_graph(10), {10, 50});
    EXPECT_EQ(outcome.status, SearchStatus::budget_exhausted);
    EXPECT_GE(outcome.frontier_k, 1u);
    EXPECT_FALSE(outcome.labelling);
}

TEST(Search, FoundLabellingsAreValid)
{
    for (unsigned n = 1; n <= 6; ++n)
        for (const auto & g : enumerate_connected_graphs(n)) {
            auto outcome = find_labelling(g, SearchBudget::defaults_for(g));
            ASSERT_NE(outcome.status, SearchStatus::budget_exhausted);
            if (outcome.status == SearchStatus::found) {
                EXPECT_TRUE(is_valid_labelling(g, *outcome.labelling).valid) << write_graph6(g);
            }
        }
}

TEST(Search, AgreesWithBruteForce)
{
    for (unsigned n = 1; n <= 4; ++n)
        for (const auto & g : enumerate_connected_graphs(n))
            for (unsigned k = 1; k <= 3; ++k)
                EXPECT_EQ(search_labelling_at(g, k).status == SearchStatus::found, oracle::labellable(g, k))
                    << write_graph6(g) << " k=" << k;
}

TEST(Search, AgreesWithBruteForceOnFiveVertices)
{
    for (const auto & g : enumerate_connected_graphs(5))
        for (unsigned k = 1; k <= 3; ++k)
            EXPECT_EQ(search_labelling_at(g, k).status == SearchStatus::found, oracle::labellable(g, k))
                << write_graph6(g) << " k=" << k;
}

TEST(Search, PruningDoesNotChangeAnswers)
{
    SearchOptions plain{false, false};
    for (unsigned n = 2; n <= 6; ++n)
        for (const auto & g : enumerate_connected_graphs(n))
            for (unsigned k = 1; k <= 4; ++k) {
                auto fast = search_labelling_at(g, k);
                auto slow = search_labelling_at(g, k, 100'000'000, plain);
                EXPECT_EQ(fast.status, slow.status) << write_graph6(g) << " k=" << k;
            }
}

TEST(Search, AgreesWithBruteForceOnSixVertices)
{
    for (const auto & g : enumerate_connected_graphs(6))
        for (unsigned k = 1; k <= 3; ++k)
            EXPECT_EQ(search_labelling_at(g, k).status == SearchStatus::found, oracle::labellable(g, k))
                << write_graph6(g) << " k=" << k;
}

TEST(Search, PruningDoesNotChangeAnswersOnSevenVertices)
{
    SearchOptions plain{false, false};
    for (const auto & g : enumerate_connected_graphs(7))
        for (unsigned k = 1; k <= 3; ++k)
            EXPECT_EQ(search_labelling_at(g, k).status, search_labelling_at(g, k, 100'000'000, plain).status)
                << write_graph6(g) << " k=" << k;
}

TEST(Search, WheelsWithoutPruning)
{
    SearchOptions plain{false, false};
    for (unsigned n = 6; n <= 10; ++n)
        for (unsigned k = 1; k <= 5; ++k)
            EXPECT_EQ(search_labelling_at(wheel_graph(n), k).status,
                search_labelling_at(wheel_graph(n), k, 100'000'000, plain).status)
                << "W_" << n << " k=" << k;
}

TEST(Search, LabellableStaysLabellableAtLargerK)
{
    for (const auto & g : enumerate_connected_graphs(5)) {
        bool seen = false;
        for (unsigned k = 1; k <= 5; ++k) {
            bool found = search_labelling_at(g, k).status == SearchStatus::found;
            EXPECT_TRUE(found || ! seen) << write_graph6(g);
            seen = seen || found;
        }
    }
}

TEST(Search, FoundLabellingsConformToForms)
{
    for (unsigned n = 3; n <= 6; ++n)
        for (const auto & g : enumerate_connected_graphs(n)) {
            auto outcome = find_labelling(g, SearchBudget::defaults_for(g));
            if (outcome.status != SearchStatus::found)
                continue;
            EXPECT_EQ(forms::violations(g, *outcome.labelling), "") << write_graph6(g);
            // The same labelling with extra shared symbols must conform too.
            auto padded = add_common_symbol(add_common_symbol(*outcome.labelling));
            EXPECT_EQ(forms::violations(g, padded), "") << write_graph6(g);
        }
}

TEST(Search, RandomGraphs)
{
    std::mt19937_64 rng(test_seed());
    for (int i = 0; i < 60; ++i) {
        auto g = oracle::random_graph(rng, 4 + rng() % 6, 0.4);
        if (! is_connected(g))
            continue;
        auto outcome = find_labelling(g, SearchBudget::defaults_for(g));
        if (outcome.status == SearchStatus::found) {
            EXPECT_TRUE(is_valid_labelling(g, *outcome.labelling).valid);
        }
    }
}
