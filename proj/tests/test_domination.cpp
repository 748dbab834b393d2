#include "oracles.hpp"
#include "seed.hpp"

#include <gammagraph/domination.hpp>
#include <gammagraph/families.hpp>
#include <gammagraph/fixtures.hpp>
#include <gammagraph/gamma_graph.hpp>
#include <gammagraph/graph6.hpp>
#include <gammagraph/labelling.hpp>

#include <gtest/gtest.h>

using namespace gammagraph;

namespace {
auto words(const Graph & g, const std::vector<VertexList> & sets) -> std::vector<std::string>
{
    std::vector<std::string> out;
    for (const auto & s : sets)
        out.push_back(render_tag(g, s));
    return out;
}
}

TEST(Domination, ExampleGraphDistanceOne)
{
    auto g = fixtures::domination_example();
    auto r = min_dominating_sets(g, 1);
    EXPECT_EQ(r.gamma, 2u);
    EXPECT_EQ(words(g, r.min_sets), (std::vector<std::string>{"15", "25", "36", "46", "56"}));
    EXPECT_EQ(domination_number(g, 1), 2u);
}

TEST(Domination, ExampleGraphDistanceTwo)
{
    auto g = fixtures::domination_example();
    auto r = min_dominating_sets(g, 2);
    EXPECT_EQ(r.gamma, 1u);
    EXPECT_EQ(words(g, r.min_sets), (std::vector<std::string>{"2", "3", "5", "6", "7"}));
}

TEST(Domination, Families)
{
    EXPECT_EQ(domination_number(path_graph(10), 1), 4u);
    EXPECT_EQ(domination_number(path_graph(10), 2), 2u);
    EXPECT_EQ(domination_number(cycle_graph(9), 1), 3u);
    EXPECT_EQ(min_dominating_sets(complete_graph(5), 1).min_sets.size(), 5u);
    EXPECT_EQ(min_dominating_sets(cycle_graph(6), 1).min_sets.size(), 3u);
    auto disconnected = Graph::from_edges(4, {{0, 1}});
    EXPECT_EQ(domination_number(disconnected, 5), 3u);
}

TEST(Domination, IsDominating)
{
    auto g = path_graph(5);
    std::vector<Vertex> middle{2};
    EXPECT_FALSE(is_distance_d_dominating(g, middle, 1));
    EXPECT_TRUE(is_distance_d_dominating(g, middle, 2));
}

TEST(Domination, Errors)
{
    EXPECT_THROW(min_dominating_sets(path_graph(3), 0), ArgumentError);
    EXPECT_THROW(min_dominating_sets(Graph::from_edges(0, {}), 1), ArgumentError);
    EXPECT_THROW(min_dominating_sets(Graph::from_edges(24, {}), 1, {1000}), ResourceError);
}

TEST(Domination, MatchesPowersetOracle)
{
    std::mt19937_64 rng(test_seed());
    for (int i = 0; i < 300; ++i) {
        auto n = 1 + rng() % 8;
        auto g = oracle::random_graph(rng, n, 0.15 + 0.1 * (rng() % 5));
        auto d = 1 + static_cast<unsigned>(rng() % 3);
        auto expected = oracle::min_dominating_sets(g, d);
        auto r = min_dominating_sets(g, d);
        EXPECT_EQ(r.min_sets, expected) << write_graph6(g) << " d=" << d;
        EXPECT_EQ(r.gamma, expected.front().size());
    }
}

TEST(GammaGraph, ExampleGraph)
{
    auto g = fixtures::domination_example();
    auto gg = build_gamma_graph(g, 1);
    EXPECT_EQ(gg.graph.names(), (std::vector<std::string>{"15", "25", "36", "46", "56"}));
    auto drawn = Graph::from_edges(5, {{0, 1}, {0, 4}, {1, 4}, {4, 2}, {4, 3}, {2, 3}}, gg.graph.names());
    EXPECT_EQ(gg.graph, drawn);

    auto gg2 = build_gamma_graph(g, 2);
    EXPECT_EQ(gg2.graph.names(), (std::vector<std::string>{"2", "3", "5", "6", "7"}));
    EXPECT_TRUE(gg2.graph.same_adjacency(complete_graph(5)));
}

TEST(GammaGraph, MultiCharacterNamesAreCommaJoined)
{
    auto g = path_graph(12);
    auto gg = build_gamma_graph(g, 1);
    EXPECT_EQ(gg.gamma, 4u);
    EXPECT_EQ(gg.graph.name(0), "2,5,8,11");
}

TEST(GammaGraph, FromSetsValidates)
{
    auto g = path_graph(3);
    EXPECT_THROW(gamma_graph_from_sets(g, {{0}, {0, 1}}, 1), ArgumentError);
}

TEST(GammaGraph, TagsFormLabelling)
{
    std::mt19937_64 rng(test_seed() + 1);
    for (int i = 0; i < 200; ++i) {
        auto g = oracle::random_graph(rng, 2 + rng() % 7, 0.3);
        auto d = 1 + static_cast<unsigned>(rng() % 3);
        auto gg = build_gamma_graph(g, d);
        Labelling l{static_cast<unsigned>(gg.gamma), {}};
        for (const auto & tag : gg.tags) {
            SymbolSet s;
            for (auto v : tag)
                s.insert(static_cast<unsigned>(v + 1));
            l.labels.push_back(s);
        }
        EXPECT_TRUE(is_valid_labelling(gg.graph, l).valid) << write_graph6(g);
    }
}
