#include "label_forms.hpp"
#include "oracles.hpp"
#include "seed.hpp"

#include <gammagraph/families.hpp>
#include <gammagraph/graph6.hpp>
#include <gammagraph/fixtures.hpp>
#include <gammagraph/labelling.hpp>
#include <gammagraph/search.hpp>

#include <gtest/gtest.h>

using namespace gammagraph;

namespace {
auto s(std::initializer_list<unsigned> symbols) -> SymbolSet
{
    return SymbolSet::from_vector(symbols);
}
}

TEST(SymbolSet, Basics)
{
    auto a = s({1, 2, 5});
    EXPECT_EQ(a.size(), 3u);
    EXPECT_EQ(a.min(), 1u);
    EXPECT_EQ(a.max(), 5u);
    EXPECT_EQ(a.to_string(), "{1,2,5}");
    EXPECT_EQ(a.to_compact_string(), "125");
    EXPECT_EQ(s({1, 12}).to_compact_string(), "{1,12}");
    EXPECT_TRUE(s({1, 2, 5}) < s({1, 3}));
    EXPECT_TRUE(s({1, 3}) < s({2}));
    EXPECT_TRUE(size_then_lex_less(s({2}), s({1, 3})));
    EXPECT_EQ(a.intersection_size(s({2, 5, 7})), 2u);
    EXPECT_THROW(s({0}), ArgumentError);
    EXPECT_THROW(s({65}), UnsupportedSize);
}

TEST(Labelling, Validity)
{
    auto g = path_graph(3);
    EXPECT_TRUE(is_valid_labelling(g, {2, {s({1, 2}), s({1, 3}), s({3, 4})}}).valid);
    auto bad = is_valid_labelling(g, {2, {s({1, 2}), s({1, 3}), s({1, 4})}});
    ASSERT_FALSE(bad.valid);
    EXPECT_EQ(bad.violation->kind, LabellingViolation::Kind::adjacency_mismatch);
    EXPECT_EQ(is_valid_labelling(g, {2, {s({1, 2}), s({1, 2}), s({3, 4})}}).violation->kind,
        LabellingViolation::Kind::duplicate);
    EXPECT_EQ(is_valid_labelling(g, {2, {s({1, 2}), s({1}), s({3, 4})}}).violation->kind,
        LabellingViolation::Kind::wrong_size);
    EXPECT_THROW(is_valid_labelling(g, {2, {s({1, 2})}}), ArgumentError);
}

TEST(Labelling, MiddleCandidates)
{
    EXPECT_EQ(middle_label_candidates(s({1, 2}), s({3, 4})), (std::vector{s({1, 3}), s({1, 4}), s({2, 3}), s({2, 4})}));
    EXPECT_EQ(middle_label_candidates(s({1, 2, 5}), s({3, 4, 5})),
        (std::vector{s({1, 3, 5}), s({1, 4, 5}), s({2, 3, 5}), s({2, 4, 5})}));
    EXPECT_THROW(middle_label_candidates(s({1, 2}), s({1, 3})), PreconditionError);
    EXPECT_THROW(middle_label_candidates(s({1, 2}), s({3})), PreconditionError);
}

TEST(Labelling, TriangleForms)
{
    EXPECT_EQ(triangle_form(s({1, 2}), s({1, 3}), s({2, 3})), TriangleForm::alpha);
    EXPECT_EQ(triangle_form(s({1, 9}), s({2, 9}), s({3, 9})), TriangleForm::beta);
    EXPECT_EQ(triangle_form(s({1}), s({2}), s({3})), TriangleForm::beta);
    EXPECT_EQ(triangle_form(s({1, 2}), s({3, 4}), s({5, 6})), TriangleForm::neither);
}

TEST(Labelling, Wheels)
{
    EXPECT_EQ(wheel_labelling(9), fixtures::wheel9_labelling());
    for (unsigned n : {4u, 5u, 7u, 9u, 11u, 13u})
        EXPECT_TRUE(is_valid_labelling(wheel_graph(n), wheel_labelling(n)).valid) << n;
    EXPECT_THROW(wheel_labelling(6), ArgumentError);
    EXPECT_THROW(wheel_labelling(3), ArgumentError);
}

TEST(Labelling, Stars)
{
    for (unsigned m = 1; m <= 8; ++m)
        EXPECT_TRUE(is_valid_labelling(fan_graph(m, 1), star_labelling(m)).valid) << m;
}

TEST(Labelling, Products)
{
    auto c4 = cycle_graph(4);
    Labelling lc4{2, {s({1, 2}), s({2, 3}), s({3, 4}), s({1, 4})}};
    auto k3 = complete_graph(3);
    Labelling lk3{1, {s({1}), s({2}), s({3})}};
    auto prod = product_labelling(c4, lc4, k3, lk3);
    EXPECT_EQ(prod.k, 3u);
    EXPECT_TRUE(is_valid_labelling(cartesian_product(c4, k3), prod).valid);
    EXPECT_THROW(product_labelling(c4, lk3, k3, lk3), ArgumentError);
}

TEST(Labelling, PendantReduction)
{
    auto triangle_with_tail = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
    auto r = pendant_reduction(triangle_with_tail);
    EXPECT_EQ(r.reduct.size(), 3u);
    EXPECT_EQ(r.kept, (std::vector<Vertex>{0, 1, 2}));
    EXPECT_EQ(r.deleted.size(), 2u);
    EXPECT_EQ(reduce_pendants(path_graph(6)).size(), 0u);
}

TEST(Labelling, RestorePendants)
{
    std::mt19937_64 rng(test_seed());
    int restored = 0;
    for (int i = 0; i < 400; ++i) {
        auto g = oracle::random_graph(rng, 2 + rng() % 8, 0.25);
        auto r = pendant_reduction(g);
        Labelling base{1, {}};
        if (! r.reduct.empty()) {
            if (! is_connected(r.reduct))
                continue;
            auto outcome = find_labelling(r.reduct, SearchBudget::defaults_for(r.reduct));
            if (outcome.status != SearchStatus::found)
                continue;
            base = *outcome.labelling;
        }
        auto full = restore_pendants(g, r, base);
        EXPECT_TRUE(is_valid_labelling(g, full).valid) << write_graph6(g);
        ++restored;
    }
    EXPECT_GT(restored, 100);
}

TEST(Labelling, CommonSymbolAndOffset)
{
    Labelling l{1, {s({1}), s({2})}};
    auto padded = add_common_symbol(l);
    EXPECT_EQ(padded.k, 2u);
    EXPECT_EQ(padded.labels[0], s({1, 3}));
    EXPECT_EQ(offset_symbols(l, 4).labels[1], s({6}));
    EXPECT_EQ(max_symbol(padded), 3u);
}

TEST(Labelling, FixtureLabellingsValidate)
{
    EXPECT_TRUE(is_valid_labelling(fixtures::theta_graph(), fixtures::theta_graph_labelling()).valid);
    EXPECT_TRUE(is_valid_labelling(fixtures::theta_graph_with_spoke(), fixtures::theta_graph_with_spoke_labelling()).valid);
    EXPECT_TRUE(is_valid_labelling(fixtures::hexagon_with_ear(), fixtures::hexagon_with_ear_labelling()).valid);
    EXPECT_FALSE(is_valid_labelling(fixtures::theta_graph_with_chord(), fixtures::theta_graph_labelling()).valid);
}

TEST(Labelling, FixtureLabellingsConformToForms)
{
    EXPECT_EQ(forms::violations(fixtures::theta_graph(), fixtures::theta_graph_labelling()), "");
    EXPECT_EQ(forms::violations(fixtures::theta_graph_with_spoke(), fixtures::theta_graph_with_spoke_labelling()), "");
    EXPECT_EQ(forms::violations(wheel_graph(9), wheel_labelling(9)), "");
}
