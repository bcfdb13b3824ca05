#include <gtest/gtest.h>

#include <random>

#include <subhopf/enumeration.hpp>

#include "oracles.hpp"
#include "test_support.hpp"

using namespace subhopf;
using namespace testing_support;

namespace {

std::set<oracle::RawGraph> raw_set(const std::vector<ConnectedSubgraph>& xs) {
    std::set<oracle::RawGraph> out;
    for (const auto& x : xs) out.insert(oracle::raw(x.graph()));
    return out;
}

}  // namespace

TEST(ConnectedSubgraphs, SquareHasSeventeen) {
    const auto all = enumerate_connected_subgraphs(square());
    ASSERT_EQ(all.size(), 17u);
    using Shape = std::pair<std::size_t, std::size_t>;  // (vertices, edges)
    std::map<Shape, int> by_shape;
    for (const auto& c : all) ++by_shape[{c.vertex_count(), c.edges().size()}];
    EXPECT_EQ(by_shape[Shape(1, 0)], 4);
    EXPECT_EQ(by_shape[Shape(2, 1)], 4);
    EXPECT_EQ(by_shape[Shape(3, 2)], 4);
    EXPECT_EQ(by_shape[Shape(4, 3)], 4);
    EXPECT_EQ(by_shape[Shape(4, 4)], 1);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(ConnectedSubgraphs, SingleEdge) {
    const auto all = enumerate_connected_subgraphs(edge12());
    ASSERT_EQ(all.size(), 3u);
    EXPECT_EQ(all[0], dot(1));
    EXPECT_EQ(all[1], e12());
    EXPECT_EQ(all[2], dot(2));
}

TEST(ConnectedSubgraphs, TriangleMatchesBruteForce) {
    const auto brute = oracle::connected_subgraphs(triangle());
    EXPECT_EQ(brute.size(), 10u);
    EXPECT_EQ(raw_set(enumerate_connected_subgraphs(triangle())), brute);
}

TEST(ConnectedSubgraphs, EmptyGraph) { EXPECT_TRUE(enumerate_connected_subgraphs(Graph()).empty()); }

TEST(ConnectedSubgraphs, BoundedByVertexCount) {
    const auto all = enumerate_connected_subgraphs(square());
    for (std::size_t bound = 0; bound <= 5; ++bound) {
        std::vector<ConnectedSubgraph> expected;
        for (const auto& c : all)
            if (c.vertex_count() <= bound) expected.push_back(c);
        EXPECT_EQ(enumerate_connected_subgraphs(square(), bound), expected) << "bound " << bound;
    }
}

TEST(ConnectedSubgraphs, RandomGraphsMatchBruteForce) {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 40; ++round) {
        const Graph g = random_graph(rng, 1 + rng() % 6, 50);
        const auto listed = enumerate_connected_subgraphs(g);
        EXPECT_EQ(raw_set(listed), oracle::connected_subgraphs(g)) << serialize_graph(g);
        EXPECT_EQ(raw_set(listed).size(), listed.size()) << "duplicates";
        // |calG| = |V| + number of connected edge subsets
        std::size_t edge_subsets = 0;
        for (const auto& c : listed) edge_subsets += c.edges().empty() ? 0 : 1;
        EXPECT_EQ(listed.size(), g.vertex_count() + edge_subsets);
    }
}

TEST(GradedMonomials, SquareLowDegrees) {
    const auto b0 = enumerate_graded_monomials(square(), 0);
    ASSERT_EQ(b0.monomials.size(), 1u);
    EXPECT_TRUE(b0.monomials[0].is_unit());

    const auto b1 = enumerate_graded_monomials(square(), 1);
    ASSERT_EQ(b1.monomials.size(), 4u);
    for (const auto& m : b1.monomials) EXPECT_EQ(m.breadth(), 1u);

    const auto b2 = enumerate_graded_monomials(square(), 2);
    EXPECT_EQ(b2.monomials.size(), 14u);
    std::size_t edges = 0;
    for (const auto& m : b2.monomials) edges += m.breadth() == 1;
    EXPECT_EQ(edges, 4u);
}

TEST(GradedMonomials, DimensionsMatchMultisetOracle) {
    const auto gens = oracle::connected_subgraphs(square());
    const std::size_t expected[] = {1, 4, 14, 40};
    for (std::size_t n = 0; n < 4; ++n) {
        const auto brute = oracle::graded_basis(gens, n);
        EXPECT_EQ(brute.size(), expected[n]);
        EXPECT_EQ(graded_dimension(square(), n), brute.size());
        std::set<oracle::RawMonomial> listed;
        for (const auto& m : enumerate_graded_monomials(square(), n).monomials) listed.insert(oracle::raw(m));
        EXPECT_EQ(listed, brute);
    }
}

TEST(GradedMonomials, SortedDuplicateFreeAndHomogeneous) {
    for (std::size_t n = 0; n <= 4; ++n) {
        const auto b = enumerate_graded_monomials(triangle(), n);
        EXPECT_EQ(b.degree, n);
        EXPECT_TRUE(std::is_sorted(b.monomials.begin(), b.monomials.end()));
        EXPECT_EQ(std::adjacent_find(b.monomials.begin(), b.monomials.end()), b.monomials.end());
        for (const auto& m : b.monomials) EXPECT_EQ(m.degree(), n);
    }
}

TEST(GradedMonomials, SingleVertexPowers) {
    for (std::size_t n = 0; n <= 3; ++n) EXPECT_EQ(graded_dimension(parse_graph("1"), n), 1u);
}

TEST(GradedMonomials, MonotoneUnderHostExtension) {
    const Graph small = path3();
    const Graph big = square();
    for (std::size_t n = 0; n <= 3; ++n) {
        const auto outer = enumerate_graded_monomials(big, n).monomials;
        for (const auto& m : enumerate_graded_monomials(small, n).monomials)
            EXPECT_TRUE(std::binary_search(outer.begin(), outer.end(), m));
    }
}

TEST(GradedMonomials, ProductClosure) {
    BasisCache cache(square());
    for (std::size_t p = 0; p <= 2; ++p)
        for (std::size_t q = 0; q <= 2; ++q) {
            const auto& target = cache.basis(p + q).monomials;
            for (const auto& a : cache.basis(p).monomials)
                for (const auto& b : cache.basis(q).monomials)
                    EXPECT_TRUE(std::binary_search(target.begin(), target.end(), a * b));
        }
}

TEST(BasisCache, AgreesWithDirectEnumeration) {
    BasisCache cache(square());
    EXPECT_EQ(cache.basis(3).monomials, enumerate_graded_monomials(square(), 3).monomials);
    EXPECT_EQ(&cache.basis(3), &cache.basis(3));
    EXPECT_EQ(cache.dimension(2), 14u);
    EXPECT_EQ(cache.generators(2).size(), 8u);
    EXPECT_EQ(cache.generators(4).size(), 17u);
    EXPECT_EQ(cache.monomials_up_to(2).size(), 1u + 4u + 14u);
}
