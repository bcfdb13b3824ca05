#include <gtest/gtest.h>

#include <subhopf/verifier.hpp>

#include "oracles.hpp"
#include "test_support.hpp"

using namespace subhopf;
using namespace testing_support;

namespace {

VertexMap vmap(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> pairs) {
    VertexMap m;
    for (auto [a, b] : pairs) m.emplace(VertexId(a), VertexId(b));
    return m;
}

json without_timing(Report r) {
    r.ms = 0;
    return r.to_json();
}

}  // namespace

TEST(CheckCoalgebra, PassesOnSmallGraphs) {
    for (auto [g, d] : {std::pair{path3(), 3}, std::pair{parse_graph("1"), 3}, std::pair{triangle(), 3}}) {
        Workspace ws(g);
        const Report r = check_coalgebra(ws, d);
        EXPECT_TRUE(r.passed()) << r.to_json().dump();
        EXPECT_GT(r.cases, 0u);
        EXPECT_EQ(r.check, "coalgebra");
        EXPECT_EQ(r.cutoff, static_cast<std::size_t>(d));
        EXPECT_EQ(r.graph_hash, graph_hash(g));
    }
}

TEST(CheckBialgebra, PassesAndIsDeterministic) {
    Workspace ws(path3());
    const Report a = check_bialgebra(ws, 3, 30, 17);
    const Report b = check_bialgebra(ws, 3, 30, 17);
    EXPECT_TRUE(a.passed());
    EXPECT_EQ(a.seed, 17u);
    EXPECT_EQ(without_timing(a), without_timing(b));
}

TEST(CheckHopf, Passes) {
    Workspace ws(path3());
    EXPECT_TRUE(check_hopf(ws, 3).passed());
}

TEST(CheckGrading, PassesAndCountsMatchOracle) {
    Workspace ws(square());
    EXPECT_TRUE(check_grading(ws, 3).passed());
    const auto counts = multiset_counts(ws.bases.generators(4), 4);
    const auto gens = oracle::connected_subgraphs(square());
    for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(counts[n], oracle::graded_basis(gens, n).size());
}

TEST(CheckDuality, Passes) {
    Workspace ws(path3());
    EXPECT_TRUE(check_duality(ws, 3).passed());
}

TEST(CheckFunctor, Passes) {
    const auto rot = validate_hom(square(), square(), vmap({{1, 2}, {2, 3}, {3, 4}, {4, 1}}));
    const auto embed = validate_hom(edge12(), square(), vmap({{1, 1}, {2, 2}}));
    EXPECT_TRUE(check_functor(rot, rot, 20, 1).passed());
    EXPECT_TRUE(check_functor(embed, rot, 20, 1).passed());
    EXPECT_TRUE(check_functor(identity_hom(triangle()), identity_hom(triangle()), 10, 2).passed());
    EXPECT_THROW(check_functor(rot, embed, 5, 1), std::invalid_argument);
}

TEST(CheckSubcoalgebra, Passes) {
    Workspace ws(square());
    EXPECT_TRUE(check_subcoalgebra(ws, edge12(), 3).passed());
    EXPECT_TRUE(check_subcoalgebra(ws, path3(), 3).passed());
    EXPECT_TRUE(check_subcoalgebra(ws, square(), 2).passed());
    EXPECT_THROW(check_subcoalgebra(ws, parse_graph("1 3"), 2), std::invalid_argument);
}

TEST(CheckWordCoassociativity, FailsOnRecordedPath) {
    const Graph g = parse_graph("5 1\n1 3\n3 2\n");
    const Report r = check_word_coassociativity(g, 4);
    ASSERT_FALSE(r.passed());
    // The first failure is the minimal witness: the whole path with slots {5,2} | {1} | {3}.
    EXPECT_NE(r.failures.front().input.find("{1,2,3,5|1-3,1-5,2-3}"), std::string::npos);
    EXPECT_NE(r.failures.front().input.find("{1} (x) {2}*{5} (x) {3}"), std::string::npos);
    Workspace ws(g);
    EXPECT_TRUE(check_coalgebra(ws, 4).passed());
}

TEST(CheckWordCoassociativity, PassesWhereWordsAgree) {
    EXPECT_TRUE(check_word_coassociativity(path3(), 3).passed());
}

TEST(Report, FailureWitnessDetected) {
    detail::ReportBuilder b("probe", square(), 1, 0);
    b.expect_equal("x", unit(1), unit(2));
    b.expect("y", true);
    const Report r = b.finish();
    ASSERT_EQ(r.failures.size(), 1u);
    EXPECT_EQ(r.failures[0].input, "x");
    EXPECT_EQ(r.failures[0].expected, "1");
    EXPECT_EQ(r.failures[0].actual, "2");
    EXPECT_EQ(r.cases, 2u);
    const json j = r.to_json();
    for (const char* key : {"check", "graph_hash", "cutoff", "seed", "cases", "failures", "ms"}) EXPECT_TRUE(j.contains(key));
}
