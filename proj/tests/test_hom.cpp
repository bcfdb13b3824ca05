#include <gtest/gtest.h>

#include <subhopf/hom.hpp>

#include "test_support.hpp"

using namespace subhopf;
using namespace testing_support;

namespace {

VertexMap vmap(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> pairs) {
    VertexMap m;
    for (auto [a, b] : pairs) m.emplace(VertexId(a), VertexId(b));
    return m;
}

GraphHom rotation() { return validate_hom(square(), square(), vmap({{1, 2}, {2, 3}, {3, 4}, {4, 1}})); }
GraphHom fold() { return validate_hom(path3(), edge12(), vmap({{1, 1}, {2, 2}, {3, 1}})); }

}  // namespace

TEST(ValidateHom, Examples) {
    EXPECT_NO_THROW(validate_hom(edge12(), square(), vmap({{1, 1}, {2, 2}})));
    EXPECT_NO_THROW(rotation());
    EXPECT_THROW(validate_hom(edge12(), square(), vmap({{1, 1}, {2, 3}})), std::invalid_argument);
}

TEST(ValidateHom, Errors) {
    EXPECT_THROW(validate_hom(edge12(), square(), vmap({{1, 1}})), std::invalid_argument);
    EXPECT_THROW(validate_hom(edge12(), square(), vmap({{1, 1}, {2, 7}})), std::invalid_argument);
    EXPECT_THROW(validate_hom(edge12(), edge12(), vmap({{1, 1}, {2, 1}})), std::invalid_argument);
}

TEST(ImageSubgraph, Examples) {
    EXPECT_EQ(image_subgraph(rotation(), sub("1 2\n2 3")), sub("2 3\n3 4"));
    for (const auto& c : enumerate_connected_subgraphs(square())) EXPECT_EQ(image_subgraph(identity_hom(square()), c), c);
    EXPECT_EQ(image_subgraph(fold(), sub("1 2\n2 3")), e12());
    EXPECT_THROW(image_subgraph(rotation(), sub("1 3")), std::invalid_argument);
}

TEST(ImageSubgraph, ConnectedAndInsideTarget) {
    for (const GraphHom& f : {rotation(), fold(), validate_hom(edge12(), square(), vmap({{1, 1}, {2, 2}}))})
        for (const auto& c : enumerate_connected_subgraphs(f.source())) {
            const auto im = image_subgraph(f, c);
            EXPECT_TRUE(is_connected(im.graph()));
            EXPECT_TRUE(is_subgraph_of(im.graph(), f.target()));
        }
}

TEST(AlgebraMorphism, Examples) {
    const Element x = element(Monomial{dot(1), e12()}, 3) + unit(2);
    EXPECT_EQ(apply_algebra_morphism(identity_hom(square()), x), x);
    EXPECT_EQ(apply_algebra_morphism(rotation(), Monomial{dot(1), e12()}), (Monomial{dot(2), sub("2 3")}));
    EXPECT_EQ(apply_algebra_morphism(fold(), Monomial{e12(), sub("2 3")}), (Monomial{e12(), e12()}));
    EXPECT_EQ(apply_algebra_morphism(rotation(), unit(1)), unit(1));
    EXPECT_THROW(apply_algebra_morphism(fold(), Monomial{dot(4)}), std::invalid_argument);
}

TEST(AlgebraMorphism, Multiplicative) {
    const Element a = element(Monomial{dot(1), e12()}) - element(Monomial{sub("3 4")}, 2);
    const Element b = element(Monomial{sub("1 2\n1 4")}) + unit(5);
    const auto f = rotation();
    EXPECT_EQ(apply_algebra_morphism(f, multiply(a, b)), multiply(apply_algebra_morphism(f, a), apply_algebra_morphism(f, b)));
}

TEST(ComposeHom, Examples) {
    const auto r2 = compose_hom(rotation(), rotation());
    EXPECT_EQ(r2.vertex_map(), vmap({{1, 3}, {2, 4}, {3, 1}, {4, 2}}));
    const auto f = validate_hom(edge12(), square(), vmap({{1, 1}, {2, 2}}));
    EXPECT_EQ(compose_hom(identity_hom(square()), f).vertex_map(), f.vertex_map());
    EXPECT_THROW(compose_hom(rotation(), fold()), std::invalid_argument);
}

TEST(ComposeHom, FunctorLaw) {
    const auto f = validate_hom(edge12(), square(), vmap({{1, 1}, {2, 2}}));
    const auto g = rotation();
    const Element x = element(Monomial{dot(1), e12()}, -2) + element(Monomial{dot(2), dot(2)});
    EXPECT_EQ(apply_algebra_morphism(compose_hom(g, f), x), apply_algebra_morphism(g, apply_algebra_morphism(f, x)));
}

TEST(ParseVertexMap, Format) {
    EXPECT_EQ(parse_vertex_map("# rotate\n1 -> 2\n2->3\n  3 ->  4 # c\n"), vmap({{1, 2}, {2, 3}, {3, 4}}));
    EXPECT_THROW(parse_vertex_map("1 2"), input_error);
    EXPECT_THROW(parse_vertex_map("1 -> x"), input_error);
    EXPECT_THROW(parse_vertex_map("1 -> 2\n1 -> 3"), input_error);
}
