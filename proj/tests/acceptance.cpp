// Acceptance suite: one PASS/FAIL line per criterion; nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <subhopf/subhopf.hpp>

#include "oracles.hpp"

using namespace subhopf;

namespace {

Graph square() { return parse_graph("1 2\n2 3\n3 4\n1 4\n"); }
Graph triangle() { return parse_graph("1 2\n2 3\n1 3\n"); }
Graph path3() { return parse_graph("1 2\n2 3\n"); }
ConnectedSubgraph dot(std::uint64_t v) { return ConnectedSubgraph::vertex(v); }
ConnectedSubgraph sub(const char* text) { return ConnectedSubgraph(parse_graph(text)); }
TensorElement tens(const Monomial& a, const Monomial& b) { return TensorElement(MonomialPair{a, b}); }

VertexMap vmap(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> pairs) {
    VertexMap m;
    for (auto [a, b] : pairs) m.emplace(VertexId(a), VertexId(b));
    return m;
}

struct Outcome {
    bool ok = true;
    std::string note;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) note = what;
        ok = ok && cond;
    }
    void require(const Report& r) {
        require(r.passed(), r.check + " on " + r.graph_hash + ": " +
                                (r.failures.empty() ? "" : r.failures.front().input));
    }
};

Outcome subgraph_counts() {
    Outcome o;
    o.require(enumerate_connected_subgraphs(square()).size() == 17, "square count");
    o.require(enumerate_connected_subgraphs(parse_graph("1 2")).size() == 3, "edge count");
    return o;
}

Outcome edge_coproduct() {
    Outcome o;
    HopfAlgebra h(square());
    const ConnectedSubgraph e = sub("1 2");
    const TensorElement expected = tens(Monomial{e}, {}) + tens({}, Monomial{e}) + tens(Monomial{dot(1)}, Monomial{dot(2)}) +
                                   tens(Monomial{dot(2)}, Monomial{dot(1)});
    const auto d = h.coproduct(e);
    o.require(d == expected && d.size() == 4, render(d));
    return o;
}

Outcome edge_squared_coproduct() {
    Outcome o;
    HopfAlgebra h(square());
    const ConnectedSubgraph e = sub("1 2");
    const Monomial ee{e, e};
    const auto d = h.coproduct(ee);
    o.require(d.coefficient_sum() == 16, "coefficient sum");
    o.require(d.coefficient(MonomialPair{Monomial{dot(1)}, Monomial{dot(2), e}}) == 2, "merged coefficient");
    const auto brute = oracle::coproduct(oracle::raw(ee));
    o.require(d.size() == brute.size() && oracle::raw(d) == brute, "distinct terms vs brute force");
    return o;
}

Outcome coalgebra() {
    Outcome o;
    for (const Graph& g : {square(), triangle(), path3()}) {
        Workspace ws(g);
        o.require(check_coalgebra(ws, 4));
    }
    return o;
}

Outcome bialgebra() {
    Outcome o;
    Workspace ws(square());
    o.require(check_bialgebra(ws, 4, 100, 1));
    return o;
}

Outcome antipode() {
    Outcome o;
    Workspace ws(square());
    o.require(check_hopf(ws, 4));
    const auto& h = ws.algebra;
    o.require(h.antipode_recursive(element(Monomial{dot(1)})) == element(Monomial{dot(1)}, -1), "S of a vertex");
    const Element s_edge = element(Monomial{sub("1 2")}, -1) + element(Monomial{dot(1), dot(2)}, 2);
    o.require(h.antipode_recursive(element(Monomial{sub("1 2")})) == s_edge, "S of an edge");
    o.require(h.antipode_series(element(Monomial{sub("1 2")})) == s_edge, "series S of an edge");
    return o;
}

Outcome grading() {
    Outcome o;
    Workspace ws(square());
    const auto gens = oracle::connected_subgraphs(square());
    const std::size_t expected[] = {1, 4, 14, 40};
    for (std::size_t n = 0; n < 4; ++n) {
        o.require(oracle::graded_basis(gens, n).size() == expected[n], "oracle dimension");
        o.require(ws.bases.dimension(n) == expected[n], "dimension " + std::to_string(n));
    }
    o.require(check_grading(ws, 4));
    return o;
}

Outcome duality() {
    Outcome o;
    Workspace ws(square());
    o.require(check_duality(ws, 3));
    const DualElement z = dual_product(ws.algebra, ws.bases, Monomial{dot(3)}, Monomial{sub("1 2")});
    o.require(z == dual_basis(Monomial{dot(3), sub("1 2")}) + dual_basis(Monomial{sub("1 2\n2 3")}), render(z));
    return o;
}

Outcome functor() {
    Outcome o;
    const auto rot = validate_hom(square(), square(), vmap({{1, 2}, {2, 3}, {3, 4}, {4, 1}}));
    const auto embed = validate_hom(parse_graph("1 2"), square(), vmap({{1, 1}, {2, 2}}));
    o.require(check_functor(rot, rot, 50, 1));
    o.require(check_functor(embed, rot, 50, 1));
    o.require(check_functor(identity_hom(square()), identity_hom(square()), 50, 1));
    return o;
}

Outcome subcoalgebra() {
    Outcome o;
    Workspace ws(square());
    o.require(check_subcoalgebra(ws, parse_graph("1 2"), 4));
    o.require(check_subcoalgebra(ws, path3(), 4));
    return o;
}

Outcome word_model_regression() {
    Outcome o;
    const Graph g = parse_graph("5 1\n1 3\n3 2\n");
    const Report words = check_word_coassociativity(g, 4);
    o.require(!words.passed(), "word model unexpectedly coassociative");
    if (!words.passed())
        o.require(words.failures.front().input.find("{2}*{5}") != std::string::npos, "witness slots");
    Workspace ws(g);
    o.require(check_coalgebra(ws, 4));
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
        double limit_ms;
    };
    const std::vector<Criterion> criteria = {
        {1, "connected subgraph counts", subgraph_counts, 1000},
        {2, "coproduct of an edge", edge_coproduct, 0},
        {3, "coproduct of a squared edge", edge_squared_coproduct, 0},
        {4, "coalgebra axioms to degree 4", coalgebra, 30000},
        {5, "bialgebra compatibility", bialgebra, 0},
        {6, "antipode", antipode, 0},
        {7, "grading", grading, 0},
        {8, "graded dual", duality, 0},
        {9, "functor laws", functor, 0},
        {10, "subcoalgebras", subcoalgebra, 0},
        {11, "strict word model counterexample", word_model_regression, 0},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_ms > 0 && ms > c.limit_ms) o.require(false, "over time limit");
        std::printf("%s %2d %s (%.0f ms)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, ms, o.ok ? "" : ": ",
                    o.note.c_str());
        failed += !o.ok;
    }
    return failed == 0 ? 0 : 1;
}
