#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dual.hpp"
#include "hom.hpp"
#include "json_io.hpp"
#include "text.hpp"
#include "word_model.hpp"
#include "workspace.hpp"

namespace subhopf {

struct Failure {
    std::string input;
    std::string expected;
    std::string actual;
};

/// Outcome of one verification run. Failures are listed in canonical input
/// order, so the first one is the minimal witness.
struct Report {
    std::string check;
    std::string graph_hash;
    std::size_t cutoff = 0;
    std::uint64_t seed = 0;
    std::size_t cases = 0;
    std::vector<Failure> failures;
    double ms = 0;

    bool passed() const noexcept { return failures.empty(); }

    json to_json() const {
        json fs = json::array();
        for (const auto& f : failures) fs.push_back({{"input", f.input}, {"expected", f.expected}, {"actual", f.actual}});
        return {{"check", check}, {"graph_hash", graph_hash}, {"cutoff", cutoff}, {"seed", seed},
                {"cases", cases},  {"failures", fs},           {"ms", ms}};
    }
};

namespace detail {

class ReportBuilder {
public:
    ReportBuilder(std::string check, const Graph& g, std::size_t cutoff, std::uint64_t seed = 0)
        : start_(std::chrono::steady_clock::now()) {
        report_.check = std::move(check);
        report_.graph_hash = graph_hash(g);
        report_.cutoff = cutoff;
        report_.seed = seed;
    }

    template <class T>
    void expect_equal(const std::string& input, const T& expected, const T& actual) {
        ++report_.cases;
        if (!(expected == actual)) report_.failures.push_back({input, render_any(expected), render_any(actual)});
    }

    void expect(const std::string& input, bool ok, const std::string& expected = "true",
                const std::string& actual = "false") {
        ++report_.cases;
        if (!ok) report_.failures.push_back({input, expected, actual});
    }

    Report finish() {
        report_.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        return std::move(report_);
    }

private:
    template <class T>
    static std::string render_any(const T& x) {
        if constexpr (std::is_same_v<T, Tensor3Element>) {
            return render_triple(x);
        } else if constexpr (std::is_same_v<T, std::size_t>) {
            return std::to_string(x);
        } else {
            return render(x);
        }
    }

    static std::string render_triple(const Tensor3Element& t) {
        if (t.is_zero()) return "0";
        std::string s;
        for (const auto& [k, c] : t) {
            if (!s.empty()) s += " + ";
            s += c.str() + " " + render(std::get<0>(k)) + " (x) " + render(std::get<1>(k)) + " (x) " +
                 render(std::get<2>(k));
        }
        return s;
    }

    std::chrono::steady_clock::time_point start_;
    Report report_;
};

// Deterministic sampler: mt19937_64 with plain modulo reduction, so a seed
// gives the same elements on every platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

    /// 1 to 3 basis monomials from `pool`, coefficients in [-3, 3] \ {0}.
    Element element(const std::vector<Monomial>& pool) {
        Element x;
        const std::size_t terms = 1 + below(3);
        for (std::size_t i = 0; i < terms; ++i) {
            long c = static_cast<long>(below(6)) - 3;
            if (c >= 0) ++c;
            x.add(pool[below(pool.size())], c);
        }
        return x;
    }

private:
    std::mt19937_64 rng_;
};

// Pairs (a, b) of basis monomials with deg a + deg b <= cutoff.
template <class Fn>
void for_each_basis_pair(const BasisCache& bases, std::size_t cutoff, Fn&& fn) {
    for (std::size_t p = 0; p <= cutoff; ++p)
        for (std::size_t q = 0; p + q <= cutoff; ++q)
            for (const auto& a : bases.basis(p).monomials)
                for (const auto& b : bases.basis(q).monomials) fn(a, b);
}

inline std::string pair_input(const Monomial& a, const Monomial& b) { return render(a) + " , " + render(b); }

}  // namespace detail

/// Coassociativity, both counit laws and cocommutativity on every basis
/// monomial of degree at most `max_degree`.
inline Report check_coalgebra(const Workspace& ws, std::size_t max_degree) {
    detail::ReportBuilder r("coalgebra", ws.graph(), max_degree);
    const auto& h = ws.algebra;
    for (const auto& m : ws.bases.monomials_up_to(max_degree)) {
        const auto delta = h.coproduct(m);
        const auto in = render(m);
        r.expect_equal("coassociativity " + in, h.coproduct_left(delta), h.coproduct_right(delta));
        r.expect_equal("left counit " + in, element(m), counit_left(delta));
        r.expect_equal("right counit " + in, element(m), counit_right(delta));
        r.expect_equal("cocommutativity " + in, delta, tensor_flip(delta));
    }
    return r.finish();
}

/// Δ and ε are multiplicative: on all basis pairs of total degree at most
/// `max_degree`, and on `samples` seeded random element pairs.
inline Report check_bialgebra(const Workspace& ws, std::size_t max_degree, std::size_t samples, std::uint64_t seed) {
    detail::ReportBuilder r("bialgebra", ws.graph(), max_degree, seed);
    const auto& h = ws.algebra;
    detail::for_each_basis_pair(ws.bases, max_degree, [&](const Monomial& a, const Monomial& b) {
        const auto in = detail::pair_input(a, b);
        r.expect_equal("coproduct " + in, multiply(h.coproduct(a), h.coproduct(b)), h.coproduct(a * b));
        r.expect("counit " + in, counit(element(a * b)) == counit(element(a)) * counit(element(b)));
    });
    const auto pool = ws.bases.monomials_up_to(max_degree);
    detail::Sampler sampler(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        Element a = sampler.element(pool), b = sampler.element(pool);
        const auto in = "sample " + render(a) + " , " + render(b);
        r.expect_equal("coproduct " + in, multiply(h.coproduct(a), h.coproduct(b)), h.coproduct(multiply(a, b)));
        r.expect("counit " + in, counit(multiply(a, b)) == counit(a) * counit(b));
    }
    return r.finish();
}

/// S * id = id * S = uε, agreement of the recursive and series antipodes,
/// S∘S = id, and S(ab) = S(a)S(b).
inline Report check_hopf(const Workspace& ws, std::size_t max_degree) {
    detail::ReportBuilder r("hopf", ws.graph(), max_degree);
    const auto& h = ws.algebra;
    EndoMap s = [&h](const Element& x) { return h.antipode_recursive(x); };
    const auto left = h.convolve(s, identity_map);
    const auto right = h.convolve(identity_map, s);
    for (const auto& m : ws.bases.monomials_up_to(max_degree)) {
        const auto x = element(m);
        const auto in = render(m);
        const auto s_x = h.antipode_recursive(x);
        r.expect_equal("S*id " + in, unit_counit(x), left(x));
        r.expect_equal("id*S " + in, unit_counit(x), right(x));
        r.expect_equal("series " + in, s_x, h.antipode_series(x));
        r.expect_equal("involution " + in, x, h.antipode_recursive(s_x));
        bool integral = true;
        for (const auto& [k, c] : s_x) integral = integral && is_integer(c);
        r.expect("integral " + in, integral);
    }
    detail::for_each_basis_pair(ws.bases, max_degree, [&](const Monomial& a, const Monomial& b) {
        r.expect_equal("multiplicative " + detail::pair_input(a, b),
                       multiply(h.antipode_recursive(element(a)), h.antipode_recursive(element(b))),
                       h.antipode_recursive(element(a * b)));
    });
    return r.finish();
}

/// Number of multisets of generators with total vertex count n, by the
/// generating function Π_Γ 1/(1 − t^{|V(Γ)|}).
inline std::vector<std::size_t> multiset_counts(const std::vector<ConnectedSubgraph>& generators,
                                                std::size_t max_degree) {
    std::vector<std::size_t> coeff(max_degree + 1, 0);
    coeff[0] = 1;
    for (const auto& g : generators) {
        const std::size_t k = g.vertex_count();
        for (std::size_t n = k; n <= max_degree; ++n) coeff[n] += coeff[n - k];
    }
    return coeff;
}

/// Degree closure of m and Δ, H^(0) = k, ε vanishing in positive degree,
/// graded dimensions against a generating-function count.
inline Report check_grading(const Workspace& ws, std::size_t max_degree) {
    detail::ReportBuilder r("grading", ws.graph(), max_degree);
    const auto& bases = ws.bases;
    r.expect_equal<std::size_t>("dim H^(0)", 1, bases.dimension(0));
    const auto counts = multiset_counts(bases.generators(max_degree), max_degree);
    for (std::size_t n = 0; n <= max_degree; ++n)
        r.expect_equal<std::size_t>("dim H^(" + std::to_string(n) + ")", counts[n], bases.dimension(n));

    detail::for_each_basis_pair(bases, max_degree, [&](const Monomial& a, const Monomial& b) {
        const Monomial ab = a * b;
        const auto& target = bases.basis(a.degree() + b.degree()).monomials;
        r.expect("product degree " + detail::pair_input(a, b),
                 ab.degree() == a.degree() + b.degree() && std::binary_search(target.begin(), target.end(), ab));
    });
    for (const auto& m : bases.monomials_up_to(max_degree)) {
        bool graded = true;
        for (const auto& [p, c] : ws.algebra.coproduct(m)) graded = graded && p.first.degree() + p.second.degree() == m.degree();
        r.expect("coproduct degree " + render(m), graded);
        r.expect("counit " + render(m), counit(element(m)) == (m.degree() == 0 ? 1 : 0));
    }
    return r.finish();
}

/// Adjointness of the dual product to Δ and of the dual coproduct to m,
/// plus associativity, commutativity and unit of the dual product.
inline Report check_duality(const Workspace& ws, std::size_t max_degree) {
    detail::ReportBuilder r("duality", ws.graph(), max_degree);
    const auto& h = ws.algebra;
    const auto& bases = ws.bases;

    detail::for_each_basis_pair(bases, max_degree, [&](const Monomial& f1, const Monomial& f2) {
        const auto z = dual_product(h, bases, f1, f2);
        const auto zz = dual_tensor(dual_basis(f1), dual_basis(f2));
        const auto in = detail::pair_input(f1, f2);
        for (const auto& f : bases.basis(f1.degree() + f2.degree()).monomials)
            r.expect_equal("product adjoint " + in + " ; " + render(f), pairing(zz, h.coproduct(f)),
                           pairing(z, element(f)));
        bool homogeneous = true;
        for (const auto& [m, c] : z) homogeneous = homogeneous && m.degree() == f1.degree() + f2.degree() && c > 0;
        r.expect("product support " + in, homogeneous);
        r.expect_equal("commutative " + in, z, dual_product(h, bases, f2, f1));
    });

    for (const auto& f : bases.monomials_up_to(max_degree)) {
        const auto dz = dual_coproduct(dual_basis(f));
        for (std::size_t p = 0; p <= f.degree(); ++p)
            for (const auto& f1 : bases.basis(p).monomials)
                for (const auto& f2 : bases.basis(f.degree() - p).monomials)
                    r.expect_equal("coproduct adjoint " + render(f) + " ; " + detail::pair_input(f1, f2),
                                   pairing(dual_basis(f), element(f1 * f2)), pairing(dz, tensor(element(f1), element(f2))));
        r.expect_equal("dual unit " + render(f), dual_basis(f), dual_product(h, bases, Monomial::unit(), f));
        r.expect_equal("dual counit " + render(f), Scalar(f.is_unit() ? 1 : 0), dual_counit(dual_basis(f)));
    }

    for (std::size_t p = 1; p <= max_degree; ++p)
        for (std::size_t q = 1; p + q < max_degree; ++q)
            for (std::size_t s = 1; p + q + s <= max_degree; ++s)
                for (const auto& a : bases.basis(p).monomials)
                    for (const auto& b : bases.basis(q).monomials)
                        for (const auto& c : bases.basis(s).monomials) {
                            const auto za = dual_basis(a), zb = dual_basis(b), zc = dual_basis(c);
                            r.expect_equal("associative " + render(a) + " , " + render(b) + " , " + render(c),
                                           dual_product(h, bases, dual_product(h, bases, za, zb), zc),
                                           dual_product(h, bases, za, dual_product(h, bases, zb, zc)));
                        }
    return r.finish();
}

/// H(f) multiplicative and unital, H(id) = id and H(g∘f) = H(g)∘H(f), on
/// seeded random elements over the source of f (basis degree up to `max_degree`).
inline Report check_functor(const GraphHom& f, const GraphHom& g, std::size_t samples, std::uint64_t seed,
                            std::size_t max_degree = 3) {
    detail::ReportBuilder r("functor", f.source(), max_degree, seed);
    const GraphHom gf = compose_hom(g, f);
    const GraphHom id = identity_hom(f.source());
    BasisCache bases(f.source());

    r.expect_equal("H(f)(1)", unit(1), apply_algebra_morphism(f, unit(1)));
    for (const auto& c : bases.generators(max_degree)) {
        const auto image = image_subgraph(f, c);
        r.expect("image " + render(c), is_connected(image.graph()) && is_subgraph_of(image.graph(), f.target()));
    }
    const auto pool = bases.monomials_up_to(max_degree);
    detail::Sampler sampler(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const Element a = sampler.element(pool), b = sampler.element(pool);
        const auto in = render(a);
        r.expect_equal("identity " + in, a, apply_algebra_morphism(id, a));
        r.expect_equal("composition " + in, apply_algebra_morphism(g, apply_algebra_morphism(f, a)),
                       apply_algebra_morphism(gf, a));
        r.expect_equal("multiplicative " + in + " , " + render(b),
                       multiply(apply_algebra_morphism(f, a), apply_algebra_morphism(f, b)),
                       apply_algebra_morphism(f, multiply(a, b)));
    }
    return r.finish();
}

/// For a subgraph G′ of the host, Δ maps H(calG′) into H(calG′) ⊗ H(calG′).
inline Report check_subcoalgebra(const Workspace& ws, const Graph& sub, std::size_t max_degree) {
    if (!is_subgraph_of(sub, ws.graph())) throw std::invalid_argument("subcoalgebra check needs a subgraph of the host");
    detail::ReportBuilder r("subcoalgebra", ws.graph(), max_degree);
    BasisCache sub_bases(sub);
    auto inside = [&](const Monomial& m) {
        for (const auto& c : m.factors())
            if (!is_subgraph_of(c.graph(), sub)) return false;
        return true;
    };
    for (const auto& m : sub_bases.monomials_up_to(max_degree)) {
        bool closed = true;
        for (const auto& [p, c] : ws.algebra.coproduct(m)) closed = closed && inside(p.first) && inside(p.second);
        r.expect("closed " + render(m) + " in " + std::to_string(sub.vertex_count()) + "-vertex subgraph", closed);
    }
    return r.finish();
}

/// Coassociativity in the strict word model on every generator with at most
/// `max_degree` vertices. Expected to fail on some graphs; see word_model.hpp.
inline Report check_word_coassociativity(const Graph& g, std::size_t max_degree) {
    detail::ReportBuilder r("word_coassociativity", g, max_degree);
    auto word_text = [](const words::Word& w) {
        if (w.empty()) return std::string("1");
        std::string s;
        for (const auto& c : w) s += (s.empty() ? "" : "*") + render(c);
        return s;
    };
    for (const auto& c : enumerate_connected_subgraphs(g, max_degree)) {
        auto witness = words::coassociativity_witness({c});
        if (!witness) {
            r.expect(render(c), true);
            continue;
        }
        const auto& [a, b, d] = witness->term;
        r.expect("word " + render(c) + " ; " + word_text(a) + " (x) " + word_text(b) + " (x) " + word_text(d), false,
                 std::to_string(witness->left_coefficient), std::to_string(witness->right_coefficient));
    }
    return r.finish();
}

}  // namespace subhopf
