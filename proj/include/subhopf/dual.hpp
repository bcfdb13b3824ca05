#pragma once

#include <cstddef>
#include <vector>

#include "enumeration.hpp"
#include "hopf.hpp"
#include "linear_combination.hpp"

namespace subhopf {

/// Z_F(F′) = δ_{F,F′}, extended bilinearly.
inline Scalar pairing(const DualElement& z, const Element& a) {
    Scalar s = 0;
    // Walk the smaller side and look up in the other.
    if (z.size() <= a.size()) {
        for (const auto& [m, c] : z) s += c * a.coefficient(m);
    } else {
        for (const auto& [m, c] : a) s += c * z.coefficient(m);
    }
    return s;
}

inline Scalar pairing(const DualTensorElement& z, const TensorElement& t) {
    Scalar s = 0;
    for (const auto& [p, c] : z) s += c * t.coefficient(p);
    return s;
}

inline DualTensorElement dual_tensor(const DualElement& a, const DualElement& b) {
    DualTensorElement out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) out.add({ma, mb}, ca * cb);
    return out;
}

inline DualElement dual_basis(const Monomial& f, Scalar c = 1) { return DualElement(f, std::move(c)); }

/// ε*: evaluation at the unit monomial, i.e. the coefficient of Z_1.
inline Scalar dual_counit(const DualElement& z) { return z.coefficient(Monomial::unit()); }

/// n(F1, F2; F): the coefficient of F1 ⊗ F2 in Δ(F).
inline Scalar structure_constant(const HopfAlgebra& h, const Monomial& f1, const Monomial& f2, const Monomial& f) {
    if (f.degree() != f1.degree() + f2.degree()) return 0;
    return h.coproduct(f).coefficient({f1, f2});
}

/// Z_{F1}·Z_{F2} = Σ_F n(F1,F2;F) Z_F over the basis of degree deg F1 + deg F2.
inline DualElement dual_product(const HopfAlgebra& h, const BasisCache& bases, const Monomial& f1,
                                const Monomial& f2) {
    DualElement out;
    for (const auto& f : bases.basis(f1.degree() + f2.degree()).monomials)
        out.add(f, structure_constant(h, f1, f2, f));
    return out;
}

inline DualElement dual_product(const HopfAlgebra& h, const BasisCache& bases, const DualElement& z1,
                                const DualElement& z2) {
    DualElement out;
    for (const auto& [m1, c1] : z1)
        for (const auto& [m2, c2] : z2) {
            DualElement term = dual_product(h, bases, m1, m2);
            term *= c1 * c2;
            out += term;
        }
    return out;
}

/// Adjoint of the product: Z_F ↦ Σ Z_A ⊗ Z_B over the distinct ordered pairs
/// of sub-multisets with A ⊎ B = F.
inline DualTensorElement dual_coproduct(const Monomial& f) {
    // Group equal factors; a split chooses how many copies of each go left.
    struct Run {
        const ConnectedSubgraph* factor;
        std::size_t multiplicity;
    };
    std::vector<Run> runs;
    for (const auto& g : f.factors()) {
        if (!runs.empty() && *runs.back().factor == g)
            ++runs.back().multiplicity;
        else
            runs.push_back({&g, 1});
    }
    DualTensorElement out;
    std::vector<std::size_t> take(runs.size(), 0);
    while (true) {
        std::vector<ConnectedSubgraph> left, right;
        for (std::size_t i = 0; i < runs.size(); ++i) {
            for (std::size_t k = 0; k < runs[i].multiplicity; ++k)
                (k < take[i] ? left : right).push_back(*runs[i].factor);
        }
        out.add({Monomial(std::move(left)), Monomial(std::move(right))}, 1);
        std::size_t i = 0;
        while (i < runs.size() && take[i] == runs[i].multiplicity) take[i++] = 0;
        if (i == runs.size()) break;
        ++take[i];
    }
    return out;
}

inline DualTensorElement dual_coproduct(const DualElement& z) {
    return extend_linearly<DualTensorElement>(z, [](const Monomial& m) { return dual_coproduct(m); });
}

}  // namespace subhopf
