#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "linear_combination.hpp"
#include "monomial.hpp"

namespace subhopf {

/// A linear map H → H. Linearity is a property of the callable, checked by
/// tests rather than enforced.
using EndoMap = std::function<Element(const Element&)>;

// ---------------------------------------------------------------------------
// Algebra structure: these do not depend on the host graph.

inline Element unit(const Scalar& k) { return Element(Monomial::unit(), k); }

inline Element multiply(const Element& a, const Element& b) {
    Element out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) out.add(ma * mb, ca * cb);
    return out;
}

inline Scalar counit(const Element& a) { return a.coefficient(Monomial::unit()); }

/// Product in H ⊗ H, slot by slot.
inline TensorElement multiply(const TensorElement& a, const TensorElement& b) {
    TensorElement out;
    for (const auto& [pa, ca] : a)
        for (const auto& [pb, cb] : b) out.add({pa.first * pb.first, pa.second * pb.second}, ca * cb);
    return out;
}

inline TensorElement tensor(const Element& a, const Element& b) {
    TensorElement out;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b) out.add({ma, mb}, ca * cb);
    return out;
}

/// τ: a ⊗ b ↦ b ⊗ a.
inline TensorElement tensor_flip(const TensorElement& t) {
    TensorElement out;
    for (const auto& [p, c] : t) out.add({p.second, p.first}, c);
    return out;
}

/// m: H ⊗ H → H.
inline Element multiply_slots(const TensorElement& t) {
    Element out;
    for (const auto& [p, c] : t) out.add(p.first * p.second, c);
    return out;
}

/// (f ⊗ g) applied slot-wise.
inline TensorElement apply_slotwise(const EndoMap& f, const EndoMap& g, const TensorElement& t) {
    TensorElement out;
    for (const auto& [p, c] : t) {
        TensorElement image = tensor(f(element(p.first)), g(element(p.second)));
        image *= c;
        out += image;
    }
    return out;
}

/// (ε ⊗ id): collapses the left slot onto the base ring.
inline Element counit_left(const TensorElement& t) {
    Element out;
    for (const auto& [p, c] : t)
        if (p.first.is_unit()) out.add(p.second, c);
    return out;
}

/// (id ⊗ ε): collapses the right slot onto the base ring.
inline Element counit_right(const TensorElement& t) {
    Element out;
    for (const auto& [p, c] : t)
        if (p.second.is_unit()) out.add(p.first, c);
    return out;
}

inline Element identity_map(const Element& x) { return x; }

/// u∘ε: keeps only the degree-0 part.
inline Element unit_counit(const Element& x) { return unit(counit(x)); }

// ---------------------------------------------------------------------------
// Coalgebra and Hopf structure on the subgraphs of one host graph.

class HopfAlgebra {
public:
    explicit HopfAlgebra(Graph host) : host_(std::move(host)) {}

    const Graph& host() const noexcept { return host_; }

    /// Δ(Γ) = Σ over ordered bipartitions V1 ⊔ V2 = V(Γ) of Γ[V1] ⊗ Γ[V2],
    /// each side written as the product of its connected components.
    TensorElement coproduct(const ConnectedSubgraph& gamma) const {
        {
            std::lock_guard lock(mutex_);
            if (auto it = generator_coproducts_.find(gamma); it != generator_coproducts_.end()) return it->second;
        }
        if (!is_subgraph_of(gamma.graph(), host_))
            throw std::invalid_argument("factor is not a subgraph of the host graph");
        const auto& vs = gamma.vertices();
        if (vs.size() >= 8 * sizeof(std::size_t)) throw std::length_error("connected subgraph too large");
        TensorElement out;
        const std::size_t subsets = std::size_t{1} << vs.size();
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            std::vector<VertexId> left, right;
            for (std::size_t i = 0; i < vs.size(); ++i) (mask >> i & 1U ? left : right).push_back(vs[i]);
            out.add({Monomial(connected_components(induced_subgraph(gamma.graph(), left))),
                     Monomial(connected_components(induced_subgraph(gamma.graph(), right)))},
                    1);
        }
        std::lock_guard lock(mutex_);
        return generator_coproducts_.try_emplace(gamma, std::move(out)).first->second;
    }

    /// Δ(Γ1⋯Γn) = Δ(Γ1)⋯Δ(Γn); Δ(1) = 1 ⊗ 1.
    TensorElement coproduct(const Monomial& m) const {
        {
            std::lock_guard lock(mutex_);
            if (auto it = monomial_coproducts_.find(m); it != monomial_coproducts_.end()) return it->second;
        }
        TensorElement out({Monomial::unit(), Monomial::unit()});
        for (const auto& f : m.factors()) out = multiply(out, coproduct(f));
        std::lock_guard lock(mutex_);
        return monomial_coproducts_.try_emplace(m, std::move(out)).first->second;
    }

    TensorElement coproduct(const Element& a) const {
        return extend_linearly<TensorElement>(a, [this](const Monomial& m) { return coproduct(m); });
    }

    /// (Δ ⊗ id)
    Tensor3Element coproduct_left(const TensorElement& t) const {
        Tensor3Element out;
        for (const auto& [p, c] : t)
            for (const auto& [q, d] : coproduct(p.first)) out.add({q.first, q.second, p.second}, c * d);
        return out;
    }

    /// (id ⊗ Δ)
    Tensor3Element coproduct_right(const TensorElement& t) const {
        Tensor3Element out;
        for (const auto& [p, c] : t)
            for (const auto& [q, d] : coproduct(p.second)) out.add({p.first, q.first, q.second}, c * d);
        return out;
    }

    /// (f * g)(x) = m ∘ (f ⊗ g) ∘ Δ(x).
    EndoMap convolve(EndoMap f, EndoMap g) const {
        return [this, f = std::move(f), g = std::move(g)](const Element& x) {
            return multiply_slots(apply_slotwise(f, g, coproduct(x)));
        };
    }

    /// Antipode by recursion: S(1) = 1 and, for deg x ≥ 1,
    /// S(x) = −x − Σ S(x′)x″ over the terms of Δ(x) with both sides of
    /// positive degree.
    Element antipode_recursive(const Monomial& x) const {
        if (x.is_unit()) return element(x);
        {
            std::lock_guard lock(mutex_);
            if (auto it = antipode_memo_.find(x); it != antipode_memo_.end()) return it->second;
        }
        Element out = -element(x);
        for (const auto& [p, c] : coproduct(x)) {
            if (p.first.degree() == 0 || p.second.degree() == 0) continue;
            Element term = multiply(antipode_recursive(p.first), element(p.second));
            term *= c;
            out -= term;
        }
        std::lock_guard lock(mutex_);
        return antipode_memo_.try_emplace(x, std::move(out)).first->second;
    }

    Element antipode_recursive(const Element& a) const {
        return extend_linearly<Element>(a, [this](const Monomial& m) { return antipode_recursive(m); });
    }

    /// Antipode as the series Σ_k (e − id)^{*k}(x) with e = u∘ε. The series
    /// is cut at the largest degree present, beyond which every power vanishes.
    Element antipode_series(const Element& a) const {
        std::size_t top = 0;
        for (const auto& [m, c] : a) top = std::max(top, m.degree());

        EndoMap e_minus_id = [](const Element& x) {
            Element out = unit_counit(x);
            out -= x;
            return out;
        };
        Element sum = unit_counit(a);  // k = 0
        EndoMap power = e_minus_id;
        for (std::size_t k = 1; k <= top; ++k) {
            sum += power(a);
            power = memoized(convolve(e_minus_id, power));
        }
        return sum;
    }

private:
    // Linear memoized wrapper: caches the image of each basis monomial.
    static EndoMap memoized(EndoMap f) {
        auto cache = std::make_shared<std::map<Monomial, Element>>();
        return [f = std::move(f), cache](const Element& x) {
            return extend_linearly<Element>(x, [&](const Monomial& m) {
                if (auto it = cache->find(m); it != cache->end()) return it->second;
                return cache->emplace(m, f(element(m))).first->second;
            });
        };
    }

    Graph host_;
    mutable std::mutex mutex_;
    mutable std::map<ConnectedSubgraph, TensorElement> generator_coproducts_;
    mutable std::map<Monomial, TensorElement> monomial_coproducts_;
    mutable std::map<Monomial, Element> antipode_memo_;
};

}  // namespace subhopf
