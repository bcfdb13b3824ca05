#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <iterator>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace subhopf {

/// A basis element F = Γ1⋯Γn, stored as a canonically sorted multiset of
/// connected subgraphs. The empty monomial is the unit.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::initializer_list<ConnectedSubgraph> factors) : Monomial(std::vector<ConnectedSubgraph>(factors)) {}
    explicit Monomial(std::vector<ConnectedSubgraph> factors) : factors_(std::move(factors)) {
        std::sort(factors_.begin(), factors_.end());
        for (const auto& f : factors_) degree_ += f.vertex_count();
    }

    static Monomial unit() { return {}; }

    const std::vector<ConnectedSubgraph>& factors() const noexcept { return factors_; }
    bool is_unit() const noexcept { return factors_.empty(); }

    /// Total vertex count with multiplicity.
    std::size_t degree() const noexcept { return degree_; }
    /// Number of factors.
    std::size_t breadth() const noexcept { return factors_.size(); }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial out;
        out.factors_.reserve(a.factors_.size() + b.factors_.size());
        std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
                   std::back_inserter(out.factors_));
        out.degree_ = a.degree_ + b.degree_;
        return out;
    }

    /// Graded order: degree, then breadth, then factor lists lexicographically.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
        if (auto c = a.factors_.size() <=> b.factors_.size(); c != 0) return c;
        return a.factors_ <=> b.factors_;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

private:
    std::vector<ConnectedSubgraph> factors_;
    std::size_t degree_ = 0;
};

/// Sorts a word of connected subgraphs into its monomial.
inline Monomial normalize_word(std::vector<ConnectedSubgraph> word) { return Monomial(std::move(word)); }

inline std::size_t degree(const Monomial& m) { return m.degree(); }
inline std::size_t breadth(const Monomial& m) { return m.breadth(); }

/// F[U]: restricts a monomial to a vertex selection given per factor
/// (`selection[i]` is a subset of factor i's vertices) and returns the
/// normalized product of the components of every Γi[Ui].
inline Monomial restrict_monomial(const Monomial& m, const std::vector<std::vector<VertexId>>& selection) {
    std::vector<ConnectedSubgraph> out;
    for (std::size_t i = 0; i < m.breadth(); ++i) {
        for (auto& c : connected_components(induced_subgraph(m.factors()[i].graph(), selection[i])))
            out.push_back(std::move(c));
    }
    return Monomial(std::move(out));
}

using MonomialPair = std::pair<Monomial, Monomial>;

}  // namespace subhopf
