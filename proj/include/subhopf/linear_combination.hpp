#pragma once

#include <map>
#include <tuple>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "monomial.hpp"

namespace subhopf {

/// Base ring: exact rationals, always in reduced form.
using Scalar = boost::multiprecision::cpp_rational;

inline bool is_integer(const Scalar& s) { return boost::multiprecision::denominator(s) == 1; }

struct primal_tag {};
struct dual_tag {};

/// Finite linear combination of basis keys with exact coefficients. Zero
/// coefficients are never stored, so equality is term-by-term. `Tag` keeps
/// elements of the algebra and of its dual apart at the type level.
template <class Key, class Tag = primal_tag>
class LinearCombination {
public:
    using key_type = Key;
    using map_type = std::map<Key, Scalar>;
    using const_iterator = typename map_type::const_iterator;

    LinearCombination() = default;
    explicit LinearCombination(Key k, Scalar c = 1) { add(std::move(k), c); }

    void add(const Key& k, const Scalar& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Scalar coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Scalar(0) : it->second;
    }

    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    const map_type& terms() const noexcept { return terms_; }

    /// Sum of all coefficients.
    Scalar coefficient_sum() const {
        Scalar s = 0;
        for (const auto& [k, c] : terms_) s += c;
        return s;
    }

    LinearCombination& operator+=(const LinearCombination& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    LinearCombination& operator*=(const Scalar& s) {
        if (s == 0) {
            terms_.clear();
        } else {
            for (auto& [k, c] : terms_) c *= s;
        }
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator-(LinearCombination a) { return a *= Scalar(-1); }
    friend LinearCombination operator*(const Scalar& s, LinearCombination a) { return a *= s; }
    friend LinearCombination operator*(LinearCombination a, const Scalar& s) { return a *= s; }

    friend bool operator==(const LinearCombination&, const LinearCombination&) = default;

private:
    map_type terms_;
};

using Element = LinearCombination<Monomial>;
using TensorElement = LinearCombination<MonomialPair>;
using Tensor3Element = LinearCombination<std::tuple<Monomial, Monomial, Monomial>>;
using DualElement = LinearCombination<Monomial, dual_tag>;
using DualTensorElement = LinearCombination<MonomialPair, dual_tag>;

/// Linear extension of a map defined on basis keys.
template <class Out, class Key, class Tag, class Fn>
Out extend_linearly(const LinearCombination<Key, Tag>& x, Fn&& on_basis) {
    Out out;
    for (const auto& [k, c] : x) {
        Out image = on_basis(k);
        image *= c;
        out += image;
    }
    return out;
}

inline Element element(const Monomial& m, Scalar c = 1) { return Element(m, std::move(c)); }

}  // namespace subhopf
