#pragma once

#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "graph.hpp"

// Strict word model: the coproduct computed on noncommutative words, with
// the components of every induced subgraph written in order of their
// minimum vertex label. Kept to exhibit where coassociativity fails at the
// word level; the algebra itself uses the normalized basis.
namespace subhopf::words {

using Word = std::vector<ConnectedSubgraph>;
using WordPair = std::pair<Word, Word>;
using WordTriple = std::tuple<Word, Word, Word>;

template <class Key>
using WordCombination = std::map<Key, long long>;

inline Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// Word-level Δ(Γ): components of Γ[V1] and Γ[V2], each by minimum label.
inline WordCombination<WordPair> coproduct(const ConnectedSubgraph& gamma) {
    WordCombination<WordPair> out;
    const auto& vs = gamma.vertices();
    for (std::size_t mask = 0; mask < (std::size_t{1} << vs.size()); ++mask) {
        std::vector<VertexId> left, right;
        for (std::size_t i = 0; i < vs.size(); ++i) (mask >> i & 1U ? left : right).push_back(vs[i]);
        // connected_components orders disjoint pieces by their minimum label.
        ++out[{connected_components(induced_subgraph(gamma.graph(), left)),
               connected_components(induced_subgraph(gamma.graph(), right))}];
    }
    return out;
}

/// Δ(Γ1⋯Γn) = Δ(Γ1)⋯Δ(Γn) with concatenation in each slot.
inline WordCombination<WordPair> coproduct(const Word& w) {
    WordCombination<WordPair> acc{{{Word{}, Word{}}, 1}};
    for (const auto& gamma : w) {
        WordCombination<WordPair> next;
        for (const auto& [p, c] : acc)
            for (const auto& [q, d] : coproduct(gamma)) next[{concat(p.first, q.first), concat(p.second, q.second)}] += c * d;
        acc = std::move(next);
    }
    return acc;
}

inline WordCombination<WordTriple> coproduct_then_left(const Word& w) {
    WordCombination<WordTriple> out;
    for (const auto& [p, c] : coproduct(w))
        for (const auto& [q, d] : coproduct(p.first)) out[{q.first, q.second, p.second}] += c * d;
    return out;
}

inline WordCombination<WordTriple> coproduct_then_right(const Word& w) {
    WordCombination<WordTriple> out;
    for (const auto& [p, c] : coproduct(w))
        for (const auto& [q, d] : coproduct(p.second)) out[{p.first, q.first, q.second}] += c * d;
    return out;
}

struct CoassociativityWitness {
    WordTriple term;
    long long left_coefficient = 0;   // in (Δ ⊗ id)Δ
    long long right_coefficient = 0;  // in (id ⊗ Δ)Δ
};

/// First triple (in word order) whose coefficients differ between the two
/// associations, or nothing if the word is coassociative.
inline std::optional<CoassociativityWitness> coassociativity_witness(const Word& w) {
    auto lhs = coproduct_then_left(w);
    auto rhs = coproduct_then_right(w);
    std::map<WordTriple, std::pair<long long, long long>> both;
    for (const auto& [t, c] : lhs) both[t].first = c;
    for (const auto& [t, c] : rhs) both[t].second = c;
    for (const auto& [t, cc] : both)
        if (cc.first != cc.second) return CoassociativityWitness{t, cc.first, cc.second};
    return std::nullopt;
}

}  // namespace subhopf::words
