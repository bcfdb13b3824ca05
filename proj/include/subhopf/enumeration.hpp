#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "monomial.hpp"

namespace subhopf {

namespace detail {

// Connected edge subsets as connected vertex subsets of the line graph,
// enumerated once each: every subset is grown from its smallest edge index
// and only takes edges from the exclusive neighbourhood of what it holds.
class EdgeSubsetEnumerator {
public:
    EdgeSubsetEnumerator(const Graph& g, std::optional<std::size_t> max_vertices)
        : g_(g), bound_(max_vertices), adjacent_(g.edge_count()) {
        const auto& es = g.edges();
        for (std::size_t i = 0; i < es.size(); ++i)
            for (std::size_t j = 0; j < es.size(); ++j)
                if (i != j && (es[j].touches(es[i].lo()) || es[j].touches(es[i].hi()))) adjacent_[i].push_back(j);
    }

    void run(std::vector<ConnectedSubgraph>& out) {
        if (bound_ && *bound_ < 2) return;
        for (std::size_t root = 0; root < g_.edge_count(); ++root) {
            std::vector<std::size_t> ext;
            for (std::size_t j : adjacent_[root])
                if (j > root) ext.push_back(j);
            extend({root}, std::move(ext), root, out);
        }
    }

private:
    std::size_t vertex_count(const std::vector<std::size_t>& sub) const {
        std::vector<VertexId> vs;
        for (std::size_t i : sub) {
            vs.push_back(g_.edges()[i].lo());
            vs.push_back(g_.edges()[i].hi());
        }
        sort_unique(vs);
        return vs.size();
    }

    void extend(std::vector<std::size_t> sub, std::vector<std::size_t> ext, std::size_t root,
                std::vector<ConnectedSubgraph>& out) {
        std::vector<Edge> es;
        for (std::size_t i : sub) es.push_back(g_.edges()[i]);
        out.emplace_back(Graph({}, std::move(es)));

        std::vector<char> blocked(g_.edge_count(), 0);  // sub and its neighbourhood
        for (std::size_t i : sub) {
            blocked[i] = 1;
            for (std::size_t j : adjacent_[i]) blocked[j] = 1;
        }
        while (!ext.empty()) {
            std::size_t w = ext.back();
            ext.pop_back();
            auto grown = sub;
            grown.push_back(w);
            if (bound_ && vertex_count(grown) > *bound_) continue;
            auto next_ext = ext;
            for (std::size_t u : adjacent_[w])
                if (u > root && !blocked[u]) next_ext.push_back(u);
            extend(std::move(grown), std::move(next_ext), root, out);
        }
    }

    const Graph& g_;
    std::optional<std::size_t> bound_;
    std::vector<std::vector<std::size_t>> adjacent_;
};

}  // namespace detail

/// All nonempty connected subgraphs of `g` with at most `max_vertices`
/// vertices, in canonical order: the single vertices plus every connected
/// edge subset together with its endpoints.
inline std::vector<ConnectedSubgraph> enumerate_connected_subgraphs(const Graph& g,
                                                                    std::optional<std::size_t> max_vertices = {}) {
    std::vector<ConnectedSubgraph> out;
    if (max_vertices && *max_vertices == 0) return out;
    for (VertexId v : g.vertices()) out.push_back(ConnectedSubgraph::vertex(v.value()));
    detail::EdgeSubsetEnumerator(g, max_vertices).run(out);
    std::sort(out.begin(), out.end());
    return out;
}

/// Basis of the degree-n homogeneous component.
struct GradedBasis {
    std::size_t degree = 0;
    std::vector<Monomial> monomials;
};

namespace detail {

inline void compose_multisets(const std::vector<ConnectedSubgraph>& gens, std::size_t start, std::size_t remaining,
                              std::vector<ConnectedSubgraph>& word, std::vector<Monomial>& out) {
    if (remaining == 0) {
        out.emplace_back(word);
        return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) {
        if (gens[i].vertex_count() > remaining) continue;
        word.push_back(gens[i]);
        compose_multisets(gens, i, remaining - gens[i].vertex_count(), word, out);
        word.pop_back();
    }
}

}  // namespace detail

/// Every multiset of generators from `generators` whose vertex counts sum to n.
inline GradedBasis graded_monomials(const std::vector<ConnectedSubgraph>& generators, std::size_t n) {
    GradedBasis basis{n, {}};
    std::vector<ConnectedSubgraph> word;
    detail::compose_multisets(generators, 0, n, word, basis.monomials);
    std::sort(basis.monomials.begin(), basis.monomials.end());
    return basis;
}

inline GradedBasis enumerate_graded_monomials(const Graph& g, std::size_t n) {
    return graded_monomials(enumerate_connected_subgraphs(g, n), n);
}

inline std::size_t graded_dimension(const Graph& g, std::size_t n) {
    return enumerate_graded_monomials(g, n).monomials.size();
}

/// Memoized generators and graded bases of one host graph. Entries are
/// filled at most once; concurrent readers are allowed.
class BasisCache {
public:
    explicit BasisCache(Graph g) : graph_(std::move(g)) {}

    const Graph& graph() const noexcept { return graph_; }

    /// Generators with at most `bound` vertices.
    std::vector<ConnectedSubgraph> generators(std::size_t bound) const {
        std::lock_guard lock(mutex_);
        ensure_generators(bound);
        std::vector<ConnectedSubgraph> out;
        for (const auto& c : generators_)
            if (c.vertex_count() <= bound) out.push_back(c);
        return out;
    }

    const GradedBasis& basis(std::size_t n) const {
        {
            std::lock_guard lock(mutex_);
            if (auto it = bases_.find(n); it != bases_.end()) return it->second;
        }
        auto gens = generators(n);
        GradedBasis b = graded_monomials(gens, n);
        std::lock_guard lock(mutex_);
        return bases_.try_emplace(n, std::move(b)).first->second;
    }

    std::size_t dimension(std::size_t n) const { return basis(n).monomials.size(); }

    /// All basis monomials of degree 0..max_degree, in graded order.
    std::vector<Monomial> monomials_up_to(std::size_t max_degree) const {
        std::vector<Monomial> out;
        for (std::size_t n = 0; n <= max_degree; ++n) {
            const auto& b = basis(n).monomials;
            out.insert(out.end(), b.begin(), b.end());
        }
        return out;
    }

    /// Seeds the memo from an external source (the on-disk cache).
    void preload(std::size_t bound, std::vector<ConnectedSubgraph> gens, std::map<std::size_t, GradedBasis> bases) {
        std::lock_guard lock(mutex_);
        if (!generator_bound_ || *generator_bound_ < bound) {
            generators_ = std::move(gens);
            generator_bound_ = bound;
        }
        for (auto& [n, b] : bases) bases_.try_emplace(n, std::move(b));
    }

    std::size_t generator_bound() const {
        std::lock_guard lock(mutex_);
        return generator_bound_.value_or(0);
    }

    std::map<std::size_t, GradedBasis> bases_snapshot() const {
        std::lock_guard lock(mutex_);
        return bases_;
    }

private:
    void ensure_generators(std::size_t bound) const {
        if (generator_bound_ && *generator_bound_ >= bound) return;
        generators_ = enumerate_connected_subgraphs(graph_, bound);
        generator_bound_ = bound;
    }

    Graph graph_;
    mutable std::mutex mutex_;
    mutable std::vector<ConnectedSubgraph> generators_;
    mutable std::optional<std::size_t> generator_bound_;
    mutable std::map<std::size_t, GradedBasis> bases_;
};

}  // namespace subhopf
