#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "enumeration.hpp"
#include "linear_combination.hpp"
#include "text.hpp"

namespace subhopf {

using json = nlohmann::json;

inline json to_json(const ConnectedSubgraph& c) {
    json vs = json::array(), es = json::array();
    for (VertexId v : c.vertices()) vs.push_back(v.value());
    for (const Edge& e : c.edges()) es.push_back({e.lo().value(), e.hi().value()});
    return {{"vertices", vs}, {"edges", es}};
}

inline json to_json(const Monomial& m) {
    json fs = json::array();
    for (const auto& f : m.factors()) fs.push_back(to_json(f));
    return fs;
}

inline ConnectedSubgraph subgraph_from_json(const json& j) {
    std::vector<VertexId> vs;
    std::vector<Edge> es;
    for (const auto& v : j.at("vertices")) vs.emplace_back(v.get<std::uint64_t>());
    for (const auto& e : j.at("edges")) es.emplace_back(VertexId(e.at(0).get<std::uint64_t>()), VertexId(e.at(1).get<std::uint64_t>()));
    return ConnectedSubgraph(Graph(std::move(vs), std::move(es)));
}

inline Monomial monomial_from_json(const json& j) {
    std::vector<ConnectedSubgraph> fs;
    for (const auto& f : j) fs.push_back(subgraph_from_json(f));
    return Monomial(std::move(fs));
}

/// `[{coeff, factors}]`, in the same order as the text rendering.
template <class Tag>
json to_json(const LinearCombination<Monomial, Tag>& x) {
    json out = json::array();
    for (const auto& [m, c] : x) out.push_back({{"coeff", c.str()}, {"factors", to_json(m)}});
    return out;
}

/// `[{coeff, left, right}]`.
template <class Tag>
json to_json(const LinearCombination<MonomialPair, Tag>& t) {
    json out = json::array();
    for (const auto& [p, c] : t)
        out.push_back({{"coeff", c.str()}, {"left", to_json(p.first)}, {"right", to_json(p.second)}});
    return out;
}

inline json to_json(const Value& v) {
    static constexpr const char* kinds[] = {"element", "tensor", "dual", "dual_tensor"};
    json terms = std::visit([](const auto& x) { return to_json(x); }, v);
    return {{"kind", kinds[v.index()]}, {"terms", terms}};
}

// ---------------------------------------------------------------------------
// Basis cache file: {graph_hash, max_degree, calG, bases}. The file is a
// pure memo; a missing, stale or unreadable file is regenerated.

inline json basis_cache_document(const BasisCache& cache, std::size_t max_degree) {
    json gens = json::array();
    for (const auto& c : cache.generators(max_degree)) gens.push_back(to_json(c));
    json bases = json::object();
    for (std::size_t n = 0; n <= max_degree; ++n) {
        json ms = json::array();
        for (const auto& m : cache.basis(n).monomials) ms.push_back(to_json(m));
        bases[std::to_string(n)] = ms;
    }
    return {{"graph_hash", graph_hash(cache.graph())}, {"max_degree", max_degree}, {"calG", gens}, {"bases", bases}};
}

inline std::filesystem::path basis_cache_path(const std::filesystem::path& dir, const Graph& g) {
    return dir / (graph_hash(g) + ".json");
}

/// Loads a cache document into `cache` if it matches the graph. Returns the
/// degree covered, or nothing if the document was rejected.
inline std::optional<std::size_t> load_basis_cache(BasisCache& cache, const json& doc) {
    try {
        if (doc.at("graph_hash").get<std::string>() != graph_hash(cache.graph())) return std::nullopt;
        const auto max_degree = doc.at("max_degree").get<std::size_t>();
        std::vector<ConnectedSubgraph> gens;
        for (const auto& c : doc.at("calG")) {
            auto sub = subgraph_from_json(c);
            if (!is_subgraph_of(sub.graph(), cache.graph())) return std::nullopt;
            gens.push_back(std::move(sub));
        }
        std::map<std::size_t, GradedBasis> bases;
        for (std::size_t n = 0; n <= max_degree; ++n) {
            GradedBasis b{n, {}};
            for (const auto& m : doc.at("bases").at(std::to_string(n))) b.monomials.push_back(monomial_from_json(m));
            bases.emplace(n, std::move(b));
        }
        cache.preload(max_degree, std::move(gens), std::move(bases));
        return max_degree;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

/// Reads `dir/<hash>.json` when it covers `max_degree`; otherwise computes
/// the bases and rewrites the file.
inline void sync_basis_cache(BasisCache& cache, const std::filesystem::path& dir, std::size_t max_degree) {
    const auto path = basis_cache_path(dir, cache.graph());
    if (std::ifstream in(path); in) {
        json doc = json::parse(in, nullptr, false);
        if (!doc.is_discarded()) {
            // A document covering fewer degrees is still loaded, then extended.
            auto covered = load_basis_cache(cache, doc);
            if (covered && *covered >= max_degree) return;
        }
    }
    std::filesystem::create_directories(dir);
    std::ofstream out(path);
    out << basis_cache_document(cache, max_degree).dump(1) << "\n";
}

}  // namespace subhopf
