#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "linear_combination.hpp"

namespace subhopf {

using VertexMap = std::map<VertexId, VertexId>;

/// A validated graph homomorphism: every source vertex is mapped and every
/// source edge lands on a target edge.
class GraphHom {
public:
    const Graph& source() const noexcept { return source_; }
    const Graph& target() const noexcept { return target_; }
    const VertexMap& vertex_map() const noexcept { return map_; }

    VertexId operator()(VertexId v) const { return map_.at(v); }

    friend bool operator==(const GraphHom&, const GraphHom&) = default;

private:
    GraphHom(Graph s, Graph t, VertexMap m) : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}
    friend GraphHom validate_hom(Graph source, Graph target, VertexMap vertex_map);

    Graph source_;
    Graph target_;
    VertexMap map_;
};

inline GraphHom validate_hom(Graph source, Graph target, VertexMap vertex_map) {
    for (VertexId v : source.vertices()) {
        auto it = vertex_map.find(v);
        if (it == vertex_map.end()) throw std::invalid_argument("vertex " + std::to_string(v.value()) + " is unmapped");
        if (!target.contains(it->second))
            throw std::invalid_argument("vertex " + std::to_string(v.value()) + " maps outside the target graph");
    }
    for (auto it = vertex_map.begin(); it != vertex_map.end();) {
        it = source.contains(it->first) ? std::next(it) : vertex_map.erase(it);
    }
    for (const Edge& e : source.edges()) {
        VertexId a = vertex_map.at(e.lo()), b = vertex_map.at(e.hi());
        if (a == b || !target.contains(Edge(a, b)))
            throw std::invalid_argument("edge " + std::to_string(e.lo().value()) + "-" + std::to_string(e.hi().value()) +
                                        " maps to " + std::to_string(a.value()) + "-" + std::to_string(b.value()) +
                                        ", which is not a target edge");
    }
    return GraphHom(std::move(source), std::move(target), std::move(vertex_map));
}

inline GraphHom identity_hom(const Graph& g) {
    VertexMap m;
    for (VertexId v : g.vertices()) m.emplace(v, v);
    return validate_hom(g, g, std::move(m));
}

/// g ∘ f.
inline GraphHom compose_hom(const GraphHom& g, const GraphHom& f) {
    if (f.target() != g.source()) throw std::invalid_argument("composition through mismatched middle graph");
    VertexMap m;
    for (const auto& [v, w] : f.vertex_map()) m.emplace(v, g(w));
    return validate_hom(f.source(), g.target(), std::move(m));
}

/// f(c): images of the vertices and edges of c, repeated images merged.
inline ConnectedSubgraph image_subgraph(const GraphHom& f, const ConnectedSubgraph& c) {
    if (!is_subgraph_of(c.graph(), f.source()))
        throw std::invalid_argument("subgraph is not contained in the homomorphism source");
    std::vector<VertexId> vs;
    std::vector<Edge> es;
    for (VertexId v : c.vertices()) vs.push_back(f(v));
    for (const Edge& e : c.edges()) es.emplace_back(f(e.lo()), f(e.hi()));
    return ConnectedSubgraph(Graph(std::move(vs), std::move(es)));
}

inline Monomial apply_algebra_morphism(const GraphHom& f, const Monomial& m) {
    std::vector<ConnectedSubgraph> image;
    image.reserve(m.breadth());
    for (const auto& c : m.factors()) image.push_back(image_subgraph(f, c));
    return Monomial(std::move(image));
}

/// H(f): Γ1⋯Γn ↦ f(Γ1)⋯f(Γn), 1 ↦ 1, extended linearly.
inline Element apply_algebra_morphism(const GraphHom& f, const Element& a) {
    Element out;
    for (const auto& [m, c] : a) out.add(apply_algebra_morphism(f, m), c);
    return out;
}

/// Reads `u -> v` lines; `#` starts a comment.
inline VertexMap parse_vertex_map(std::string_view text) {
    VertexMap m;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto fail = [&](const std::string& why) {
            throw input_error("map line " + std::to_string(line_no) + ": " + why);
        };
        auto arrow = line.find("->");
        if (arrow == std::string::npos) fail("expected 'u -> v'");
        auto label = [&](std::string tok) -> VertexId {
            std::istringstream ts(tok);
            std::string word, extra;
            ts >> word;
            if (word.empty() || (ts >> extra) ||
                word.find_first_not_of("0123456789") != std::string::npos)
                fail("'" + tok + "' is not a vertex label");
            std::uint64_t v = 0;
            try {
                v = std::stoull(word);
            } catch (const std::out_of_range&) {
                fail("label too large");
            }
            if (v == 0) fail("vertex labels start at 1");
            return VertexId(v);
        };
        VertexId from = label(line.substr(0, arrow));
        VertexId to = label(line.substr(arrow + 2));
        auto [it, inserted] = m.emplace(from, to);
        if (!inserted && it->second != to) fail("vertex " + std::to_string(from.value()) + " mapped twice");
    }
    return m;
}

}  // namespace subhopf
