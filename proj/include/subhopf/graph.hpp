#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subhopf {

/// Raised for malformed input files and expressions.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A vertex label. Labels are natural numbers starting at 1.
class VertexId {
public:
    constexpr explicit VertexId(std::uint64_t value) : value_(value) {
        if (value == 0) throw std::invalid_argument("vertex labels start at 1");
    }
    constexpr std::uint64_t value() const noexcept { return value_; }
    friend constexpr auto operator<=>(VertexId, VertexId) = default;

private:
    std::uint64_t value_;
};

/// Undirected edge with endpoints stored as (min, max). Loops are rejected.
class Edge {
public:
    constexpr Edge(VertexId a, VertexId b) : lo_(std::min(a, b)), hi_(std::max(a, b)) {
        if (a == b) throw std::invalid_argument("loop edge " + std::to_string(a.value()));
    }
    constexpr VertexId lo() const noexcept { return lo_; }
    constexpr VertexId hi() const noexcept { return hi_; }
    constexpr bool touches(VertexId v) const noexcept { return v == lo_ || v == hi_; }
    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;

private:
    VertexId lo_;
    VertexId hi_;
};

namespace detail {

template <class T>
void sort_unique(std::vector<T>& xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

template <class T>
bool sorted_contains(const std::vector<T>& xs, const T& x) {
    return std::binary_search(xs.begin(), xs.end(), x);
}

}  // namespace detail

/// Simple undirected labeled graph. Vertices and edges are kept sorted and
/// duplicate free; every edge endpoint is a vertex.
class Graph {
public:
    Graph() = default;

    Graph(std::vector<VertexId> vertices, std::vector<Edge> edges)
        : vertices_(std::move(vertices)), edges_(std::move(edges)) {
        for (const Edge& e : edges_) {
            vertices_.push_back(e.lo());
            vertices_.push_back(e.hi());
        }
        detail::sort_unique(vertices_);
        detail::sort_unique(edges_);
    }

    const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }

    bool contains(VertexId v) const { return detail::sorted_contains(vertices_, v); }
    bool contains(const Edge& e) const { return detail::sorted_contains(edges_, e); }

    /// Lexicographic on (vertex list, edge list); this is the canonical order.
    friend auto operator<=>(const Graph&, const Graph&) = default;
    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
};

/// Total-order key of a graph: its sorted vertex labels followed by its
/// sorted edge label pairs, compared lexicographically.
struct CanonicalKey {
    std::vector<std::uint64_t> vertices;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

inline CanonicalKey canonical_key(const Graph& g) {
    CanonicalKey key;
    key.vertices.reserve(g.vertex_count());
    for (VertexId v : g.vertices()) key.vertices.push_back(v.value());
    for (const Edge& e : g.edges()) key.edges.emplace_back(e.lo().value(), e.hi().value());
    return key;
}

/// G[S]: the vertices S together with every edge of `g` having both ends in S.
inline Graph induced_subgraph(const Graph& g, std::vector<VertexId> s) {
    detail::sort_unique(s);
    for (VertexId v : s) {
        if (!g.contains(v))
            throw std::invalid_argument("vertex " + std::to_string(v.value()) + " is not in the graph");
    }
    std::vector<Edge> kept;
    for (const Edge& e : g.edges()) {
        if (detail::sorted_contains(s, e.lo()) && detail::sorted_contains(s, e.hi())) kept.push_back(e);
    }
    return Graph(std::move(s), std::move(kept));
}

inline bool is_subgraph_of(const Graph& h, const Graph& g) {
    return std::includes(g.vertices().begin(), g.vertices().end(), h.vertices().begin(), h.vertices().end()) &&
           std::includes(g.edges().begin(), g.edges().end(), h.edges().begin(), h.edges().end());
}

namespace detail {

// Component index of every vertex of g (indices follow g.vertices()).
inline std::vector<std::size_t> component_labels(const Graph& g, std::size_t& count) {
    const auto& vs = g.vertices();
    std::vector<std::size_t> parent(vs.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto index_of = [&](VertexId v) {
        return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    for (const Edge& e : g.edges()) {
        std::size_t a = find(index_of(e.lo())), b = find(index_of(e.hi()));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    // Roots are the smallest index in each component, so numbering roots in
    // vertex order numbers components by their minimum label.
    std::vector<std::size_t> label(vs.size());
    std::vector<std::size_t> root_label(vs.size(), 0);
    count = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        std::size_t r = find(i);
        if (r == i) root_label[i] = count++;
        label[i] = root_label[r];
    }
    return label;
}

}  // namespace detail

inline bool is_connected(const Graph& g) {
    if (g.empty()) return false;
    std::size_t count = 0;
    detail::component_labels(g, count);
    return count == 1;
}

/// A nonempty connected subgraph: an element of the generating set.
class ConnectedSubgraph {
public:
    explicit ConnectedSubgraph(Graph g) : graph_(std::move(g)) {
        if (!is_connected(graph_)) throw std::invalid_argument("subgraph is empty or disconnected");
    }

    static ConnectedSubgraph vertex(std::uint64_t v) { return ConnectedSubgraph(Graph({VertexId(v)}, {}), trusted); }

    const Graph& graph() const noexcept { return graph_; }
    const std::vector<VertexId>& vertices() const noexcept { return graph_.vertices(); }
    const std::vector<Edge>& edges() const noexcept { return graph_.edges(); }
    std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }

    friend auto operator<=>(const ConnectedSubgraph&, const ConnectedSubgraph&) = default;
    friend bool operator==(const ConnectedSubgraph&, const ConnectedSubgraph&) = default;

private:
    struct trusted_t {};
    static constexpr trusted_t trusted{};
    ConnectedSubgraph(Graph g, trusted_t) : graph_(std::move(g)) {}

    friend std::vector<ConnectedSubgraph> connected_components(const Graph& g);

    Graph graph_;
};

/// Maximal connected pieces of `g`, in canonical order (equivalently, by
/// minimum vertex label).
inline std::vector<ConnectedSubgraph> connected_components(const Graph& g) {
    std::size_t count = 0;
    const auto label = detail::component_labels(g, count);
    std::vector<std::vector<VertexId>> vs(count);
    std::vector<std::vector<Edge>> es(count);
    const auto& all = g.vertices();
    for (std::size_t i = 0; i < all.size(); ++i) vs[label[i]].push_back(all[i]);
    for (const Edge& e : g.edges()) {
        auto i = static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), e.lo()) - all.begin());
        es[label[i]].push_back(e);
    }
    std::vector<ConnectedSubgraph> out;
    out.reserve(count);
    for (std::size_t c = 0; c < count; ++c)
        out.push_back(ConnectedSubgraph(Graph(std::move(vs[c]), std::move(es[c])), ConnectedSubgraph::trusted));
    return out;
}

// ---------------------------------------------------------------------------
// Graph file format

/// Parses the line-oriented graph format: `# comment`, `v` (isolated vertex)
/// or `u v` (edge). Duplicate edges are merged.
inline Graph parse_graph(std::string_view text) {
    std::vector<VertexId> vertices;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<std::string> tokens;
        for (std::string tok; fields >> tok;) tokens.push_back(tok);
        if (tokens.empty()) continue;
        auto fail = [&](const std::string& why) {
            throw input_error("graph line " + std::to_string(line_no) + ": " + why);
        };
        if (tokens.size() > 2) fail("expected one or two vertex labels");
        std::vector<VertexId> ids;
        for (const auto& tok : tokens) {
            if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
                fail("'" + tok + "' is not a natural number");
            std::uint64_t v = 0;
            try {
                v = std::stoull(tok);
            } catch (const std::out_of_range&) {
                fail("label '" + tok + "' is too large");
            }
            if (v == 0) fail("vertex labels start at 1");
            ids.emplace_back(v);
        }
        if (ids.size() == 1) {
            vertices.push_back(ids[0]);
        } else {
            if (ids[0] == ids[1]) fail("loop edge " + tokens[0] + " " + tokens[1]);
            edges.emplace_back(ids[0], ids[1]);
        }
    }
    return Graph(std::move(vertices), std::move(edges));
}

/// Writes isolated vertices first, then edges, each sorted.
inline std::string serialize_graph(const Graph& g) {
    std::string out;
    for (VertexId v : g.vertices()) {
        bool isolated = std::none_of(g.edges().begin(), g.edges().end(), [v](const Edge& e) { return e.touches(v); });
        if (isolated) out += std::to_string(v.value()) + "\n";
    }
    for (const Edge& e : g.edges())
        out += std::to_string(e.lo().value()) + " " + std::to_string(e.hi().value()) + "\n";
    return out;
}

/// Stable content hash (64-bit FNV-1a of the serialized graph), as 16 hex digits.
inline std::string graph_hash(const Graph& g) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : serialize_graph(g)) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

}  // namespace subhopf
