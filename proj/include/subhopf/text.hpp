#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dual.hpp"
#include "graph.hpp"
#include "linear_combination.hpp"
#include "workspace.hpp"

namespace subhopf {

// ---------------------------------------------------------------------------
// Canonical rendering

inline std::string render(const ConnectedSubgraph& c) {
    std::string s = "{";
    for (std::size_t i = 0; i < c.vertices().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c.vertices()[i].value());
    }
    if (!c.edges().empty()) {
        s += "|";
        for (std::size_t i = 0; i < c.edges().size(); ++i) {
            if (i) s += ",";
            s += std::to_string(c.edges()[i].lo().value()) + "-" + std::to_string(c.edges()[i].hi().value());
        }
    }
    return s + "}";
}

inline std::string render(const Monomial& m) {
    if (m.is_unit()) return "1";
    std::string s;
    for (const auto& f : m.factors()) {
        if (!s.empty()) s += "*";
        s += render(f);
    }
    return s;
}

inline std::string render(const Scalar& s) { return s.str(); }

namespace detail {

// One term of a signed sum. A bare unit body renders as its coefficient.
inline std::string render_term(const Scalar& c, const std::string& body, bool first, bool body_is_unit) {
    const bool negative = c < 0;
    const Scalar magnitude = negative ? Scalar(-c) : c;
    std::string out = first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    if (body_is_unit) return out + magnitude.str();
    if (magnitude != 1)
        out += magnitude.str() + " ";
    else if (first && negative)
        out += "1 ";
    return out + body;
}

template <class LC, class Body, class IsUnit>
std::string render_sum(const LC& x, Body&& body, IsUnit&& is_unit) {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : x) {
        out += render_term(c, body(k), first, is_unit(k));
        first = false;
    }
    return out;
}

}  // namespace detail

/// Signed sum such as `-1 {1,2|1-2} + 2 {1}*{2}`.
inline std::string render(const Element& x) {
    return detail::render_sum(x, [](const Monomial& m) { return render(m); },
                              [](const Monomial& m) { return m.is_unit(); });
}

inline std::string render(const TensorElement& t) {
    return detail::render_sum(
        t, [](const MonomialPair& p) { return render(p.first) + " (x) " + render(p.second); },
        [](const MonomialPair&) { return false; });
}

inline std::string render_dual(const Monomial& m) { return "Z[" + render(m) + "]"; }

inline std::string render(const DualElement& z) {
    return detail::render_sum(z, [](const Monomial& m) { return render_dual(m); },
                              [](const Monomial&) { return false; });
}

inline std::string render(const DualTensorElement& t) {
    return detail::render_sum(
        t, [](const MonomialPair& p) { return render_dual(p.first) + " (x) " + render_dual(p.second); },
        [](const MonomialPair&) { return false; });
}

// ---------------------------------------------------------------------------
// Expressions
//
//   expr     := term (('+' | '-') term)*
//   term     := ['-'] [rational] factor ('*' factor)*  |  ['-'] rational
//   factor   := subgraph | rational | name '(' expr ')' | 'Z' '[' expr ']' | '(' expr ')'
//   subgraph := '{' intlist ['|' edgelist] '}'

/// Syntax error with the byte offset where it was detected.
class parse_error : public input_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : input_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

struct Expression {
    enum class Kind { scalar, subgraph, sum, product, call };

    Kind kind = Kind::scalar;
    std::size_t position = 0;
    Scalar value = 0;                                                // scalar; coefficient of a product
    std::vector<std::uint64_t> vertices;                             // subgraph
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;      // subgraph
    std::string function;                                            // call
    std::vector<Expression> children;                                // sum, product, call
    std::vector<int> signs;                                          // sum: +1 / -1 per child
};

namespace detail {

class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    Expression parse() {
        Expression e = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& why) const { throw parse_error(why, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool peek_digit() {
        skip_space();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }
    bool peek_alpha() {
        skip_space();
        return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
    }

    std::uint64_t natural() {
        if (!peek_digit()) fail("expected a number");
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string digits(text_.substr(start, pos_ - start));
        if (digits.size() > 19) fail("number too large");
        return std::stoull(digits);
    }

    Scalar rational() {
        if (!peek_digit()) fail("expected a number");
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        boost::multiprecision::cpp_int num(std::string(text_.substr(start, pos_ - start)));
        boost::multiprecision::cpp_int den = 1;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            std::size_t dstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (dstart == pos_) fail("expected a denominator");
            den = boost::multiprecision::cpp_int(std::string(text_.substr(dstart, pos_ - dstart)));
            if (den == 0) fail("zero denominator");
        }
        return Scalar(num, den);
    }

    bool starts_factor() { return peek('{') || peek('(') || peek_digit() || peek_alpha(); }

    Expression expr() {
        skip_space();
        Expression sum;
        sum.kind = Expression::Kind::sum;
        sum.position = pos_;
        sum.children.push_back(term());
        sum.signs.push_back(1);
        while (true) {
            if (accept('+')) {
                sum.signs.push_back(1);
            } else if (accept('-')) {
                sum.signs.push_back(-1);
            } else {
                break;
            }
            sum.children.push_back(term());
        }
        if (sum.children.size() == 1 && sum.signs[0] == 1) return std::move(sum.children[0]);
        return sum;
    }

    Expression term() {
        skip_space();
        Expression prod;
        prod.kind = Expression::Kind::product;
        prod.position = pos_;
        prod.value = 1;
        if (accept('-')) prod.value = -1;
        if (peek_digit()) {
            Scalar c = rational();
            skip_space();
            if (!peek('*') && starts_factor()) {
                prod.value *= c;
            } else {
                Expression s;
                s.kind = Expression::Kind::scalar;
                s.position = prod.position;
                s.value = c;
                prod.children.push_back(std::move(s));
                while (accept('*')) prod.children.push_back(factor());
                return prod;
            }
        }
        prod.children.push_back(factor());
        while (accept('*')) prod.children.push_back(factor());
        return prod;
    }

    Expression factor() {
        skip_space();
        Expression e;
        e.position = pos_;
        if (peek('{')) return subgraph();
        if (peek_digit()) {
            e.kind = Expression::Kind::scalar;
            e.value = rational();
            return e;
        }
        if (accept('(')) {
            e = expr();
            expect(')');
            return e;
        }
        if (peek_alpha()) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            e.kind = Expression::Kind::call;
            e.function = std::string(text_.substr(start, pos_ - start));
            if (e.function != "delta" && e.function != "eps" && e.function != "S" && e.function != "Z") {
                pos_ = start;
                fail("unknown function '" + e.function + "'");
            }
            char close = ')';
            if (e.function == "Z" && accept('[')) {
                close = ']';
            } else {
                expect('(');
            }
            e.children.push_back(expr());
            expect(close);
            return e;
        }
        if (pos_ >= text_.size()) fail("unexpected end of input");
        fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }

    Expression subgraph() {
        Expression e;
        e.kind = Expression::Kind::subgraph;
        skip_space();
        e.position = pos_;
        expect('{');
        do {
            e.vertices.push_back(natural());
        } while (accept(','));
        if (accept('|')) {
            do {
                std::uint64_t a = natural();
                expect('-');
                std::uint64_t b = natural();
                e.edges.emplace_back(a, b);
            } while (accept(','));
        }
        expect('}');
        return e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Expression parse_expression(std::string_view text) { return detail::ExpressionParser(text).parse(); }

/// Result of evaluating an expression.
using Value = std::variant<Element, TensorElement, DualElement, DualTensorElement>;

inline std::string render(const Value& v) {
    return std::visit([](const auto& x) { return render(x); }, v);
}

/// Builds the subgraph named by a literal, checked against the host graph.
inline ConnectedSubgraph resolve_subgraph(const Graph& host, const std::vector<std::uint64_t>& vertices,
                                          const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges,
                                          std::size_t position = 0) {
    auto fail = [&](const std::string& why) { throw parse_error(why, position); };
    std::vector<VertexId> vs;
    std::vector<Edge> es;
    for (auto v : vertices) {
        if (v == 0) fail("vertex labels start at 1");
        vs.emplace_back(v);
    }
    for (auto [a, b] : edges) {
        if (a == b) fail("loop edge in subgraph literal");
        if (a == 0 || b == 0) fail("vertex labels start at 1");
        es.emplace_back(VertexId(a), VertexId(b));
        if (std::find(vertices.begin(), vertices.end(), a) == vertices.end() ||
            std::find(vertices.begin(), vertices.end(), b) == vertices.end())
            fail("edge endpoint missing from the vertex list");
    }
    Graph g(std::move(vs), std::move(es));
    if (!is_connected(g)) fail("subgraph literal is not connected");
    if (!is_subgraph_of(g, host)) fail("unknown subgraph: not contained in the host graph");
    return ConnectedSubgraph(std::move(g));
}

namespace detail {

class Evaluator {
public:
    Evaluator(const Workspace& ws, std::optional<std::size_t> max_dual_degree)
        : ws_(ws), max_dual_degree_(max_dual_degree) {}

    Value eval(const Expression& e, bool top_level) const {
        using K = Expression::Kind;
        switch (e.kind) {
            case K::scalar:
                return unit(e.value);
            case K::subgraph:
                return element(Monomial{resolve_subgraph(ws_.graph(), e.vertices, e.edges, e.position)});
            case K::sum: {
                Value acc = eval(e.children[0], top_level);
                negate_if(acc, e.signs[0]);
                for (std::size_t i = 1; i < e.children.size(); ++i) {
                    Value v = eval(e.children[i], top_level);
                    negate_if(v, e.signs[i]);
                    if (acc.index() != v.index()) throw parse_error("cannot add values of different kinds", e.children[i].position);
                    std::visit([&](auto& a) { a += std::get<std::decay_t<decltype(a)>>(v); }, acc);
                }
                return acc;
            }
            case K::product: {
                Value acc = e.children.size() == 1 ? eval(e.children[0], top_level) : eval(e.children[0], false);
                for (std::size_t i = 1; i < e.children.size(); ++i) acc = product(acc, eval(e.children[i], false), e.children[i].position);
                if (e.value != 1) std::visit([&](auto& a) { a *= e.value; }, acc);
                return acc;
            }
            case K::call:
                return call(e, top_level);
        }
        throw parse_error("bad expression", e.position);
    }

private:
    static void negate_if(Value& v, int sign) {
        if (sign < 0) std::visit([](auto& a) { a *= Scalar(-1); }, v);
    }

    static const Element& need_element(const Value& v, const std::string& what, std::size_t pos) {
        if (auto* x = std::get_if<Element>(&v)) return *x;
        throw parse_error(what, pos);
    }

    static std::optional<Scalar> as_scalar(const Value& v) {
        auto* x = std::get_if<Element>(&v);
        if (!x) return std::nullopt;
        for (const auto& [m, c] : *x)
            if (!m.is_unit()) return std::nullopt;
        return counit(*x);
    }

    Value product(const Value& a, const Value& b, std::size_t pos) const {
        if (std::holds_alternative<TensorElement>(a) || std::holds_alternative<TensorElement>(b) ||
            std::holds_alternative<DualTensorElement>(a) || std::holds_alternative<DualTensorElement>(b))
            throw parse_error("delta may only appear at top level", pos);
        if (std::holds_alternative<Element>(a) && std::holds_alternative<Element>(b))
            return multiply(std::get<Element>(a), std::get<Element>(b));
        if (std::holds_alternative<DualElement>(a) && std::holds_alternative<DualElement>(b)) {
            const auto& za = std::get<DualElement>(a);
            const auto& zb = std::get<DualElement>(b);
            check_dual_degree(za, zb, pos);
            return dual_product(ws_.algebra, ws_.bases, za, zb);
        }
        // scalar times dual
        if (auto s = as_scalar(a)) return *s * std::get<DualElement>(b);
        if (auto s = as_scalar(b)) return std::get<DualElement>(a) * *s;
        throw parse_error("cannot multiply an element by a dual element", pos);
    }

    void check_dual_degree(const DualElement& a, const DualElement& b, std::size_t pos) const {
        if (!max_dual_degree_) return;
        for (const auto& [ma, ca] : a)
            for (const auto& [mb, cb] : b)
                if (ma.degree() + mb.degree() > *max_dual_degree_)
                    throw parse_error("dual product degree " + std::to_string(ma.degree() + mb.degree()) +
                                          " exceeds the maximum " + std::to_string(*max_dual_degree_),
                                      pos);
    }

    Value call(const Expression& e, bool top_level) const {
        const Value arg = eval(e.children[0], false);
        const std::size_t pos = e.children[0].position;
        if (std::holds_alternative<TensorElement>(arg) || std::holds_alternative<DualTensorElement>(arg))
            throw parse_error("delta may only appear at top level", pos);
        if (e.function == "delta") {
            if (!top_level) throw parse_error("delta may only appear at top level", e.position);
            if (auto* z = std::get_if<DualElement>(&arg)) return dual_coproduct(*z);
            return ws_.algebra.coproduct(std::get<Element>(arg));
        }
        if (e.function == "eps") {
            if (auto* z = std::get_if<DualElement>(&arg)) return unit(dual_counit(*z));
            return unit(counit(std::get<Element>(arg)));
        }
        if (e.function == "S") return ws_.algebra.antipode_recursive(need_element(arg, "S expects an element", pos));
        // Z
        const Element& x = need_element(arg, "Z expects an element", pos);
        DualElement z;
        for (const auto& [m, c] : x) z.add(m, c);
        return z;
    }

    const Workspace& ws_;
    std::optional<std::size_t> max_dual_degree_;
};

}  // namespace detail

/// Evaluates an expression against the workspace's host graph. Dual products
/// whose summed degree exceeds `max_dual_degree` are rejected.
inline Value evaluate(const Expression& e, const Workspace& ws, std::optional<std::size_t> max_dual_degree = {}) {
    return detail::Evaluator(ws, max_dual_degree).eval(e, true);
}

inline Value evaluate(std::string_view text, const Workspace& ws, std::optional<std::size_t> max_dual_degree = {}) {
    return evaluate(parse_expression(text), ws, max_dual_degree);
}

/// Parses text that must denote an element of H (no dual or tensor parts).
inline Element parse_element(std::string_view text, const Workspace& ws) {
    Value v = evaluate(text, ws);
    if (auto* x = std::get_if<Element>(&v)) return *x;
    throw input_error("expression does not denote an element of the algebra");
}

/// Parses text that must denote a single basis monomial with coefficient 1.
inline Monomial parse_monomial(std::string_view text, const Workspace& ws) {
    Value v = evaluate(text, ws);
    Element x;
    if (auto* e = std::get_if<Element>(&v)) {
        x = *e;
    } else if (auto* z = std::get_if<DualElement>(&v)) {
        for (const auto& [m, c] : *z) x.add(m, c);
    }
    if (x.size() != 1 || x.begin()->second != 1) throw input_error("expected a single monomial");
    return x.begin()->first;
}

}  // namespace subhopf
