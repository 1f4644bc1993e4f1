#include "bpdyn/graph.hpp"

#include <bit>
#include <cctype>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "bpdyn/errors.hpp"

namespace bpdyn {

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::uint32_t bits, int order) : bits_(bits), order_(order) {
    if (order < 0 || order > Graph::kMaxOrder)
        throw std::invalid_argument("vertex set order out of range");
    std::uint32_t mask = (order == 32) ? ~0u : ((1u << order) - 1u);
    if (bits & ~mask) throw std::invalid_argument("vertex set has members outside 0..order-1");
}

VertexSet VertexSet::full(int order) {
    return VertexSet((order == 32) ? ~0u : ((1u << order) - 1u), order);
}

VertexSet VertexSet::of(std::initializer_list<int> members, int order) {
    std::uint32_t bits = 0;
    for (int v : members) {
        if (v < 0 || v >= order) throw std::invalid_argument("vertex index outside 0..order-1");
        bits |= 1u << v;
    }
    return VertexSet(bits, order);
}

int VertexSet::size() const { return std::popcount(bits_); }

// -------------------------------------------------------------------- Graph

Graph::Graph(int order) {
    if (order < 1) throw std::invalid_argument("graph order must be at least 1");
    if (order > kMaxOrder)
        throw CapacityError("graph order " + std::to_string(order) + " exceeds enumeration cap " +
                            std::to_string(kMaxOrder));
    adj_.assign(order, 0u);
}

Graph::Graph(int order, const std::vector<std::pair<int, int>>& edges) : Graph(order) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= order || v >= order)
            throw std::invalid_argument("edge endpoint outside 0..order-1");
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        adj_[u] |= 1u << v;
        adj_[v] |= 1u << u;
    }
}

std::uint32_t Graph::neighbor_bits(int v) const {
    if (v < 0 || v >= order()) throw std::invalid_argument("vertex index out of range");
    return adj_[v];
}

bool Graph::adjacent(int u, int v) const { return (neighbor_bits(u) >> v) & 1u; }

int Graph::degree(int v) const { return std::popcount(neighbor_bits(v)); }

int Graph::edge_count() const {
    int total = 0;
    for (auto row : adj_) total += std::popcount(row);
    return total / 2;
}

int Graph::isolated_vertex_count() const {
    int count = 0;
    for (auto row : adj_) count += (row == 0);
    return count;
}

// ----------------------------------------------------------------- builders

Graph make_family(GraphFamily family, int n) {
    if (n < 1) throw std::invalid_argument("family order must be at least 1");
    switch (family) {
        case GraphFamily::complete: {
            Graph g(n);
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            return Graph(n, edges);
        }
        case GraphFamily::empty:
            return Graph(n);
        case GraphFamily::star: {
            std::vector<std::pair<int, int>> edges;
            for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
            return Graph(n, edges);
        }
        case GraphFamily::path: {
            std::vector<std::pair<int, int>> edges;
            for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
            return Graph(n, edges);
        }
        case GraphFamily::cycle: {
            if (n < 3) throw std::invalid_argument("cycle graph requires order >= 3");
            std::vector<std::pair<int, int>> edges;
            for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
            return Graph(n, edges);
        }
        case GraphFamily::wheel: {
            if (n < 4) throw std::invalid_argument("wheel graph requires order >= 4");
            std::vector<std::pair<int, int>> edges;
            for (int v = 1; v < n; ++v) {
                edges.emplace_back(0, v);
                edges.emplace_back(v, v == n - 1 ? 1 : v + 1);
            }
            return Graph(n, edges);
        }
    }
    throw std::invalid_argument("unknown graph family");
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int n = g.order() + h.order();
    if (n > Graph::kMaxOrder)
        throw CapacityError("disjoint union of orders " + std::to_string(g.order()) + "+" +
                            std::to_string(h.order()) + " exceeds enumeration cap");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.adjacent(u, v)) edges.emplace_back(u, v);
    int off = g.order();
    for (int u = 0; u < h.order(); ++u)
        for (int v = u + 1; v < h.order(); ++v)
            if (h.adjacent(u, v)) edges.emplace_back(u + off, v + off);
    return Graph(n, edges);
}

Graph repeat_union(int k, const Graph& g) {
    if (k < 1) throw std::invalid_argument("repeat count must be at least 1");
    Graph out = g;
    for (int i = 1; i < k; ++i) out = disjoint_union(out, g);
    return out;
}

// ------------------------------------------------------------------- parser

namespace {

class SpecParser {
public:
    explicit SpecParser(const std::string& text) : text_(text) {}

    Graph parse() {
        Graph g = parse_term();
        skip_ws();
        while (!eof() && peek() == '+') {
            ++pos_;
            g = disjoint_union(g, parse_term());
            skip_ws();
        }
        if (!eof()) fail("unexpected trailing input");
        return g;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("graph spec error at position " + std::to_string(pos_) + ": " +
                                    msg);
    }
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    int parse_int() {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
        long value = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > 1000000) fail("integer too large");
            ++pos_;
        }
        return static_cast<int>(value);
    }

    Graph parse_term() {
        skip_ws();
        std::size_t save = pos_;
        if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            int k = parse_int();
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
                return repeat_union(k, parse_atom());
            }
            pos_ = save;  // a bare integer is not a term
            fail("expected 'k*' repetition or a family/edges atom");
        }
        return parse_atom();
    }

    Graph parse_atom() {
        skip_ws();
        if (eof()) fail("expected a graph atom");
        if (text_.compare(pos_, 6, "edges:") == 0) {
            pos_ += 6;
            return parse_edges_literal();
        }
        char c = peek();
        GraphFamily family;
        switch (c) {
            case 'K': family = GraphFamily::complete; break;
            case 'E': family = GraphFamily::empty; break;
            case 'S': family = GraphFamily::star; break;
            case 'P': family = GraphFamily::path; break;
            case 'C': family = GraphFamily::cycle; break;
            case 'W': family = GraphFamily::wheel; break;
            default: fail(std::string("unknown family token '") + c + "'");
        }
        ++pos_;
        int n = parse_int();
        return make_family(family, n);
    }

    Graph parse_edges_literal() {
        int n = parse_int();
        skip_ws();
        if (eof() || peek() != ':') fail("expected ':' after vertex count");
        ++pos_;
        std::vector<std::pair<int, int>> edges;
        while (true) {
            int i = parse_int();
            skip_ws();
            if (eof() || peek() != '-') fail("expected '-' inside edge");
            ++pos_;
            int j = parse_int();
            if (i >= n || j >= n) fail("edge endpoint outside 0..n-1");
            if (i == j) fail("self-loops are not allowed");
            edges.emplace_back(i, j);
            skip_ws();
            if (eof() || peek() != ',') break;
            ++pos_;
        }
        return Graph(n, edges);
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

Graph parse_graph_spec(const std::string& text) { return SpecParser(text).parse(); }

Graph read_edge_list(std::istream& in) {
    int n = 0;
    if (!(in >> n)) throw std::invalid_argument("edge-list file: missing vertex count");
    std::vector<std::pair<int, int>> edges;
    int i, j;
    while (in >> i >> j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

// --------------------------------------------------------------- operations

VertexSet vertex_boundary(const Graph& g, const VertexSet& s) {
    if (s.order() != g.order())
        throw std::invalid_argument("vertex set order does not match graph order");
    std::uint32_t reach = 0;
    std::uint32_t bits = s.bits();
    while (bits) {
        int v = std::countr_zero(bits);
        bits &= bits - 1;
        reach |= g.neighbor_bits(v);
    }
    return VertexSet(reach & ~s.bits() & g.full_mask(), g.order());
}

void for_each_graph(int order, const std::function<void(const Graph&)>& fn) {
    if (order < 1 || order > 11)
        throw std::invalid_argument("graph sweep supported for orders 1..11");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v) pairs.emplace_back(u, v);
    std::uint64_t total = 1ull << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b)
            if ((mask >> b) & 1ull) edges.push_back(pairs[b]);
        fn(Graph(order, edges));
    }
}

}  // namespace bpdyn
