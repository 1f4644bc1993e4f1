#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace bpdyn {

/// Subset of the vertices {0..order-1} of a fixed-order graph, held as a
/// bitmask. Immutable.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::uint32_t bits, int order);
    static VertexSet empty(int order) { return VertexSet(0, order); }
    static VertexSet full(int order);
    static VertexSet of(std::initializer_list<int> members, int order);

    std::uint32_t bits() const { return bits_; }
    int order() const { return order_; }
    int size() const;
    bool contains(int v) const { return v >= 0 && v < order_ && ((bits_ >> v) & 1u); }
    bool operator==(const VertexSet& o) const { return bits_ == o.bits_ && order_ == o.order_; }

private:
    std::uint32_t bits_ = 0;
    int order_ = 0;
};

/// Simple undirected graph on vertices 0..order-1 with bitset adjacency
/// rows. Immutable after construction; order is capped at kMaxOrder so that
/// all 2^order vertex subsets stay enumerable.
class Graph {
public:
    static constexpr int kMaxOrder = 26;

    explicit Graph(int order);
    Graph(int order, const std::vector<std::pair<int, int>>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    std::uint32_t neighbor_bits(int v) const;
    bool adjacent(int u, int v) const;
    int degree(int v) const;
    int edge_count() const;
    int isolated_vertex_count() const;
    bool has_isolated_vertex() const { return isolated_vertex_count() > 0; }
    std::uint32_t full_mask() const { return (order() == 32) ? ~0u : ((1u << order()) - 1u); }
    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    std::vector<std::uint32_t> adj_;
};

enum class GraphFamily { complete, empty, star, path, cycle, wheel };

/// Classical families with fixed labeling: star/wheel hub at vertex 0,
/// path 0-1-...-(n-1), cycle 0-1-...-(n-1)-0, wheel rim cycle on 1..n-1.
Graph make_family(GraphFamily family, int n);

/// Vertices of h relabeled by +g.order(); no cross edges.
Graph disjoint_union(const Graph& g, const Graph& h);

/// k >= 1 disjoint copies of g.
Graph repeat_union(int k, const Graph& g);

/// Mini-language: expr := term ('+' term)* ; term := [k '*'] atom ;
/// atom := ('K'|'E'|'S'|'P'|'C'|'W') n | "edges:" n ":" i-j (',' i-j)*.
/// Whitespace is ignored. '+' is disjoint union, 'k*X' repeats X k times.
Graph parse_graph_spec(const std::string& text);

/// Edge-list file: first line n, then one "i j" pair per line.
Graph read_edge_list(std::istream& in);

/// Exterior vertex boundary: vertices outside s adjacent to a member of s.
VertexSet vertex_boundary(const Graph& g, const VertexSet& s);

/// Visits every labeled graph on `order` vertices (2^C(order,2) of them).
void for_each_graph(int order, const std::function<void(const Graph&)>& fn);

}  // namespace bpdyn
