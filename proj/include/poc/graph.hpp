#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace poc {

/// Default upper bound on the number of vertices of a Graph. Reduction
/// outputs routinely exceed 64 vertices, so rows are multi-word.
inline constexpr std::size_t kDefaultVertexCap = 512;

using Edge = std::pair<int, int>;

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Subset of the vertices 0..n-1 of some graph. Immutable value type; the
/// cardinality is computed once on construction.
class VertexSet {
public:
    VertexSet() = default;
    /// Empty subset of a universe of `universe` vertices.
    explicit VertexSet(std::size_t universe);
    VertexSet(std::size_t universe, std::span<const int> members);
    VertexSet(std::size_t universe, std::initializer_list<int> members);

    static VertexSet from_words(std::size_t universe, std::vector<std::uint64_t> words);
    static VertexSet full(std::size_t universe);

    std::size_t universe() const { return universe_; }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool contains(int v) const;

    std::vector<int> to_vector() const;
    std::span<const std::uint64_t> words() const { return words_; }

    VertexSet united(const VertexSet& other) const;
    VertexSet intersected(const VertexSet& other) const;
    VertexSet without(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;

    /// "{0,2,5}"
    std::string to_string() const;

    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;
    /// Orders by the sorted member lists, lexicographically.
    friend bool operator<(const VertexSet& a, const VertexSet& b);

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
    std::size_t count_ = 0;
};

/// Immutable simple undirected graph on vertices 0..n-1 with bit-row
/// adjacency. adj is symmetric and irreflexive.
class Graph {
public:
    /// Duplicate pairs (in either orientation) collapse to one edge.
    /// Throws GraphError on a self-loop, an endpoint outside 0..n-1, n == 0
    /// or n above `cap`.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                            std::size_t cap = kDefaultVertexCap);
    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges,
                            std::size_t cap = kDefaultVertexCap);
    static Graph edgeless(std::size_t n);

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }
    bool adjacent(int u, int v) const
    {
        return (rows_[static_cast<std::size_t>(u) * stride_ + (static_cast<std::size_t>(v) >> 6)] >>
                (static_cast<unsigned>(v) & 63U)) & 1U;
    }
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    /// Adjacency row of v as 64-bit words (bit v of word v/64).
    std::span<const std::uint64_t> row(int v) const
    {
        return {rows_.data() + static_cast<std::size_t>(v) * stride_, stride_};
    }
    std::size_t words_per_row() const { return stride_; }
    /// All edges (u < v), sorted.
    std::vector<Edge> edges() const;
    VertexSet neighborhood(int v) const;
    VertexSet vertices() const { return VertexSet::full(n_); }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    Graph(std::size_t n);
    void add_edge(int u, int v);

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> rows_;
};

struct InducedSubgraph {
    Graph graph;
    /// original[i] is the vertex of the source graph relabeled to i.
    std::vector<int> original;
};

/// Parts ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Members of `s` relabeled 0..|s|-1 in ascending order. Throws on empty s.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Hop distance between two vertex sets; 0 when they intersect, nullopt when
/// no path joins them. Throws on an empty argument.
std::optional<int> distance(const Graph& g, const VertexSet& a, const VertexSet& b);

std::vector<Edge> bridges(const Graph& g);
VertexSet cutvertices(const Graph& g);

struct Bipartition {
    bool bipartite = false;
    /// 0/1 per vertex when bipartite.
    std::vector<int> coloring;
    /// Closed walk of odd length (first vertex not repeated) when not.
    std::vector<int> odd_cycle;
};
Bipartition bipartition(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_tree(const Graph& g);

/// a then b, b's vertices shifted by |V(a)|.
Graph disjoint_union(const Graph& a, const Graph& b);
/// Vertex v of g becomes perm[v].
Graph relabel(const Graph& g, std::span<const int> perm);
Graph without_edge(const Graph& g, Edge e);

bool is_vertex_cover(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);
/// s covers every edge and meets each component of g that has an edge in a
/// connected set. Edgeless components are not constrained.
bool is_connected_vertex_cover(const Graph& g, const VertexSet& s);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);

} // namespace poc
