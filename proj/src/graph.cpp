#include "poc/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <sstream>

namespace poc {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

std::size_t popcount_words(const std::vector<std::uint64_t>& words)
{
    std::size_t c = 0;
    for (auto w : words)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

void check_same_universe(const VertexSet& a, const VertexSet& b)
{
    if (a.universe() != b.universe())
        throw GraphError("vertex sets over different universes");
}

} // namespace

// ---------------------------------------------------------------- VertexSet

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::span<const int> members) : VertexSet(universe)
{
    for (int v : members) {
        if (v < 0 || static_cast<std::size_t>(v) >= universe)
            throw GraphError("vertex " + std::to_string(v) + " outside universe of size " +
                             std::to_string(universe));
        words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }
    count_ = popcount_words(words_);
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<int> members)
    : VertexSet(universe, std::span<const int>(members.begin(), members.size()))
{
}

VertexSet VertexSet::from_words(std::size_t universe, std::vector<std::uint64_t> words)
{
    words.resize(word_count(universe), 0);
    if (universe % 64 != 0 && !words.empty())
        words.back() &= (std::uint64_t{1} << (universe % 64)) - 1;
    VertexSet s;
    s.universe_ = universe;
    s.words_ = std::move(words);
    s.count_ = popcount_words(s.words_);
    return s;
}

VertexSet VertexSet::full(std::size_t universe)
{
    return from_words(universe, std::vector<std::uint64_t>(word_count(universe), ~std::uint64_t{0}));
}

bool VertexSet::contains(int v) const
{
    if (v < 0 || static_cast<std::size_t>(v) >= universe_)
        return false;
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U;
}

std::vector<int> VertexSet::to_vector() const
{
    std::vector<int> out;
    out.reserve(count_);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        auto bits = words_[w];
        while (bits) {
            out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
            bits &= bits - 1;
        }
    }
    return out;
}

VertexSet VertexSet::united(const VertexSet& other) const
{
    check_same_universe(*this, other);
    auto w = words_;
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] |= other.words_[i];
    return from_words(universe_, std::move(w));
}

VertexSet VertexSet::intersected(const VertexSet& other) const
{
    check_same_universe(*this, other);
    auto w = words_;
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] &= other.words_[i];
    return from_words(universe_, std::move(w));
}

VertexSet VertexSet::without(const VertexSet& other) const
{
    check_same_universe(*this, other);
    auto w = words_;
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] &= ~other.words_[i];
    return from_words(universe_, std::move(w));
}

bool VertexSet::intersects(const VertexSet& other) const
{
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & other.words_[i])
            return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const
{
    check_same_universe(*this, other);
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~other.words_[i])
            return false;
    return true;
}

std::string VertexSet::to_string() const
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : to_vector()) {
        if (!first)
            os << ',';
        os << v;
        first = false;
    }
    os << '}';
    return os.str();
}

bool operator<(const VertexSet& a, const VertexSet& b)
{
    auto va = a.to_vector();
    auto vb = b.to_vector();
    return va < vb;
}

// -------------------------------------------------------------------- Graph

Graph::Graph(std::size_t n) : n_(n), stride_(word_count(n)), rows_(n * word_count(n), 0) {}

void Graph::add_edge(int u, int v)
{
    if (adjacent(u, v))
        return;
    rows_[static_cast<std::size_t>(u) * stride_ + (static_cast<std::size_t>(v) >> 6)] |= std::uint64_t{1} << (v & 63);
    rows_[static_cast<std::size_t>(v) * stride_ + (static_cast<std::size_t>(u) >> 6)] |= std::uint64_t{1} << (u & 63);
    ++m_;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::size_t cap)
{
    if (n == 0)
        throw GraphError("a graph needs at least one vertex");
    if (n > cap)
        throw GraphError("graph with " + std::to_string(n) + " vertices exceeds the cap of " +
                         std::to_string(cap));
    Graph g(n);
    for (const auto& [u, v] : edges) {
        auto pair_text = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
            throw GraphError("edge " + pair_text + " has an endpoint outside 0.." + std::to_string(n - 1));
        if (u == v)
            throw GraphError("self-loop " + pair_text);
        g.add_edge(u, v);
    }
    return g;
}

Graph Graph::from_edges(std::size_t n, std::initializer_list<Edge> edges, std::size_t cap)
{
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()), cap);
}

Graph Graph::edgeless(std::size_t n) { return from_edges(n, std::span<const Edge>{}); }

int Graph::degree(int v) const
{
    int d = 0;
    for (auto w : row(v))
        d += std::popcount(w);
    return d;
}

std::vector<int> Graph::neighbors(int v) const
{
    std::vector<int> out;
    auto r = row(v);
    for (std::size_t w = 0; w < r.size(); ++w) {
        auto bits = r[w];
        while (bits) {
            out.push_back(static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
            bits &= bits - 1;
        }
    }
    return out;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < static_cast<int>(n_); ++u)
        for (int v : neighbors(u))
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

VertexSet Graph::neighborhood(int v) const
{
    auto r = row(v);
    return VertexSet::from_words(n_, std::vector<std::uint64_t>(r.begin(), r.end()));
}

// --------------------------------------------------------------- structure

std::vector<VertexSet> connected_components(const Graph& g)
{
    const int n = static_cast<int>(g.vertex_count());
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> parts;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1)
            continue;
        const int id = static_cast<int>(parts.size());
        parts.emplace_back();
        std::deque<int> queue{s};
        comp[s] = id;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            parts.back().push_back(u);
            for (int w : g.neighbors(u)) {
                if (comp[w] == -1) {
                    comp[w] = id;
                    queue.push_back(w);
                }
            }
        }
    }
    std::vector<VertexSet> out;
    out.reserve(parts.size());
    for (const auto& p : parts)
        out.emplace_back(g.vertex_count(), p);
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    if (s.empty())
        throw GraphError("induced subgraph of an empty vertex set");
    if (s.universe() != g.vertex_count())
        throw GraphError("vertex set does not belong to this graph");
    auto original = s.to_vector();
    std::vector<int> index(g.vertex_count(), -1);
    for (std::size_t i = 0; i < original.size(); ++i)
        index[original[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < original.size(); ++i)
        for (int w : g.neighbors(original[i]))
            if (index[w] > static_cast<int>(i))
                edges.emplace_back(static_cast<int>(i), index[w]);
    return {Graph::from_edges(original.size(), edges, g.vertex_count()), std::move(original)};
}

std::optional<int> distance(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    if (a.empty() || b.empty())
        throw GraphError("distance between empty vertex sets");
    if (a.intersects(b))
        return 0;
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue;
    for (int v : a.to_vector()) {
        dist[v] = 0;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(u)) {
            if (dist[w] != -1)
                continue;
            dist[w] = dist[u] + 1;
            if (b.contains(w))
                return dist[w];
            queue.push_back(w);
        }
    }
    return std::nullopt;
}

namespace {

// One DFS pass computing discovery/low values; iterative so large gadget
// graphs do not hit recursion limits.
struct LowLink {
    std::vector<Edge> bridges;
    std::vector<bool> cut;
};

LowLink low_link(const Graph& g)
{
    const int n = static_cast<int>(g.vertex_count());
    LowLink out;
    out.cut.assign(static_cast<std::size_t>(n), false);
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0),
        parent(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        adj[v] = g.neighbors(v);
    int timer = 0;
    for (int root = 0; root < n; ++root) {
        if (disc[root] != -1)
            continue;
        int root_children = 0;
        std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            auto& [u, idx] = stack.back();
            if (idx < adj[u].size()) {
                int w = adj[u][idx++];
                if (disc[w] == -1) {
                    parent[w] = u;
                    disc[w] = low[w] = timer++;
                    if (u == root)
                        ++root_children;
                    stack.emplace_back(w, 0);
                } else if (w != parent[u]) {
                    low[u] = std::min(low[u], disc[w]);
                }
            } else {
                int child = u;
                stack.pop_back();
                if (stack.empty())
                    break;
                int p = stack.back().first;
                low[p] = std::min(low[p], low[child]);
                if (low[child] > disc[p])
                    out.bridges.emplace_back(std::min(p, child), std::max(p, child));
                if (p != root && low[child] >= disc[p])
                    out.cut[p] = true;
            }
        }
        if (root_children > 1)
            out.cut[root] = true;
    }
    std::sort(out.bridges.begin(), out.bridges.end());
    return out;
}

} // namespace

std::vector<Edge> bridges(const Graph& g) { return low_link(g).bridges; }

VertexSet cutvertices(const Graph& g)
{
    auto ll = low_link(g);
    std::vector<int> members;
    for (std::size_t v = 0; v < ll.cut.size(); ++v)
        if (ll.cut[v])
            members.push_back(static_cast<int>(v));
    return {g.vertex_count(), members};
}

Bipartition bipartition(const Graph& g)
{
    const int n = static_cast<int>(g.vertex_count());
    std::vector<int> color(static_cast<std::size_t>(n), -1), parent(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1)
            continue;
        color[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    // Walk both BFS-tree paths up to their meeting point.
                    std::vector<int> pu{u}, pw{w};
                    while (pu.back() != pw.back()) {
                        if (pu.size() >= pw.size() && parent[pu.back()] != -1)
                            pu.push_back(parent[pu.back()]);
                        else
                            pw.push_back(parent[pw.back()]);
                    }
                    pw.pop_back();
                    std::vector<int> cycle(pu.rbegin(), pu.rend());
                    cycle.insert(cycle.end(), pw.begin(), pw.end());
                    return {false, {}, std::move(cycle)};
                }
            }
        }
    }
    return {true, std::move(color), {}};
}

bool is_bipartite(const Graph& g) { return bipartition(g).bipartite; }

bool is_tree(const Graph& g) { return g.edge_count() + 1 == g.vertex_count() && is_connected(g); }

Graph disjoint_union(const Graph& a, const Graph& b)
{
    auto edges = a.edges();
    const int shift = static_cast<int>(a.vertex_count());
    for (auto [u, v] : b.edges())
        edges.emplace_back(u + shift, v + shift);
    const auto n = a.vertex_count() + b.vertex_count();
    return Graph::from_edges(n, edges);
}

Graph relabel(const Graph& g, std::span<const int> perm)
{
    if (perm.size() != g.vertex_count())
        throw GraphError("permutation size does not match the graph");
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(g.vertex_count(), edges, g.vertex_count());
}

Graph without_edge(const Graph& g, Edge e)
{
    auto edges = g.edges();
    Edge key{std::min(e.first, e.second), std::max(e.first, e.second)};
    auto it = std::find(edges.begin(), edges.end(), key);
    if (it == edges.end())
        throw GraphError("edge not present");
    edges.erase(it);
    return Graph::from_edges(g.vertex_count(), edges, g.vertex_count());
}

bool is_vertex_cover(const Graph& g, const VertexSet& s)
{
    for (auto [u, v] : g.edges())
        if (!s.contains(u) && !s.contains(v))
            return false;
    return true;
}

bool is_independent(const Graph& g, const VertexSet& s)
{
    for (auto [u, v] : g.edges())
        if (s.contains(u) && s.contains(v))
            return false;
    return true;
}

bool is_connected_vertex_cover(const Graph& g, const VertexSet& s)
{
    if (s.universe() != g.vertex_count() || !is_vertex_cover(g, s))
        return false;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 2)
            continue;
        auto part = comp.intersected(s);
        if (part.empty() || !is_connected(induced_subgraph(g, part).graph))
            return false;
    }
    return true;
}

Graph path_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n)
{
    if (n < 3)
        throw GraphError("a cycle needs at least three vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back(static_cast<int>(i), static_cast<int>((i + 1) % n));
    return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves)
{
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= leaves; ++i)
        edges.emplace_back(0, static_cast<int>(i));
    return Graph::from_edges(leaves + 1, edges);
}

} // namespace poc
