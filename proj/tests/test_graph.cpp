#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "poc/enumerate.hpp"
#include "poc/graph.hpp"

using namespace poc;

TEST_CASE("from_edges collapses duplicates and rejects bad input")
{
    auto g = Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{-1, 0}}), GraphError);
    CHECK_THROWS_AS(Graph::edgeless(0), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(20, {{0, 1}}, 10), GraphError);
}

TEST_CASE("wide graphs span several words per row")
{
    auto g = path_graph(200);
    CHECK(g.edge_count() == 199);
    CHECK(g.adjacent(127, 128));
    CHECK(g.degree(150) == 2);
    CHECK(g.neighbors(64) == std::vector<int>{63, 65});
    CHECK(is_tree(g));
    CHECK(bridges(g).size() == 199);
    CHECK(cutvertices(g).size() == 198);
}

TEST_CASE("components, bridges and cut vertices")
{
    auto g = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {4, 5}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0].to_vector() == std::vector<int>{0, 1, 2, 3});
    CHECK(comps[1].to_vector() == std::vector<int>{4, 5});
    CHECK(comps[2].to_vector() == std::vector<int>{6});
    CHECK_FALSE(is_connected(g));
    CHECK(bridges(g) == std::vector<Edge>{{2, 3}, {4, 5}});
    CHECK(cutvertices(g).to_vector() == std::vector<int>{2});

    CHECK(bridges(cycle_graph(5)).empty());
    CHECK(cutvertices(cycle_graph(5)).size() == 0);
    CHECK(cutvertices(path_graph(4)).to_vector() == std::vector<int>{1, 2});
    CHECK(cutvertices(star_graph(3)).to_vector() == std::vector<int>{0});
}

TEST_CASE("bipartition reports an odd cycle when it fails")
{
    CHECK(is_bipartite(cycle_graph(6)));
    auto b = bipartition(cycle_graph(7));
    CHECK_FALSE(b.bipartite);
    REQUIRE(b.odd_cycle.size() % 2 == 1);
    for (std::size_t i = 0; i < b.odd_cycle.size(); ++i)
        CHECK(cycle_graph(7).adjacent(b.odd_cycle[i], b.odd_cycle[(i + 1) % b.odd_cycle.size()]));
    auto c = bipartition(path_graph(4));
    CHECK(c.coloring[0] != c.coloring[1]);
    CHECK(c.coloring[0] == c.coloring[2]);
}

TEST_CASE("odd cycle witnesses on random non-bipartite graphs")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = oracle::random_graph(9, 0.3, rng);
        auto b = bipartition(g);
        if (b.bipartite) {
            for (auto [u, v] : g.edges())
                CHECK(b.coloring[u] != b.coloring[v]);
            continue;
        }
        const auto& cyc = b.odd_cycle;
        REQUIRE(cyc.size() % 2 == 1);
        for (std::size_t i = 0; i < cyc.size(); ++i)
            CHECK(g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
    }
}

TEST_CASE("distance between vertex sets")
{
    auto g = path_graph(6);
    CHECK(distance(g, VertexSet(6, {0}), VertexSet(6, {5})) == 5);
    CHECK(distance(g, VertexSet(6, {0, 1}), VertexSet(6, {1, 4})) == 0);
    CHECK(distance(g, VertexSet(6, {0}), VertexSet(6, {3, 4})) == 3);
    auto h = Graph::from_edges(4, {{0, 1}});
    CHECK_FALSE(distance(h, VertexSet(4, {0}), VertexSet(4, {3})).has_value());
    CHECK_THROWS(distance(g, VertexSet(6), VertexSet(6, {1})));
}

TEST_CASE("induced subgraph, union, relabel, edge removal")
{
    auto g = cycle_graph(5);
    auto sub = induced_subgraph(g, VertexSet(5, {0, 1, 3}));
    CHECK(sub.original == std::vector<int>{0, 1, 3});
    CHECK(sub.graph.edge_count() == 1);
    CHECK(sub.graph.adjacent(0, 1));

    auto u = disjoint_union(path_graph(2), path_graph(3));
    CHECK(u.vertex_count() == 5);
    CHECK(u.edges() == std::vector<Edge>{{0, 1}, {2, 3}, {3, 4}});

    std::vector<int> perm{4, 3, 2, 1, 0};
    auto r = relabel(path_graph(5), perm);
    CHECK(r == path_graph(5));
    std::vector<int> shift{1, 2, 3, 4, 0};
    auto s = relabel(path_graph(5), shift);
    CHECK(s.adjacent(1, 2));
    CHECK(s.adjacent(4, 0));
    CHECK_FALSE(s.adjacent(0, 1));

    auto w = without_edge(g, {1, 2});
    CHECK(w.edge_count() == 4);
    CHECK_FALSE(w == path_graph(5));
    CHECK(is_tree(w));
}

TEST_CASE("vertex cover predicates")
{
    auto g = path_graph(5);
    CHECK(is_vertex_cover(g, VertexSet(5, {1, 3})));
    CHECK_FALSE(is_vertex_cover(g, VertexSet(5, {1, 2})));
    CHECK(is_independent(g, VertexSet(5, {1, 3})));
    CHECK_FALSE(is_connected_vertex_cover(g, VertexSet(5, {1, 3})));
    CHECK(is_connected_vertex_cover(g, VertexSet(5, {1, 2, 3})));

    auto two = Graph::from_edges(5, {{0, 1}, {2, 3}});
    CHECK(is_connected_vertex_cover(two, VertexSet(5, {0, 2})));
    CHECK_FALSE(is_connected_vertex_cover(two, VertexSet(5, {0})));
}

TEST_CASE("adjacency is symmetric and irreflexive; components partition V")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = oracle::random_graph(1 + trial % 30, 0.15, rng);
        const int n = static_cast<int>(g.vertex_count());
        for (int u = 0; u < n; ++u) {
            CHECK_FALSE(g.adjacent(u, u));
            for (int v = 0; v < n; ++v)
                CHECK(g.adjacent(u, v) == g.adjacent(v, u));
        }
        VertexSet seen(g.vertex_count());
        for (const auto& c : connected_components(g)) {
            CHECK_FALSE(c.intersects(seen));
            seen = seen.united(c);
            CHECK(is_connected(induced_subgraph(g, c).graph));
        }
        CHECK(seen == g.vertices());
    }
}

// A vertex cover C of a connected graph whose induced graph falls apart: any
// split of those pieces into two nonempty groups is at distance exactly 2.
TEST_CASE("cover pieces sit at distance two")
{
    auto levels = connected_graphs_up_to(6);
    std::size_t checked = 0;
    for (std::size_t n = 3; n <= 6; ++n) {
        for (const auto& g : levels[n]) {
            for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
                std::vector<int> members;
                for (int v = 0; v < static_cast<int>(n); ++v)
                    if ((mask >> v) & 1U)
                        members.push_back(v);
                VertexSet c(n, members);
                if (!is_vertex_cover(g, c))
                    continue;
                auto sub = induced_subgraph(g, c);
                auto pieces = connected_components(sub.graph);
                if (pieces.size() < 2)
                    continue;
                std::vector<VertexSet> lifted;
                for (const auto& p : pieces) {
                    std::vector<int> orig;
                    for (int v : p.to_vector())
                        orig.push_back(sub.original[v]);
                    lifted.emplace_back(n, orig);
                }
                const std::uint32_t k = static_cast<std::uint32_t>(lifted.size());
                for (std::uint32_t split = 1; split + 1 < (1U << k); ++split) {
                    VertexSet a(n), b(n);
                    for (std::uint32_t i = 0; i < k; ++i) {
                        if ((split >> i) & 1U)
                            a = a.united(lifted[i]);
                        else
                            b = b.united(lifted[i]);
                    }
                    CHECK(distance(g, a, b) == 2);
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("VertexSet value semantics")
{
    VertexSet a(70, {0, 65, 3});
    CHECK(a.size() == 3);
    CHECK(a.to_vector() == std::vector<int>{0, 3, 65});
    CHECK(a.to_string() == "{0,3,65}");
    CHECK(a.contains(65));
    CHECK_FALSE(a.contains(64));
    auto b = a.without(VertexSet(70, {3}));
    CHECK(b.to_vector() == std::vector<int>{0, 65});
    CHECK(b.is_subset_of(a));
    CHECK(VertexSet(70, {1}) < VertexSet(70, {2}));
    CHECK(VertexSet(70, {0, 5}) < VertexSet(70, {1}));
    CHECK(VertexSet::full(5).size() == 5);
}
