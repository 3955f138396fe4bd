#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "poc/enumerate.hpp"
#include "poc/recognizers.hpp"
#include "poc/solver.hpp"

using namespace poc;

TEST_CASE("named graphs")
{
    CHECK(poc::poc(path_graph(5)) == Ratio(3, 2));
    CHECK(poc::poc(cycle_graph(4)) == Ratio(3, 2));
    CHECK(poc::poc(cycle_graph(5)) == Ratio(4, 3));
    CHECK(poc::poc(path_graph(7)) == Ratio(5, 3));
    CHECK(poc::poc(cycle_graph(6)) == Ratio(5, 3));
    CHECK(poc::poc(pattern(PatternId::Delta1).graph) == Ratio(5, 3));
    CHECK(poc::poc(pattern(PatternId::Delta2).graph) == Ratio(5, 3));
    CHECK(poc::poc(path_graph(2)) == Ratio(1));
    CHECK(poc::poc(complete_graph(6)) == Ratio(1));
    CHECK(poc::poc(star_graph(5)) == Ratio(1));
}

TEST_CASE("edgeless graphs")
{
    auto g = Graph::edgeless(4);
    CHECK(vertex_cover_number(g).value == 0);
    CHECK(connected_vertex_cover_number(g).value == 0);
    CHECK_THROWS_AS(poc::poc(g), UndefinedPocError);
    SolverCache cache;
    CHECK_THROWS_AS(cache.poc(g), UndefinedPocError);
}

TEST_CASE("disconnected graphs sum per component")
{
    // P5 + C5 + isolated vertex
    auto g = disjoint_union(disjoint_union(path_graph(5), cycle_graph(5)), Graph::edgeless(1));
    auto vc = vertex_cover_number(g);
    auto cvc = connected_vertex_cover_number(g);
    CHECK(vc.value == 5);
    CHECK(cvc.value == 7);
    CHECK(poc::poc(g) == Ratio(7, 5));
    REQUIRE(cvc.per_component.size() == 3);
    CHECK(cvc.per_component[0].value == 3);
    CHECK(cvc.per_component[1].value == 4);
    CHECK(cvc.per_component[2].value == 0);
    CHECK(is_connected_vertex_cover(g, cvc.witness));
    CHECK(is_vertex_cover(g, vc.witness));
}

TEST_CASE("exact tau and tauc against subset search on all graphs up to 7 vertices")
{
    auto levels = all_graphs_up_to(7);
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 7; ++n) {
        for (const auto& g : levels[n]) {
            auto vc = vertex_cover_number(g);
            auto cvc = connected_vertex_cover_number(g);
            CHECK(vc.value == oracle::tau(g));
            CHECK(cvc.value == oracle::tauc(g));
            CHECK(is_vertex_cover(g, vc.witness));
            CHECK(vc.witness.size() == static_cast<std::size_t>(vc.value));
            CHECK(is_connected_vertex_cover(g, cvc.witness));
            CHECK(cvc.witness.size() == static_cast<std::size_t>(cvc.value));
            ++checked;
        }
    }
    CHECK(checked == 1 + 2 + 4 + 11 + 34 + 156 + 1044);
}

TEST_CASE("random graphs with 12 to 16 vertices against subset search")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = oracle::random_graph(12 + trial % 5, 0.2 + 0.01 * (trial % 20), rng);
        CHECK(vertex_cover_number(g).value == oracle::tau(g));
        CHECK(connected_vertex_cover_number(g).value == oracle::tauc(g));
    }
}

TEST_CASE("larger sparse graphs keep the basic bounds")
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 20; ++trial) {
        auto g = oracle::random_graph(40, 0.06, rng);
        auto vc = vertex_cover_number(g);
        auto cvc = connected_vertex_cover_number(g);
        CHECK(is_vertex_cover(g, vc.witness));
        CHECK(is_connected_vertex_cover(g, cvc.witness));
        CHECK(vc.value <= cvc.value);
        // per component: tauc <= 2 tau - 1
        for (std::size_t i = 0; i < vc.per_component.size(); ++i) {
            auto t = vc.per_component[i].value;
            auto tc = cvc.per_component[i].value;
            if (t > 0)
                CHECK(tc <= 2 * t - 1);
        }
    }
    auto long_path = path_graph(300);
    CHECK(vertex_cover_number(long_path).value == 150);
    CHECK(connected_vertex_cover_number(long_path).value == 298);
    auto long_cycle = cycle_graph(101);
    CHECK(vertex_cover_number(long_cycle).value == 51);
    CHECK(connected_vertex_cover_number(long_cycle).value == 100);
}

TEST_CASE("all minimum vertex covers")
{
    auto covers = all_minimum_vertex_covers(cycle_graph(4));
    REQUIRE(covers.size() == 2);
    CHECK(covers[0].to_vector() == std::vector<int>{0, 2});
    CHECK(covers[1].to_vector() == std::vector<int>{1, 3});
    CHECK(all_minimum_vertex_covers(path_graph(5)).size() == 1);
    CHECK(all_minimum_vertex_covers(cycle_graph(5)).size() == 5);
    CHECK(all_minimum_vertex_covers(complete_graph(4)).size() == 4);
    CHECK_THROWS_AS(all_minimum_vertex_covers(path_graph(30)), std::length_error);

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = oracle::random_graph(9, 0.35, rng);
        const int t = oracle::tau(g);
        std::vector<VertexSet> expected;
        for (std::uint32_t mask = 0; mask < (1U << 9); ++mask) {
            if (std::popcount(mask) != t || !oracle::covers(g, mask))
                continue;
            std::vector<int> members;
            for (int v = 0; v < 9; ++v)
                if ((mask >> v) & 1U)
                    members.push_back(v);
            expected.emplace_back(9, members);
        }
        std::sort(expected.begin(), expected.end());
        CHECK(all_minimum_vertex_covers(g) == expected);
    }
}

TEST_CASE("solver cache agrees with direct solving")
{
    SolverCache cache;
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = oracle::random_graph(7, 0.4, rng);
        if (g.edge_count() == 0)
            continue;
        CHECK(cache.poc(g) == poc::poc(g));
        auto perm = oracle::random_permutation(7, rng);
        CHECK(cache.poc(relabel(g, perm)) == poc::poc(g));
    }
    CHECK(cache.hits() > 0);
    CHECK(cache.size() > 0);
    CHECK(cache.size() == cache.misses());
}
