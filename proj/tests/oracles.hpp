#pragma once

// Brute-force reference implementations. Deliberately naive: subsets and
// permutations only, no shared code with the library beyond Graph access.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "poc/graph.hpp"

namespace oracle {

using poc::Graph;

inline bool covers(const Graph& g, std::uint32_t mask)
{
    for (auto [u, v] : g.edges())
        if (!((mask >> u) & 1U) && !((mask >> v) & 1U))
            return false;
    return true;
}

inline bool connected_within(const Graph& g, std::uint32_t mask)
{
    if (mask == 0)
        return true;
    std::uint32_t seen = mask & (~mask + 1);
    bool grew = true;
    while (grew) {
        grew = false;
        for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v) {
            if (!((seen >> v) & 1U))
                continue;
            for (int w : g.neighbors(v)) {
                if (((mask >> w) & 1U) && !((seen >> w) & 1U)) {
                    seen |= std::uint32_t{1} << w;
                    grew = true;
                }
            }
        }
    }
    return seen == mask;
}

/// Smallest vertex cover by scanning every subset.
inline int tau(const Graph& g)
{
    const auto n = g.vertex_count();
    int best = static_cast<int>(n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask)
        if (std::popcount(mask) < best && covers(g, mask))
            best = std::popcount(mask);
    return best;
}

/// Sum over components with an edge of the smallest covering vertex subset
/// of that component that induces a connected graph.
inline int tauc(const Graph& g)
{
    const int n = static_cast<int>(g.vertex_count());
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0)
            continue;
        std::vector<int> stack{s};
        comp[s] = count;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = count;
                    stack.push_back(w);
                }
        }
        ++count;
    }
    int total = 0;
    for (int c = 0; c < count; ++c) {
        std::uint32_t members = 0;
        for (int v = 0; v < n; ++v)
            if (comp[v] == c)
                members |= std::uint32_t{1} << v;
        bool has_edge = false;
        for (auto [u, v] : g.edges())
            has_edge = has_edge || comp[u] == c;
        if (!has_edge)
            continue;
        int best = n + 1;
        for (std::uint32_t sub = members;; sub = (sub - 1) & members) {
            if (std::popcount(sub) < best && connected_within(g, sub)) {
                bool ok = true;
                for (auto [u, v] : g.edges())
                    if (comp[u] == c && !((sub >> u) & 1U) && !((sub >> v) & 1U))
                        ok = false;
                if (ok)
                    best = std::popcount(sub);
            }
            if (sub == 0)
                break;
        }
        total += best;
    }
    return total;
}

/// Every injective map from pattern to host, checked for induced adjacency.
inline bool contains_induced(const Graph& host, const Graph& pattern)
{
    const int n = static_cast<int>(host.vertex_count());
    const int k = static_cast<int>(pattern.vertex_count());
    if (k > n)
        return false;
    std::vector<int> pattern_degrees;
    for (int v = 0; v < k; ++v)
        pattern_degrees.push_back(pattern.degree(v));
    std::sort(pattern_degrees.begin(), pattern_degrees.end());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (std::popcount(mask) != k)
            continue;
        std::vector<int> chosen;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1U)
                chosen.push_back(v);
        // cheap filter: induced degree multiset must agree
        std::vector<int> degrees;
        for (int v : chosen) {
            int d = 0;
            for (int w : chosen)
                d += host.adjacent(v, w) ? 1 : 0;
            degrees.push_back(d);
        }
        std::sort(degrees.begin(), degrees.end());
        if (degrees != pattern_degrees)
            continue;
        do {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                for (int j = i + 1; j < k && ok; ++j)
                    ok = pattern.adjacent(i, j) == host.adjacent(chosen[i], chosen[j]);
            if (ok)
                return true;
        } while (std::next_permutation(chosen.begin(), chosen.end()));
    }
    return false;
}

inline bool isomorphic(const Graph& a, const Graph& b)
{
    return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() && contains_induced(a, b);
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    std::vector<poc::Edge> edges;
    for (int u = 0; u < static_cast<int>(n); ++u)
        for (int v = u + 1; v < static_cast<int>(n); ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

inline std::vector<int> random_permutation(std::size_t n, std::mt19937_64& rng)
{
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

} // namespace oracle
