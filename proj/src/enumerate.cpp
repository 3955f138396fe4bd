#include "poc/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

#include "poc/canonical.hpp"

namespace poc {

namespace {

void check_cap(std::size_t max_n, std::size_t cap)
{
    if (max_n > kEnumerationHardLimit)
        throw std::length_error("enumeration beyond " + std::to_string(kEnumerationHardLimit) + " vertices");
    if (max_n > cap)
        throw std::length_error("enumeration of n = " + std::to_string(max_n) + " exceeds the cap of " +
                                std::to_string(cap));
}

Graph extend(const Graph& g, const std::vector<int>& neighbourhood)
{
    auto edges = g.edges();
    const int v = static_cast<int>(g.vertex_count());
    for (int u : neighbourhood)
        edges.emplace_back(u, v);
    return Graph::from_edges(g.vertex_count() + 1, edges);
}

using Extensions = std::function<void(const Graph&, const std::function<void(const std::vector<int>&)>&)>;

std::vector<std::vector<Graph>> grow(std::size_t max_n, const Extensions& extensions)
{
    std::vector<std::vector<Graph>> levels(max_n + 1);
    if (max_n == 0)
        return levels;
    levels[1].push_back(Graph::edgeless(1));
    for (std::size_t n = 2; n <= max_n; ++n) {
        std::map<std::string, Graph> seen;
        for (const auto& g : levels[n - 1]) {
            extensions(g, [&](const std::vector<int>& nb) {
                auto h = extend(g, nb);
                auto label = canonical_labeling(h);
                auto key = canonical_key(label.graph);
                seen.try_emplace(std::move(key), std::move(label.graph));
            });
        }
        for (auto& [key, graph] : seen)
            levels[n].push_back(std::move(graph));
    }
    return levels;
}

void subsets(const Graph& g, bool allow_empty, const std::function<void(const std::vector<int>&)>& sink)
{
    const auto n = g.vertex_count();
    for (std::uint32_t mask = allow_empty ? 0 : 1; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<int> nb;
        for (std::size_t v = 0; v < n; ++v)
            if ((mask >> v) & 1U)
                nb.push_back(static_cast<int>(v));
        sink(nb);
    }
}

void cliques(const Graph& g, const std::function<void(const std::vector<int>&)>& sink)
{
    std::vector<int> current;
    std::function<void(int)> rec = [&](int from) {
        for (int v = from; v < static_cast<int>(g.vertex_count()); ++v) {
            bool ok = std::all_of(current.begin(), current.end(), [&](int u) { return g.adjacent(u, v); });
            if (!ok)
                continue;
            current.push_back(v);
            sink(current);
            rec(v + 1);
            current.pop_back();
        }
    };
    rec(0);
}

} // namespace

std::vector<std::vector<Graph>> connected_graphs_up_to(std::size_t max_n, std::size_t cap)
{
    check_cap(max_n, cap);
    return grow(max_n, [](const Graph& g, const auto& sink) { subsets(g, false, sink); });
}

std::vector<std::vector<Graph>> all_graphs_up_to(std::size_t max_n, std::size_t cap)
{
    check_cap(max_n, cap);
    return grow(max_n, [](const Graph& g, const auto& sink) { subsets(g, true, sink); });
}

std::vector<std::vector<Graph>> connected_chordal_graphs_up_to(std::size_t max_n, std::size_t cap)
{
    check_cap(max_n, cap);
    return grow(max_n, [](const Graph& g, const auto& sink) { cliques(g, sink); });
}

std::vector<Graph> enumerate_connected(std::size_t n, std::size_t cap)
{
    return std::move(connected_graphs_up_to(n, cap)[n]);
}

std::vector<Graph> enumerate_all(std::size_t n, std::size_t cap) { return std::move(all_graphs_up_to(n, cap)[n]); }

std::vector<Graph> enumerate_connected_chordal(std::size_t n, std::size_t cap)
{
    return std::move(connected_chordal_graphs_up_to(n, cap)[n]);
}

} // namespace poc
