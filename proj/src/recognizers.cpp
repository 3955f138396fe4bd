#include "poc/recognizers.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <stdexcept>

#include "poc/canonical.hpp"

namespace poc {

// ---------------------------------------------------------------- patterns

namespace {

std::vector<Pattern> make_catalog()
{
    std::vector<Edge> delta1{{0, 1}, {1, 3}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 3}};
    std::vector<Edge> delta2 = delta1;
    delta2.erase(std::find(delta2.begin(), delta2.end(), Edge{1, 3}));
    return {
        {PatternId::P4, "P4", path_graph(4)},
        {PatternId::P5, "P5", path_graph(5)},
        {PatternId::P7, "P7", path_graph(7)},
        {PatternId::C4, "C4", cycle_graph(4)},
        {PatternId::C5, "C5", cycle_graph(5)},
        {PatternId::C6, "C6", cycle_graph(6)},
        {PatternId::C7, "C7", cycle_graph(7)},
        {PatternId::Delta1, "Delta1", Graph::from_edges(7, delta1)},
        {PatternId::Delta2, "Delta2", Graph::from_edges(7, delta2)},
    };
}

const std::vector<Pattern>& catalog()
{
    static const std::vector<Pattern> patterns = make_catalog();
    return patterns;
}

constexpr std::array kAllPatterns{PatternId::P4, PatternId::P5, PatternId::P7, PatternId::C4,    PatternId::C5,
                                  PatternId::C6, PatternId::C7, PatternId::Delta1, PatternId::Delta2};
constexpr std::array kPerfect{PatternId::P5, PatternId::C5, PatternId::C4};
constexpr std::array kNear43{PatternId::P5, PatternId::C4};
constexpr std::array kNear32{PatternId::P7, PatternId::C6, PatternId::Delta1, PatternId::Delta2};

} // namespace

const Pattern& pattern(PatternId id) { return catalog()[static_cast<std::size_t>(id)]; }

std::span<const PatternId> all_patterns() { return kAllPatterns; }
std::span<const PatternId> poc_perfect_forbidden() { return kPerfect; }
std::span<const PatternId> near_perfect_43_forbidden() { return kNear43; }
std::span<const PatternId> near_perfect_32_forbidden() { return kNear32; }

std::optional<PatternId> pattern_from_name(std::string_view name)
{
    for (const auto& p : catalog())
        if (p.name == name)
            return p.id;
    return std::nullopt;
}

// --------------------------------------------------------- induced search

namespace {

class InducedMatcher {
public:
    InducedMatcher(const Graph& host, const Graph& pat) : host_(host), pat_(pat)
    {
        const int k = static_cast<int>(pat.vertex_count());
        // Connected-first order: each next vertex has the most already-ordered
        // neighbours, so candidates come from a mapped neighbour's row.
        std::vector<bool> placed(static_cast<std::size_t>(k), false);
        for (int step = 0; step < k; ++step) {
            int best = -1, best_links = -1, best_degree = -1;
            for (int v = 0; v < k; ++v) {
                if (placed[v])
                    continue;
                int links = 0;
                for (int u : order_)
                    links += pat.adjacent(u, v) ? 1 : 0;
                int d = pat.degree(v);
                if (links > best_links || (links == best_links && d > best_degree)) {
                    best = v;
                    best_links = links;
                    best_degree = d;
                }
            }
            placed[best] = true;
            order_.push_back(best);
        }
        for (int v = 0; v < k; ++v)
            pattern_degree_.push_back(pat.degree(v));
        for (int h = 0; h < static_cast<int>(host.vertex_count()); ++h)
            host_degree_.push_back(host.degree(h));
        map_.assign(static_cast<std::size_t>(k), -1);
        used_.assign(host.vertex_count(), false);
    }

    std::optional<Embedding> run()
    {
        if (pat_.vertex_count() > host_.vertex_count() || pat_.edge_count() > host_.edge_count())
            return std::nullopt;
        if (extend(0))
            return map_;
        return std::nullopt;
    }

private:
    bool consistent(int pv, int h, std::size_t depth) const
    {
        if (used_[h] || host_degree_[h] < pattern_degree_[pv])
            return false;
        for (std::size_t s = 0; s < depth; ++s) {
            int pu = order_[s];
            if (pat_.adjacent(pv, pu) != host_.adjacent(h, map_[pu]))
                return false;
        }
        return true;
    }

    bool try_candidate(int pv, int h, std::size_t depth)
    {
        if (!consistent(pv, h, depth))
            return false;
        map_[pv] = h;
        used_[h] = true;
        if (extend(depth + 1))
            return true;
        used_[h] = false;
        map_[pv] = -1;
        return false;
    }

    bool extend(std::size_t depth)
    {
        if (depth == order_.size())
            return true;
        const int pv = order_[depth];
        int anchor = -1;
        for (std::size_t s = 0; s < depth && anchor < 0; ++s)
            if (pat_.adjacent(pv, order_[s]))
                anchor = order_[s];
        if (anchor >= 0) {
            for (int h : host_.neighbors(map_[anchor]))
                if (try_candidate(pv, h, depth))
                    return true;
            return false;
        }
        for (int h = 0; h < static_cast<int>(host_.vertex_count()); ++h)
            if (try_candidate(pv, h, depth))
                return true;
        return false;
    }

    const Graph& host_;
    const Graph& pat_;
    std::vector<int> order_;
    std::vector<int> pattern_degree_, host_degree_;
    std::vector<int> map_;
    std::vector<bool> used_;
};

} // namespace

std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern_graph)
{
    return InducedMatcher(host, pattern_graph).run();
}

std::optional<Embedding> contains_induced(const Graph& host, PatternId id)
{
    return contains_induced(host, pattern(id).graph);
}

// ----------------------------------------------------------------- chordal

namespace {

std::vector<int> lex_bfs(const Graph& g)
{
    const int n = static_cast<int>(g.vertex_count());
    std::vector<std::vector<int>> label(static_cast<std::size_t>(n));
    std::vector<bool> numbered(static_cast<std::size_t>(n), false);
    std::vector<int> order;
    for (int step = n; step > 0; --step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[v] && (pick < 0 || label[v] > label[pick]))
                pick = v;
        numbered[pick] = true;
        order.push_back(pick);
        for (int w : g.neighbors(pick))
            if (!numbered[w])
                label[w].push_back(step);
    }
    return order;
}

// Some vertex v with non-adjacent neighbours x, y joined by a path avoiding
// the rest of N[v]; v plus a shortest such path is a chordless cycle.
std::vector<int> find_chordless_cycle(const Graph& g)
{
    const int n = static_cast<int>(g.vertex_count());
    for (int v = 0; v < n; ++v) {
        auto nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int x = nb[i], y = nb[j];
                if (g.adjacent(x, y))
                    continue;
                std::vector<int> parent(static_cast<std::size_t>(n), -2);
                parent[v] = -1;
                for (int w : nb)
                    if (w != x && w != y)
                        parent[w] = -1;
                parent[x] = x;
                std::deque<int> queue{x};
                while (!queue.empty() && parent[y] == -2) {
                    int u = queue.front();
                    queue.pop_front();
                    for (int w : g.neighbors(u)) {
                        if (parent[w] == -2) {
                            parent[w] = u;
                            queue.push_back(w);
                        }
                    }
                }
                if (parent[y] == -2)
                    continue;
                std::vector<int> path{y};
                while (path.back() != x)
                    path.push_back(parent[path.back()]);
                std::vector<int> cycle{v};
                cycle.insert(cycle.end(), path.rbegin(), path.rend());
                return cycle;
            }
        }
    }
    return {};
}

} // namespace

Chordality chordality(const Graph& g)
{
    auto visit = lex_bfs(g);
    std::vector<int> peo(visit.rbegin(), visit.rend());
    std::vector<int> position(g.vertex_count());
    for (std::size_t i = 0; i < peo.size(); ++i)
        position[peo[i]] = static_cast<int>(i);

    bool ok = true;
    for (int v : peo) {
        int parent = -1;
        std::vector<int> later;
        for (int w : g.neighbors(v)) {
            if (position[w] > position[v]) {
                later.push_back(w);
                if (parent < 0 || position[w] < position[parent])
                    parent = w;
            }
        }
        for (int w : later) {
            if (w != parent && !g.adjacent(w, parent)) {
                ok = false;
                break;
            }
        }
        if (!ok)
            break;
    }
    if (ok)
        return {true, std::move(peo), {}};
    return {false, {}, find_chordless_cycle(g)};
}

bool is_chordal(const Graph& g) { return chordality(g).chordal; }

// ---------------------------------------------------------- classification

std::string to_string(PocClass c)
{
    switch (c) {
    case PocClass::PocPerfect:
        return "PocPerfect";
    case PocClass::PocNearPerfect43:
        return "PocNearPerfect43";
    case PocClass::PocNearPerfect32:
        return "PocNearPerfect32";
    case PocClass::Unbounded:
        return "Unbounded";
    }
    return "?";
}

std::optional<Ratio> class_threshold(PocClass c)
{
    switch (c) {
    case PocClass::PocPerfect:
        return Ratio(1);
    case PocClass::PocNearPerfect43:
        return Ratio(4, 3);
    case PocClass::PocNearPerfect32:
        return Ratio(3, 2);
    case PocClass::Unbounded:
        return std::nullopt;
    }
    return std::nullopt;
}

namespace {

std::optional<PatternWitness> first_contained(const Graph& g, std::span<const PatternId> set)
{
    for (auto id : set)
        if (auto e = contains_induced(g, id))
            return PatternWitness{id, std::move(*e)};
    return std::nullopt;
}

} // namespace

ClassLabel classify(const Graph& g)
{
    auto w1 = first_contained(g, poc_perfect_forbidden());
    if (!w1)
        return {PocClass::PocPerfect, std::nullopt};
    auto w2 = first_contained(g, near_perfect_43_forbidden());
    if (!w2)
        return {PocClass::PocNearPerfect43, std::move(w1)};
    auto w3 = first_contained(g, near_perfect_32_forbidden());
    if (!w3)
        return {PocClass::PocNearPerfect32, std::move(w2)};
    return {PocClass::Unbounded, std::move(w3)};
}

// ------------------------------------------------------------ special trees

Graph build_special_tree(const Graph& base)
{
    if (base.edge_count() == 0)
        throw GraphError("special tree base must have an edge");
    if (!is_tree(base))
        throw GraphError("special tree base must be a tree");
    const int n = static_cast<int>(base.vertex_count());
    auto base_edges = base.edges();
    std::vector<Edge> edges;
    int next = n;
    for (auto [u, v] : base_edges) {
        edges.emplace_back(u, next);
        edges.emplace_back(next, v);
        ++next;
    }
    for (int v = 0; v < n; ++v)
        if (base.degree(v) == 1)
            edges.emplace_back(v, next++);
    return Graph::from_edges(static_cast<std::size_t>(next), edges);
}

SpecialTreeRecognition recognize_special_tree(const Graph& g)
{
    auto reject = [](std::string why) { return SpecialTreeRecognition{std::nullopt, std::move(why)}; };
    if (!is_tree(g))
        return reject("not a tree");
    const int n = static_cast<int>(g.vertex_count());

    std::vector<bool> pendant(static_cast<std::size_t>(n), false);
    std::vector<int> core;
    for (int v = 0; v < n; ++v) {
        pendant[v] = g.degree(v) == 1;
        if (!pendant[v])
            core.push_back(v);
    }
    if (core.size() < 2)
        return reject("stripping the pendant vertices leaves fewer than two vertices");

    auto stripped = induced_subgraph(g, VertexSet(g.vertex_count(), core));
    const auto& t = stripped.graph;
    auto coloring = bipartition(t).coloring;
    int leaf_color = -1;
    for (int v = 0; v < static_cast<int>(t.vertex_count()); ++v) {
        if (t.degree(v) != 1)
            continue;
        if (leaf_color < 0)
            leaf_color = coloring[v];
        else if (coloring[v] != leaf_color)
            return reject("leaves of the stripped tree receive different colors");
    }
    for (int v = 0; v < static_cast<int>(t.vertex_count()); ++v) {
        if (coloring[v] != leaf_color && t.degree(v) != 2)
            return reject("subdivision vertex " + std::to_string(stripped.original[v]) + " has degree " +
                          std::to_string(t.degree(v)) + " in the stripped tree");
    }
    for (int v = 0; v < static_cast<int>(t.vertex_count()); ++v) {
        int hosted = 0;
        for (int w : g.neighbors(stripped.original[v]))
            hosted += pendant[w] ? 1 : 0;
        int expected = t.degree(v) == 1 ? 1 : 0;
        if (hosted != expected)
            return reject("vertex " + std::to_string(stripped.original[v]) + " carries " + std::to_string(hosted) +
                          " pendant vertices, expected " + std::to_string(expected));
    }

    std::vector<int> index(t.vertex_count(), -1);
    int base_n = 0;
    for (int v = 0; v < static_cast<int>(t.vertex_count()); ++v)
        if (coloring[v] == leaf_color)
            index[v] = base_n++;
    std::vector<Edge> edges;
    for (int v = 0; v < static_cast<int>(t.vertex_count()); ++v) {
        if (coloring[v] == leaf_color)
            continue;
        auto nb = t.neighbors(v);
        edges.emplace_back(index[nb[0]], index[nb[1]]);
    }
    return {Graph::from_edges(static_cast<std::size_t>(base_n), edges), {}};
}

bool is_special_tree(const Graph& g) { return recognize_special_tree(g).base.has_value(); }

// ------------------------------------------------------------- criticality

CriticalityChecker::CriticalityChecker(SolverCache& cache, std::size_t critical_cap, std::size_t strong_cap)
    : cache_(cache), critical_cap_(critical_cap), strong_cap_(strong_cap)
{
}

void CriticalityChecker::check_preconditions(const Graph& g, std::size_t cap) const
{
    if (g.vertex_count() > cap)
        throw std::length_error("criticality check on " + std::to_string(g.vertex_count()) +
                                " vertices exceeds the cap of " + std::to_string(cap));
    if (g.edge_count() == 0 || (g.edge_count() == 1 && g.vertex_count() == 2))
        throw std::invalid_argument("criticality is vacuous: no proper induced subgraph has an edge");
}

std::optional<VertexSet> CriticalityChecker::induced_witness(const Graph& g)
{
    check_preconditions(g, critical_cap_);
    const int n = static_cast<int>(g.vertex_count());
    const auto target = cache_.poc(g);
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    for (int size = n - 1; size >= 2; --size) {
        // Gosper's hack over all masks with `size` bits.
        std::uint32_t mask = (std::uint32_t{1} << size) - 1;
        while (mask <= full) {
            std::vector<int> members;
            for (int v = 0; v < n; ++v)
                if ((mask >> v) & 1U)
                    members.push_back(v);
            VertexSet s(g.vertex_count(), members);
            auto sub = induced_subgraph(g, s).graph;
            if (sub.edge_count() > 0 && cache_.poc(sub) >= target)
                return s;
            std::uint32_t c = mask & (~mask + 1);
            std::uint32_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }
    return std::nullopt;
}

bool CriticalityChecker::is_critical(const Graph& g) { return !induced_witness(g).has_value(); }

Ratio CriticalityChecker::best_subgraph_poc(const Graph& connected)
{
    auto key = canonical_key(connected);
    if (auto it = best_subgraph_.find(key); it != best_subgraph_.end())
        return it->second;
    Ratio best = cache_.poc(connected);
    for (auto e : connected.edges()) {
        auto h = without_edge(connected, e);
        for (const auto& comp : connected_components(h)) {
            if (comp.size() < 2)
                continue;
            best = std::max(best, best_subgraph_poc(induced_subgraph(h, comp).graph));
        }
    }
    best_subgraph_.emplace(std::move(key), best);
    return best;
}

bool CriticalityChecker::is_strongly_critical(const Graph& g)
{
    check_preconditions(g, strong_cap_);
    if (induced_witness(g))
        return false;
    // Remaining proper subgraphs keep every vertex and lose at least one edge;
    // isolated vertices do not change PoC.
    const auto target = cache_.poc(g);
    for (auto e : g.edges()) {
        auto h = without_edge(g, e);
        for (const auto& comp : connected_components(h)) {
            if (comp.size() < 2)
                continue;
            if (best_subgraph_poc(induced_subgraph(h, comp).graph) >= target)
                return false;
        }
    }
    return true;
}

bool is_critical(const Graph& g)
{
    SolverCache cache;
    return CriticalityChecker(cache).is_critical(g);
}

bool is_strongly_critical(const Graph& g)
{
    SolverCache cache;
    return CriticalityChecker(cache).is_strongly_critical(g);
}

} // namespace poc
