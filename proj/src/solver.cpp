#include "poc/solver.hpp"

#include <algorithm>

#include "bits.hpp"
#include "poc/canonical.hpp"

namespace poc {

using detail::Bits;

namespace {

// ------------------------------------------------------------ vertex cover

template <std::size_t W>
class VertexCoverSearch {
public:
    explicit VertexCoverSearch(const Graph& g) : n_(static_cast<int>(g.vertex_count())), adj_(detail::load_rows<W>(g))
    {
    }

    std::pair<int, Bits<W>> run()
    {
        best_size_ = n_ + 1;
        solve(detail::full_bits<W>(static_cast<std::size_t>(n_)), Bits<W>{}, 0);
        return {best_size_, best_cover_};
    }

private:
    int degree(int v, const Bits<W>& alive) const { return (adj_[v] & alive).count(); }

    int matching_bound(const Bits<W>& alive) const
    {
        Bits<W> free = alive;
        int size = 0;
        alive.for_each([&](int v) {
            if (!free.test(v))
                return;
            int u = (adj_[v] & free).first();
            if (u >= 0) {
                free.reset(v);
                free.reset(u);
                ++size;
            }
        });
        return size;
    }

    void solve(Bits<W> alive, Bits<W> cover, int size)
    {
        bool changed = true;
        while (changed) {
            changed = false;
            alive.for_each([&](int v) {
                if (!alive.test(v))
                    return;
                auto nb = adj_[v] & alive;
                int d = nb.count();
                if (d == 0) {
                    alive.reset(v);
                    changed = true;
                } else if (d == 1) {
                    int u = nb.first();
                    cover.set(u);
                    ++size;
                    alive.reset(u);
                    alive.reset(v);
                    changed = true;
                }
            });
        }
        if (size >= best_size_)
            return;
        if (alive.none()) {
            best_size_ = size;
            best_cover_ = cover;
            return;
        }
        if (size + matching_bound(alive) >= best_size_)
            return;

        int pick = -1, pick_degree = -1;
        alive.for_each([&](int v) {
            int d = degree(v, alive);
            if (d > pick_degree) {
                pick = v;
                pick_degree = d;
            }
        });
        auto nb = adj_[pick] & alive;

        auto with_v = alive;
        with_v.reset(pick);
        auto cover_v = cover;
        cover_v.set(pick);
        solve(with_v, cover_v, size + 1);

        auto with_nb = alive.minus(nb);
        with_nb.reset(pick);
        solve(with_nb, cover | nb, size + pick_degree);
    }

    int n_;
    std::vector<Bits<W>> adj_;
    int best_size_ = 0;
    Bits<W> best_cover_{};
};

// Solves one connected component given as its own relabeled graph.
std::pair<std::int64_t, std::vector<int>> solve_vc_component(const Graph& g)
{
    if (g.edge_count() == 0)
        return {0, {}};
    return detail::dispatch_width(g.vertex_count(), [&]<std::size_t W>() {
        VertexCoverSearch<W> search(g);
        auto [size, cover] = search.run();
        std::vector<int> members;
        cover.for_each([&](int v) { members.push_back(v); });
        return std::pair<std::int64_t, std::vector<int>>{size, members};
    });
}

// ------------------------------------------------- connected vertex cover

template <std::size_t W>
class ConnectedCoverSearch {
public:
    ConnectedCoverSearch(const Graph& g, int tau)
        : n_(static_cast<int>(g.vertex_count())), tau_(tau), adj_(detail::load_rows<W>(g))
    {
        auto cut = cutvertices(g);
        for (int v : cut.to_vector())
            forced_.set(v);
        for (int v = 0; v < n_; ++v)
            if (g.degree(v) == 1)
                leaves_.set(v);
        all_ = detail::full_bits<W>(static_cast<std::size_t>(n_));
    }

    std::pair<int, Bits<W>> run()
    {
        const int start = std::max(tau_, forced_.count());
        const int stop = n_ - leaves_.count();
        for (int k = start; k <= stop; ++k) {
            k_ = k;
            if (search_all_roots())
                return {k, found_};
        }
        throw std::logic_error("connected vertex cover search exhausted without a solution");
    }

private:
    bool search_all_roots()
    {
        if (forced_.any()) {
            int root = forced_.first();
            return grow_from(root, leaves_);
        }
        // 2-connected: no leaves. Every cover meets the first edge.
        int u = 0;
        int w = adj_[u].first();
        if (grow_from(u, leaves_))
            return true;
        auto excluded = leaves_;
        excluded.set(u);
        return grow_from(w, excluded);
    }

    bool grow_from(int root, const Bits<W>& excluded)
    {
        Bits<W> in;
        in.set(root);
        auto frontier = adj_[root].minus(excluded);
        return extend(in, excluded, frontier, 1);
    }

    // Vertices that must still join: forced ones and neighbours of excluded
    // vertices.
    Bits<W> required(const Bits<W>& in, const Bits<W>& excluded) const
    {
        Bits<W> need = forced_;
        excluded.for_each([&](int x) { need = need | adj_[x]; });
        return need.minus(in);
    }

    int lower_bound(const Bits<W>& in, const Bits<W>& need) const
    {
        auto free = all_.minus(in).minus(need);
        int matched = 0;
        auto scan = free;
        scan.for_each([&](int v) {
            if (!free.test(v))
                return;
            int u = (adj_[v] & free).first();
            if (u >= 0) {
                free.reset(v);
                free.reset(u);
                ++matched;
            }
        });
        return need.count() + matched;
    }

    bool extend(const Bits<W>& in, const Bits<W>& excluded, const Bits<W>& frontier, int size)
    {
        auto need = required(in, excluded);
        int lb = lower_bound(in, need);
        if (lb == 0) {
            found_ = in;
            return true;
        }
        if (size + lb > k_ || frontier.none())
            return false;

        int pick = (frontier & need).first();
        bool must_take = pick >= 0;
        if (!must_take) {
            auto uncovered = all_.minus(in);
            int best = -1;
            frontier.for_each([&](int v) {
                int d = (adj_[v] & uncovered).count();
                if (d > best) {
                    best = d;
                    pick = v;
                }
            });
        }

        auto in2 = in;
        in2.set(pick);
        auto frontier2 = (frontier | adj_[pick]).minus(in2).minus(excluded);
        if (extend(in2, excluded, frontier2, size + 1))
            return true;

        if (must_take || adj_[pick].intersects(excluded))
            return false;
        auto excluded2 = excluded;
        excluded2.set(pick);
        auto frontier3 = frontier;
        frontier3.reset(pick);
        return extend(in, excluded2, frontier3, size);
    }

    int n_;
    int tau_;
    int k_ = 0;
    std::vector<Bits<W>> adj_;
    Bits<W> forced_{}, leaves_{}, all_{}, found_{};
};

std::pair<std::int64_t, std::vector<int>> solve_cvc_component(const Graph& g)
{
    if (g.edge_count() == 0)
        return {0, {}};
    if (g.vertex_count() == 2)
        return {1, {0}};
    auto tau = solve_vc_component(g).first;
    return detail::dispatch_width(g.vertex_count(), [&]<std::size_t W>() {
        ConnectedCoverSearch<W> search(g, static_cast<int>(tau));
        auto [size, cover] = search.run();
        std::vector<int> members;
        cover.for_each([&](int v) { members.push_back(v); });
        return std::pair<std::int64_t, std::vector<int>>{size, members};
    });
}

template <typename ComponentSolver>
SolveResult solve_per_component(const Graph& g, ComponentSolver&& solve)
{
    SolveResult result;
    std::vector<int> all_members;
    for (auto& comp : connected_components(g)) {
        auto sub = induced_subgraph(g, comp);
        auto [value, local] = solve(sub.graph);
        std::vector<int> members;
        for (int v : local)
            members.push_back(sub.original[v]);
        all_members.insert(all_members.end(), members.begin(), members.end());
        result.value += value;
        result.per_component.push_back({comp, value, VertexSet(g.vertex_count(), members)});
    }
    result.witness = VertexSet(g.vertex_count(), all_members);
    return result;
}

// ---------------------------------------------------- all minimum covers

template <std::size_t W>
class AllCoversSearch {
public:
    AllCoversSearch(const Graph& g, int tau) : n_(static_cast<int>(g.vertex_count())), tau_(tau), adj_(detail::load_rows<W>(g))
    {
    }

    std::vector<Bits<W>> run()
    {
        branch(Bits<W>{});
        return out_;
    }

private:
    void branch(const Bits<W>& in)
    {
        if (in.count() > tau_)
            return;
        int pick = -1;
        for (int v = 0; v < n_ && pick < 0; ++v)
            if (!in.test(v) && adj_[v].minus(in).any())
                pick = v;
        if (pick < 0) {
            if (in.count() == tau_)
                out_.push_back(in);
            return;
        }
        auto with = in;
        with.set(pick);
        branch(with);
        branch(in | adj_[pick]);
    }

    int n_;
    int tau_;
    std::vector<Bits<W>> adj_;
    std::vector<Bits<W>> out_;
};

} // namespace

SolveResult vertex_cover_number(const Graph& g) { return solve_per_component(g, solve_vc_component); }

SolveResult connected_vertex_cover_number(const Graph& g) { return solve_per_component(g, solve_cvc_component); }

std::vector<VertexSet> all_minimum_vertex_covers(const Graph& g, std::size_t cap)
{
    if (g.vertex_count() > cap)
        throw std::length_error("all_minimum_vertex_covers: " + std::to_string(g.vertex_count()) +
                                " vertices exceed the cap of " + std::to_string(cap));
    const auto tau = static_cast<int>(vertex_cover_number(g).value);
    auto sets = detail::dispatch_width(g.vertex_count(), [&]<std::size_t W>() {
        AllCoversSearch<W> search(g, tau);
        std::vector<VertexSet> out;
        for (const auto& b : search.run())
            out.push_back(detail::to_vertex_set(b, g.vertex_count()));
        return out;
    });
    std::sort(sets.begin(), sets.end());
    return sets;
}

Ratio poc(const Graph& g)
{
    if (g.edge_count() == 0)
        throw UndefinedPocError();
    auto tau = vertex_cover_number(g).value;
    auto tauc = connected_vertex_cover_number(g).value;
    return {tauc, tau};
}

// ------------------------------------------------------------ SolverCache

CoverNumbers SolverCache::component_numbers(const Graph& connected)
{
    if (connected.edge_count() == 0)
        return {};
    const bool cacheable = connected.vertex_count() <= canonical_limit_;
    std::string key;
    if (cacheable) {
        key = canonical_key(connected);
        std::lock_guard lock(mutex_);
        if (auto it = memo_.find(key); it != memo_.end()) {
            ++hits_;
            return it->second;
        }
    }
    CoverNumbers numbers{solve_vc_component(connected).first, solve_cvc_component(connected).first};
    std::lock_guard lock(mutex_);
    ++misses_;
    if (cacheable)
        memo_.emplace(std::move(key), numbers);
    return numbers;
}

CoverNumbers SolverCache::numbers(const Graph& g)
{
    CoverNumbers total;
    for (const auto& comp : connected_components(g)) {
        if (comp.size() < 2)
            continue;
        auto c = component_numbers(induced_subgraph(g, comp).graph);
        total.tau += c.tau;
        total.tauc += c.tauc;
    }
    return total;
}

Ratio SolverCache::poc(const Graph& g)
{
    if (g.edge_count() == 0)
        throw UndefinedPocError();
    auto c = numbers(g);
    return {c.tauc, c.tau};
}

std::size_t SolverCache::size() const
{
    std::lock_guard lock(mutex_);
    return memo_.size();
}

std::size_t SolverCache::hits() const
{
    std::lock_guard lock(mutex_);
    return hits_;
}

std::size_t SolverCache::misses() const
{
    std::lock_guard lock(mutex_);
    return misses_;
}

} // namespace poc
