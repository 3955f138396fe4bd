#include "poc/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace poc {

namespace {

using Cells = std::vector<std::vector<int>>;

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : n_(static_cast<int>(g.vertex_count())), adj_(g.vertex_count())
    {
        for (int v = 0; v < n_; ++v)
            adj_[v] = g.row(v)[0];
    }

    void run()
    {
        std::vector<int> all(static_cast<std::size_t>(n_));
        std::iota(all.begin(), all.end(), 0);
        Cells cells{all};
        std::vector<int> fixed;
        node(std::move(cells), fixed);
    }

    const std::vector<int>& best_lab() const { return best_lab_; }

private:
    std::uint64_t mask_of(const std::vector<int>& cell) const
    {
        std::uint64_t m = 0;
        for (int v : cell)
            m |= std::uint64_t{1} << v;
        return m;
    }

    // Split cells until the partition is equitable. Fragments are ordered by
    // neighbour count into the splitter, so the result depends only on the
    // structure of the ordered partition, never on vertex names.
    void refine(Cells& cells) const
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
                const auto mask = mask_of(cells[s]);
                for (std::size_t x = 0; x < cells.size(); ++x) {
                    auto& cell = cells[x];
                    if (cell.size() < 2)
                        continue;
                    std::vector<std::pair<int, int>> keyed;
                    keyed.reserve(cell.size());
                    for (int v : cell)
                        keyed.emplace_back(std::popcount(adj_[v] & mask), v);
                    std::sort(keyed.begin(), keyed.end());
                    if (keyed.front().first == keyed.back().first)
                        continue;
                    Cells pieces;
                    for (std::size_t i = 0; i < keyed.size(); ++i) {
                        if (i == 0 || keyed[i].first != keyed[i - 1].first)
                            pieces.emplace_back();
                        pieces.back().push_back(keyed[i].second);
                    }
                    cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
                    cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), pieces.begin(), pieces.end());
                    changed = true;
                    break;
                }
            }
        }
    }

    std::vector<std::uint64_t> permuted_rows(const std::vector<int>& lab) const
    {
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if ((adj_[lab[i]] >> lab[j]) & 1U)
                    rows[i] |= std::uint64_t{1} << j;
        return rows;
    }

    void record_automorphism(const std::vector<int>& from, const std::vector<int>& to)
    {
        std::vector<int> gamma(static_cast<std::size_t>(n_));
        for (int i = 0; i < n_; ++i)
            gamma[from[i]] = to[i];
        bool identity = true;
        for (int v = 0; v < n_ && identity; ++v)
            identity = gamma[v] == v;
        if (!identity)
            automorphisms_.push_back(std::move(gamma));
    }

    void leaf(const Cells& cells)
    {
        std::vector<int> lab;
        lab.reserve(static_cast<std::size_t>(n_));
        for (const auto& c : cells)
            lab.push_back(c.front());
        auto rows = permuted_rows(lab);
        if (first_lab_.empty()) {
            first_lab_ = lab;
            first_rows_ = rows;
        } else if (rows == first_rows_) {
            record_automorphism(first_lab_, lab);
        }
        if (best_lab_.empty() || rows < best_rows_) {
            best_lab_ = std::move(lab);
            best_rows_ = std::move(rows);
        } else if (rows == best_rows_) {
            record_automorphism(best_lab_, lab);
        }
    }

    // Orbit representative of v under the automorphisms found so far that fix
    // every vertex of `fixed`.
    int orbit_root(std::vector<int>& parent, int v) const
    {
        while (parent[v] != v)
            v = parent[v] = parent[parent[v]];
        return v;
    }

    std::vector<int> stabilizer_orbits(const std::vector<int>& fixed) const
    {
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(fixed.begin(), fixed.end(), [&](int f) { return gamma[f] == f; });
            if (!fixes)
                continue;
            for (int v = 0; v < n_; ++v) {
                int a = orbit_root(parent, v), b = orbit_root(parent, gamma[v]);
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (int v = 0; v < n_; ++v)
            parent[v] = orbit_root(parent, v);
        return parent;
    }

    void node(Cells cells, std::vector<int>& fixed)
    {
        refine(cells);
        if (cells.size() == static_cast<std::size_t>(n_)) {
            leaf(cells);
            return;
        }
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size()))
                target = i;

        auto candidates = cells[target];
        std::sort(candidates.begin(), candidates.end());
        std::vector<int> explored;
        for (int v : candidates) {
            if (!explored.empty()) {
                auto orbit = stabilizer_orbits(fixed);
                bool equivalent = std::any_of(explored.begin(), explored.end(),
                                              [&](int u) { return orbit[u] == orbit[v]; });
                if (equivalent)
                    continue;
            }
            Cells child = cells;
            auto rest = cells[target];
            rest.erase(std::find(rest.begin(), rest.end(), v));
            child[target] = {v};
            child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1, rest);
            fixed.push_back(v);
            node(std::move(child), fixed);
            fixed.pop_back();
            explored.push_back(v);
        }
    }

    int n_;
    std::vector<std::uint64_t> adj_;
    std::vector<int> first_lab_, best_lab_;
    std::vector<std::uint64_t> first_rows_, best_rows_;
    std::vector<std::vector<int>> automorphisms_;
};

} // namespace

CanonicalLabeling canonical_labeling(const Graph& g)
{
    if (g.vertex_count() > kCanonicalMaxVertices)
        throw GraphError("canonical labeling supports at most " + std::to_string(kCanonicalMaxVertices) +
                         " vertices");
    CanonicalSearch search(g);
    search.run();
    const auto& lab = search.best_lab();
    std::vector<int> position(g.vertex_count());
    for (std::size_t i = 0; i < lab.size(); ++i)
        position[lab[i]] = static_cast<int>(i);
    return {position, relabel(g, position)};
}

std::string canonical_key(const Graph& g)
{
    auto canon = canonical_labeling(g).graph;
    const int n = static_cast<int>(canon.vertex_count());
    std::string key;
    key.push_back(static_cast<char>(n));
    unsigned char acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = static_cast<unsigned char>((acc << 1) | (canon.adjacent(i, j) ? 1 : 0));
            if (++filled == 8) {
                key.push_back(static_cast<char>(acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        key.push_back(static_cast<char>(acc << (8 - filled)));
    return key;
}

bool are_isomorphic(const Graph& a, const Graph& b)
{
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    return canonical_key(a) == canonical_key(b);
}

} // namespace poc
