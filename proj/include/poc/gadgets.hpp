#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "poc/graph.hpp"
#include "poc/ratio.hpp"

namespace poc {

/// A constructed graph with the τ and τ_c the construction is expected to
/// have. Nothing here runs the solver; checking is up to the caller.
struct GadgetOutput {
    Graph graph;
    std::int64_t predicted_tau = 0;
    /// Absent when the construction makes no claim about τ_c.
    std::optional<std::int64_t> predicted_tauc;
    std::string provenance;
};

class GadgetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Per vertex v a path v - v' - v''. Layout: v' = n+v, v'' = 2n+v.
/// Predicts τ = n + τ(g), τ_c = 2n. Requires g connected with an edge.
GadgetOutput fix_tauc(const Graph& g);

/// Per vertex v: v, v', v'' with vv', vv'', vw. Per edge e = uv: e, e' with
/// ee', eu'', ev''. Hub edge ww'. Layout: v < n, v' = n+v, v'' = 2n+v,
/// e = 3n+i, e' = 3n+m+i (i in sorted edge order), w = 3n+2m, w' = w+1.
/// Predicts τ = n + m + 1, τ_c = n + m + 1 + τ(g).
GadgetOutput fix_tau(const Graph& g);

/// The smallest vertex of every component joined to a new hub w = n, plus a
/// pendant w' = n+1 on w.
Graph connectify(const Graph& g);

/// k disjoint copies of a connected g (copy i occupies i*n .. i*n+n-1), the
/// copies of `anchor` joined to w = k*n, pendant w' = k*n+1.
/// Predicts τ = k·τ(g) + 1.
GadgetOutput replicate_join(const Graph& g, int k, int anchor);

/// Vertex adjacent to a degree-one vertex, smallest index; -1 if none.
int smallest_leaf_support(const Graph& g);

/// Disjoint union (b shifted by |a|) plus the edge between the smallest
/// leaf-support vertex of each side. Predictions add.
GadgetOutput join_disjoint(const GadgetOutput& a, const GadgetOutput& b);

struct AbSolution {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
};

/// Smallest c with a, b >= 0 where a + 2b + φ1 = r1·c and a + b + φ2 = r2·c.
/// Requires r2 < r1 < 2·r2 coprime and φ2 < φ1 < 2·φ2.
AbSolution solve_ab(std::int64_t phi1, std::int64_t phi2, std::int64_t r1, std::int64_t r2);

/// Where the two caterpillars hang.
enum class CaterpillarAnchor {
    /// The neighbour of the smallest degree-one vertex. This vertex lies in
    /// every connected vertex cover, so τ grows by a + b and τ_c by a + 2b.
    Support,
    /// The smallest degree-one vertex itself. It becomes a cut vertex, which
    /// costs τ_c one more vertex whenever a + b > 0; predictions are still
    /// the a + b / a + 2b deltas and are therefore off for this anchor.
    Leaf,
};

/// Path u1..ua with a pendant on each u_i, and path v1..v(2b) with pendants
/// on v2, v4, ..., v(2b); u1 and v1 joined to the anchor.
/// Predicts τ += a + b, τ_c += a + 2b.
GadgetOutput attach_caterpillars(const GadgetOutput& u, std::int64_t a, std::int64_t b,
                                 CaterpillarAnchor anchor = CaterpillarAnchor::Support);

struct ReductionPlan {
    std::int64_t r1 = 0, r2 = 0;
    std::int64_t n_g = 0, n_h = 0, m_h = 0;
    /// τ of the (connectified if needed) inputs.
    std::int64_t tau_g = 0, tau_h = 0;
    std::int64_t phi1 = 0, phi2 = 0;
    std::int64_t a = 0, b = 0, c = 0;
    std::int64_t predicted_tau = 0;
    std::int64_t predicted_tauc = 0;
    bool g_connectified = false, h_connectified = false;

    Ratio ratio() const { return Ratio(r1, r2); }
    Ratio predicted_poc() const { return Ratio(predicted_tauc, predicted_tau); }
    /// predicted τ_c(U')/τ(U') <= r1/r2
    bool predicted_decision() const;
    /// τ(H) <= τ(G)
    bool expected_decision() const { return tau_h <= tau_g; }
};

struct Reduction {
    ReductionPlan plan;
    GadgetOutput g_side;  // fix_tauc of the replicated G
    GadgetOutput h_side;  // fix_tau of the replicated H
    GadgetOutput joined;
    GadgetOutput result;
};

/// Largest U' the reduction will build.
inline constexpr std::int64_t kReductionVertexCap = 200000;

/// The whole pipeline. τ(G) and τ(H) come from the exact solver.
Reduction full_reduction(const Graph& g, const Graph& h, std::int64_t r1, std::int64_t r2,
                         CaterpillarAnchor anchor = CaterpillarAnchor::Support);

} // namespace poc
