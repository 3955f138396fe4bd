#include "poc/gadgets.hpp"

#include <cassert>
#include <stdexcept>

#include "poc/solver.hpp"

namespace poc {

namespace {

constexpr std::size_t kCap = static_cast<std::size_t>(kReductionVertexCap);

Graph build(std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges, kCap); }

std::int64_t tau_of(const Graph& g) { return vertex_cover_number(g).value; }

std::int64_t ceil_div(std::int64_t p, std::int64_t q)
{
    // q > 0
    return p >= 0 ? (p + q - 1) / q : -((-p) / q);
}

std::int64_t gcd(std::int64_t x, std::int64_t y)
{
    while (y != 0) {
        auto t = x % y;
        x = y;
        y = t;
    }
    return x < 0 ? -x : x;
}

} // namespace

GadgetOutput fix_tauc(const Graph& g)
{
    if (g.edge_count() == 0)
        throw GadgetError("fix_tauc needs a graph with an edge");
    if (!is_connected(g))
        throw GadgetError("fix_tauc needs a connected graph");
    const int n = static_cast<int>(g.vertex_count());
    auto edges = g.edges();
    for (int v = 0; v < n; ++v) {
        edges.emplace_back(v, n + v);
        edges.emplace_back(n + v, 2 * n + v);
    }
    return {build(static_cast<std::size_t>(3 * n), edges), n + tau_of(g), 2 * n,
            "fix_tauc(n=" + std::to_string(n) + ")"};
}

GadgetOutput fix_tau(const Graph& g)
{
    if (g.edge_count() == 0)
        throw GadgetError("fix_tau needs a graph with an edge");
    const int n = static_cast<int>(g.vertex_count());
    const auto base = g.edges();
    const int m = static_cast<int>(base.size());
    const int w = 3 * n + 2 * m;
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) {
        edges.emplace_back(v, n + v);
        edges.emplace_back(v, 2 * n + v);
        edges.emplace_back(v, w);
    }
    for (int i = 0; i < m; ++i) {
        const int e = 3 * n + i;
        edges.emplace_back(e, 3 * n + m + i);
        edges.emplace_back(e, 2 * n + base[i].first);
        edges.emplace_back(e, 2 * n + base[i].second);
    }
    edges.emplace_back(w, w + 1);
    const std::int64_t t = n + m + 1;
    return {build(static_cast<std::size_t>(w + 2), edges), t, t + tau_of(g),
            "fix_tau(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")"};
}

Graph connectify(const Graph& g)
{
    const int n = static_cast<int>(g.vertex_count());
    auto edges = g.edges();
    for (const auto& comp : connected_components(g))
        edges.emplace_back(comp.to_vector().front(), n);
    edges.emplace_back(n, n + 1);
    return build(static_cast<std::size_t>(n + 2), edges);
}

GadgetOutput replicate_join(const Graph& g, int k, int anchor)
{
    if (k < 1)
        throw GadgetError("replicate_join needs k >= 1");
    const int n = static_cast<int>(g.vertex_count());
    if (anchor < 0 || anchor >= n)
        throw GadgetError("replicate_join anchor " + std::to_string(anchor) + " out of range");
    if (!is_connected(g))
        throw GadgetError("replicate_join needs a connected graph");
    const auto base = g.edges();
    const int w = k * n;
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) {
        for (auto [u, v] : base)
            edges.emplace_back(i * n + u, i * n + v);
        edges.emplace_back(i * n + anchor, w);
    }
    edges.emplace_back(w, w + 1);
    return {build(static_cast<std::size_t>(w + 2), edges), k * tau_of(g) + 1, std::nullopt,
            "replicate_join(k=" + std::to_string(k) + ",anchor=" + std::to_string(anchor) + ")"};
}

int smallest_leaf_support(const Graph& g)
{
    for (int v = 0; v < static_cast<int>(g.vertex_count()); ++v)
        for (int w : g.neighbors(v))
            if (g.degree(w) == 1)
                return v;
    return -1;
}

GadgetOutput join_disjoint(const GadgetOutput& a, const GadgetOutput& b)
{
    const int u = smallest_leaf_support(a.graph);
    const int v = smallest_leaf_support(b.graph);
    if (u < 0 || v < 0)
        throw GadgetError("join_disjoint: an input has no vertex adjacent to a degree-one vertex");
    const int shift = static_cast<int>(a.graph.vertex_count());
    auto edges = a.graph.edges();
    for (auto [x, y] : b.graph.edges())
        edges.emplace_back(x + shift, y + shift);
    edges.emplace_back(u, v + shift);
    std::optional<std::int64_t> tauc;
    if (a.predicted_tauc && b.predicted_tauc)
        tauc = *a.predicted_tauc + *b.predicted_tauc;
    return {build(a.graph.vertex_count() + b.graph.vertex_count(), edges), a.predicted_tau + b.predicted_tau, tauc,
            "join(" + a.provenance + "," + b.provenance + ")"};
}

AbSolution solve_ab(std::int64_t phi1, std::int64_t phi2, std::int64_t r1, std::int64_t r2)
{
    if (!(r2 > 0 && r2 < r1 && r1 < 2 * r2) || gcd(r1, r2) != 1)
        throw std::invalid_argument("solve_ab needs coprime r2 < r1 < 2*r2");
    if (!(phi2 < phi1 && phi1 < 2 * phi2))
        throw std::invalid_argument("solve_ab needs phi2 < phi1 < 2*phi2");

    const std::int64_t d_phi = phi1 - phi2;     // > 0
    const std::int64_t e_phi = 2 * phi2 - phi1; // > 0
    const std::int64_t c = std::max(ceil_div(d_phi, r1 - r2), ceil_div(e_phi, 2 * r2 - r1));
    AbSolution s{(2 * r2 - r1) * c - e_phi, (r1 - r2) * c - d_phi, c};

    // The boundary point λ0 = max(x1, x2) of the cone lies within one step
    // r1 of r2·c: x1 = d_phi/(r-1), x2 = e_phi/(2-r).
    const Ratio r(r1, r2);
    const Ratio x1 = Ratio(d_phi) / (r - Ratio(1));
    const Ratio x2 = Ratio(e_phi) / (Ratio(2) - r);
    const Ratio lambda0 = std::max(x1, x2);
    if (!(lambda0 <= Ratio(r2 * c) && Ratio(r2 * c) <= lambda0 + Ratio(r1)))
        throw std::logic_error("solve_ab: r2*c outside [lambda0, lambda0 + r1]");
    return s;
}

GadgetOutput attach_caterpillars(const GadgetOutput& u, std::int64_t a, std::int64_t b, CaterpillarAnchor anchor)
{
    if (a < 0 || b < 0)
        throw GadgetError("attach_caterpillars needs a, b >= 0");
    const auto& g = u.graph;
    int leaf = -1;
    for (int v = 0; v < static_cast<int>(g.vertex_count()) && leaf < 0; ++v)
        if (g.degree(v) == 1)
            leaf = v;
    if (leaf < 0)
        throw GadgetError("attach_caterpillars: no degree-one vertex");
    const int at = anchor == CaterpillarAnchor::Support ? g.neighbors(leaf).front() : leaf;

    const std::int64_t total = static_cast<std::int64_t>(g.vertex_count()) + 2 * a + 3 * b;
    if (total > kReductionVertexCap)
        throw std::length_error("attach_caterpillars: result exceeds " + std::to_string(kReductionVertexCap) +
                                " vertices");
    auto edges = g.edges();
    int next = static_cast<int>(g.vertex_count());
    // P1: u1..ua, pendants after the path.
    const int p1 = next;
    next += static_cast<int>(a);
    for (int i = 0; i < a; ++i) {
        edges.emplace_back(i == 0 ? at : p1 + i - 1, p1 + i);
        edges.emplace_back(p1 + i, next++);
    }
    // P2: v1..v(2b), pendants on the even positions.
    const int p2 = next;
    next += static_cast<int>(2 * b);
    for (int i = 0; i < 2 * b; ++i) {
        edges.emplace_back(i == 0 ? at : p2 + i - 1, p2 + i);
        if (i % 2 == 1)
            edges.emplace_back(p2 + i, next++);
    }
    std::optional<std::int64_t> tauc;
    if (u.predicted_tauc)
        tauc = *u.predicted_tauc + a + 2 * b;
    return {build(static_cast<std::size_t>(next), edges), u.predicted_tau + a + b, tauc,
            "caterpillars(" + u.provenance + ",a=" + std::to_string(a) + ",b=" + std::to_string(b) +
                (anchor == CaterpillarAnchor::Leaf ? ",anchor=leaf" : "") + ")"};
}

bool ReductionPlan::predicted_decision() const
{
    // τ_c/τ <= r1/r2  <=>  r2·τ_c <= r1·τ
    return Ratio(predicted_tauc) * Ratio(r2) <= Ratio(predicted_tau) * Ratio(r1);
}

Reduction full_reduction(const Graph& g_in, const Graph& h_in, std::int64_t r1, std::int64_t r2,
                         CaterpillarAnchor anchor)
{
    if (!(r2 > 0 && r2 < r1 && r1 < 2 * r2) || gcd(r1, r2) != 1)
        throw std::invalid_argument("full_reduction needs coprime r1/r2 strictly between 1 and 2");
    if (g_in.edge_count() == 0 || h_in.edge_count() == 0)
        throw std::invalid_argument("full_reduction needs G and H with at least one edge");

    ReductionPlan plan;
    plan.r1 = r1;
    plan.r2 = r2;
    plan.g_connectified = !is_connected(g_in);
    plan.h_connectified = !is_connected(h_in);
    const Graph g = plan.g_connectified ? connectify(g_in) : g_in;
    const Graph h = plan.h_connectified ? connectify(h_in) : h_in;
    plan.n_g = static_cast<std::int64_t>(g.vertex_count());
    plan.n_h = static_cast<std::int64_t>(h.vertex_count());
    plan.m_h = static_cast<std::int64_t>(h.edge_count());
    plan.tau_g = tau_of(g);
    plan.tau_h = tau_of(h);

    const std::int64_t estimate = 3 * (r2 * plan.n_g + 2) + 3 * (r1 * plan.n_h + 2) + 2 * (r1 * (plan.m_h + 1) + 1) + 2;
    if (estimate > kReductionVertexCap / 4)
        throw std::length_error("full_reduction: instance too large");

    // Steps 1-3
    auto g_rep = replicate_join(g, static_cast<int>(r2), 0);
    auto h_rep = replicate_join(h, static_cast<int>(r1), 0);
    auto g_side = fix_tauc(g_rep.graph);
    auto h_side = fix_tau(h_rep.graph);
    auto joined = join_disjoint(g_side, h_side);

    // Step 4
    auto& p = plan;
    p.phi1 = 2 * r2 * p.n_g + r1 * (p.n_h + p.m_h + 1) + 9;
    p.phi2 = r2 * p.n_g + r1 * (p.n_h + p.m_h + 1) + 7;
    if (p.phi1 - p.phi2 != r2 * p.n_g + 2 || 2 * p.phi2 - p.phi1 != r1 * (p.n_h + p.m_h + 1) + 5)
        throw std::logic_error("full_reduction: phi identities violated");
    if (joined.predicted_tau != p.phi2 + r2 * p.tau_g || *joined.predicted_tauc != p.phi1 + r1 * p.tau_h)
        throw std::logic_error("full_reduction: joined predictions disagree with phi1/phi2");
    auto ab = solve_ab(p.phi1, p.phi2, r1, r2);
    p.a = ab.a;
    p.b = ab.b;
    p.c = ab.c;

    // Step 5
    auto result = attach_caterpillars(joined, p.a, p.b, anchor);
    p.predicted_tau = r2 * p.tau_g + p.a + p.b + p.phi2;
    p.predicted_tauc = r1 * p.tau_h + p.a + 2 * p.b + p.phi1;
    assert(p.predicted_tau == result.predicted_tau);
    assert(p.predicted_tauc == *result.predicted_tauc);
    return {plan, std::move(g_side), std::move(h_side), std::move(joined), std::move(result)};
}

} // namespace poc
