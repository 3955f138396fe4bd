#pragma once

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "poc/graph.hpp"
#include "poc/ratio.hpp"

namespace poc {

struct ComponentSolution {
    VertexSet component;
    std::int64_t value = 0;
    /// Over the vertex universe of the whole graph.
    VertexSet witness;
};

/// τ or τ_c of a graph together with a minimum witness. `value` is the sum of
/// the per-component values and `witness` the union of their witnesses.
struct SolveResult {
    std::int64_t value = 0;
    VertexSet witness;
    std::vector<ComponentSolution> per_component;
};

/// Minimum vertex cover by branch and bound: degree-0/1 kernelization, a
/// greedy matching lower bound, and branching on a maximum-degree vertex
/// (the vertex itself, or its whole neighbourhood). Components are solved
/// independently. The witness is the first optimum met in that fixed search
/// order.
SolveResult vertex_cover_number(const Graph& g);

/// Every vertex cover of size τ(g), sorted by member list. Throws
/// std::length_error when g has more than `cap` vertices.
std::vector<VertexSet> all_minimum_vertex_covers(const Graph& g, std::size_t cap = 24);

/// Minimum connected vertex cover per component; edgeless components add 0.
///
/// For a component with at least three vertices every cut vertex lies in
/// every connected vertex cover and leaves can always be left out, so the
/// search fixes both. Sizes k = max(τ, #cutvertices), k+1, ... are tried in
/// turn; for each k connected sets are grown from a root by include/exclude
/// branching on the frontier, pruned by a lower bound made of the vertices
/// that must still enter plus a greedy matching on the uncovered edges.
SolveResult connected_vertex_cover_number(const Graph& g);

class UndefinedPocError : public std::domain_error {
public:
    UndefinedPocError() : std::domain_error("PoC undefined: the graph has no edge") {}
};

/// τ_c(g)/τ(g) in lowest terms. Throws UndefinedPocError on edgeless input.
Ratio poc(const Graph& g);

struct CoverNumbers {
    std::int64_t tau = 0;
    std::int64_t tauc = 0;
    friend bool operator==(const CoverNumbers&, const CoverNumbers&) = default;
};

/// (τ, τ_c) memoized per connected component under its canonical form.
/// Components larger than `canonical_limit` are solved without caching.
/// Safe for concurrent use.
class SolverCache {
public:
    explicit SolverCache(std::size_t canonical_limit = 10) : canonical_limit_(canonical_limit) {}

    CoverNumbers numbers(const Graph& g);
    /// Throws UndefinedPocError on edgeless input.
    Ratio poc(const Graph& g);

    std::size_t size() const;
    std::size_t hits() const;
    std::size_t misses() const;

private:
    CoverNumbers component_numbers(const Graph& connected);

    std::size_t canonical_limit_;
    mutable std::mutex mutex_;
    std::unordered_map<std::string, CoverNumbers> memo_;
    std::size_t hits_ = 0;
    std::size_t misses_ = 0;
};

} // namespace poc
