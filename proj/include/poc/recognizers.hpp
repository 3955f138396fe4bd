#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "poc/graph.hpp"
#include "poc/ratio.hpp"
#include "poc/solver.hpp"

namespace poc {

// ---------------------------------------------------------------- patterns

enum class PatternId { P4, P5, P7, C4, C5, C6, C7, Delta1, Delta2 };

struct Pattern {
    PatternId id;
    std::string name;
    Graph graph;
};

/// Fixed catalog. Delta1 is two C4's sharing vertex d (a=0 .. g=6, edges
/// ab bd ac cd de ef fg gd); Delta2 is Delta1 without bd.
const Pattern& pattern(PatternId id);
std::span<const PatternId> all_patterns();
std::optional<PatternId> pattern_from_name(std::string_view name);

/// Forbidden sets of the three hereditary PoC classes.
std::span<const PatternId> poc_perfect_forbidden();      // P5, C5, C4
std::span<const PatternId> near_perfect_43_forbidden();  // P5, C4
std::span<const PatternId> near_perfect_32_forbidden();  // P7, C6, Delta1, Delta2

/// embedding[i] is the host vertex playing pattern vertex i.
using Embedding = std::vector<int>;

/// Backtracking over degree-feasible host vertices, checking adjacency and
/// non-adjacency against every mapped vertex at each extension.
std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern_graph);
std::optional<Embedding> contains_induced(const Graph& host, PatternId id);

// ---------------------------------------------------------------- chordal

struct Chordality {
    bool chordal = false;
    /// Perfect elimination ordering (reverse LexBFS order) when chordal.
    std::vector<int> elimination_order;
    /// Vertices of a chordless cycle of length >= 4, in cycle order, when not.
    std::vector<int> chordless_cycle;
};

Chordality chordality(const Graph& g);
bool is_chordal(const Graph& g);

// ----------------------------------------------------------- classification

enum class PocClass { PocPerfect, PocNearPerfect43, PocNearPerfect32, Unbounded };

std::string to_string(PocClass c);
/// 1, 4/3, 3/2; nullopt for Unbounded.
std::optional<Ratio> class_threshold(PocClass c);

struct PatternWitness {
    PatternId pattern;
    Embedding embedding;
};

struct ClassLabel {
    PocClass poc_class = PocClass::Unbounded;
    /// The forbidden pattern that ruled out the next stricter class.
    std::optional<PatternWitness> witness;
};

/// Most restrictive class whose forbidden set is absent, tested in the order
/// {P5,C5,C4}, {P5,C4}, {P7,C6,Delta1,Delta2}.
ClassLabel classify(const Graph& g);

// ------------------------------------------------------------ special trees

/// Subdivide every edge of `base` once, then hang a pendant on every leaf.
/// Labels: base vertices, then subdivision vertices in sorted base-edge order,
/// then pendants in ascending leaf order. Throws GraphError unless base is a
/// tree with an edge.
Graph build_special_tree(const Graph& base);

struct SpecialTreeRecognition {
    /// The tree the input was built from, vertices relabeled in ascending order.
    std::optional<Graph> base;
    /// First violated condition when base is empty.
    std::string violation;
    explicit operator bool() const { return base.has_value(); }
};

SpecialTreeRecognition recognize_special_tree(const Graph& g);
bool is_special_tree(const Graph& g);

// --------------------------------------------------------------- criticality

/// Criticality predicates over PoC, with memoization across calls.
///
/// Disconnected subgraphs take part with PoC computed per component (sum of
/// τ_c over sum of τ). Throws std::invalid_argument when g has no proper
/// induced subgraph with an edge (edgeless graphs and K2), and
/// std::length_error above the size caps.
class CriticalityChecker {
public:
    explicit CriticalityChecker(SolverCache& cache, std::size_t critical_cap = 12, std::size_t strong_cap = 10);

    /// Every proper induced subgraph with an edge has PoC < poc(g).
    bool is_critical(const Graph& g);
    /// Every proper subgraph (vertex and/or edge deletions) with an edge has
    /// PoC < poc(g).
    bool is_strongly_critical(const Graph& g);

    /// A proper induced subgraph with an edge whose PoC is >= poc(g), largest
    /// first.
    std::optional<VertexSet> induced_witness(const Graph& g);

private:
    void check_preconditions(const Graph& g, std::size_t cap) const;
    Ratio best_subgraph_poc(const Graph& connected);

    SolverCache& cache_;
    std::size_t critical_cap_;
    std::size_t strong_cap_;
    std::unordered_map<std::string, Ratio> best_subgraph_;
};

bool is_critical(const Graph& g);
bool is_strongly_critical(const Graph& g);

} // namespace poc
