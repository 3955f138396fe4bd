#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "poc/graph.hpp"
#include "poc/ratio.hpp"
#include "poc/recognizers.hpp"
#include "poc/solver.hpp"

namespace poc {

struct Violation {
    std::string graph6;
    std::string detail;
};

struct TheoremReport {
    std::string theorem;
    std::size_t scanned = 0;
    std::vector<Violation> violations;
    std::int64_t elapsed_ms = 0;
    /// Informational lines (graphs found, boundary cases).
    std::vector<std::string> notes;

    bool pass() const { return violations.empty(); }
};

/// {theorem, scanned, violations[{graph6, detail}], elapsed_ms, pass, notes}
nlohmann::json to_json(const TheoremReport& r);
std::string to_text(const TheoremReport& r);

/// τ_c <= 2τ - 1 on every connected graph with an edge, n <= max_n.
TheoremReport check_observation1(std::size_t max_n, SolverCache& cache);

/// (A) every connected graph with an edge, n <= max_n, free of `forbidden`
/// has PoC <= threshold; (B) every member of `forbidden` has PoC > threshold.
/// The pair must be one of the three class definitions.
TheoremReport check_characterization(std::size_t max_n, const Ratio& threshold, std::span<const PatternId> forbidden,
                                     SolverCache& cache);

/// {P5,C5,C4}-free <=> chordal and P5-free, over all graphs n <= max_n.
TheoremReport check_theorem2_equivalence(std::size_t max_n);

/// Chordal P7-free connected graphs have PoC <= 3/2.
TheoremReport check_corollary_chordal_p7free(std::size_t max_n, SolverCache& cache);

/// Over connected chordal graphs n <= max_n: critical <=> special tree <=>
/// strongly critical, PoC = 2 - 1/τ on each, and the critical ones are
/// exactly the special trees that fit.
TheoremReport check_critical_chordal(std::size_t max_n, SolverCache& cache);

/// Structure of strongly critical graphs among connected graphs n <= max_n:
/// bipartite, minimum vertex covers independent, no minimum cover holding
/// both ends of a bridge, special tree when a cut vertex exists. Also C5 is
/// critical but not strongly critical. Lists every critical graph found.
TheoremReport check_strongly_critical_structure(std::size_t max_n, SolverCache& cache);

/// fix_tauc / fix_tau predictions against the solver for connected graphs
/// n <= max_n, replicate_join (k = 2, 3) for n <= min(max_n, 4), pairwise
/// joins and small caterpillars.
TheoremReport verify_gadgets(std::size_t max_n, SolverCache& cache);

/// Plan decision against τ(H) <= τ(G) for every ordered pair of `graphs`,
/// with every construction stage of at most `piece_limit` vertices solved
/// exactly against its prediction.
TheoremReport check_reduction_decisions(std::span<const Graph> graphs, std::int64_t r1, std::int64_t r2,
                                        std::size_t piece_limit, SolverCache& cache);

/// Scan ids: obs1 thm2 thm3 thm4 cor1 thm5 thm6 gadgets. thm2 folds in the
/// equivalence check. Throws std::invalid_argument on an unknown id.
TheoremReport run_check(const std::string& id, std::size_t max_n, SolverCache& cache);
std::span<const std::string> check_ids();

} // namespace poc
