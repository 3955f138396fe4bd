#pragma once

#include <string>
#include <vector>

#include "poc/graph.hpp"

namespace poc {

/// Largest graph accepted by the canonical labeler.
inline constexpr std::size_t kCanonicalMaxVertices = 64;

struct CanonicalLabeling {
    /// position[v] is the canonical index of vertex v.
    std::vector<int> position;
    Graph graph;
};

/// Exact canonical form: isomorphic graphs map to identical labeled graphs.
///
/// Equitable partition refinement followed by individualization over the
/// search tree; the leaf with the lexicographically smallest adjacency rows
/// wins. Subtrees equivalent under automorphisms discovered during the search
/// are skipped. Throws GraphError above kCanonicalMaxVertices.
CanonicalLabeling canonical_labeling(const Graph& g);

/// Compact byte string of the canonical graph: vertex count followed by the
/// packed upper triangle. Equal keys iff isomorphic graphs.
std::string canonical_key(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

} // namespace poc
