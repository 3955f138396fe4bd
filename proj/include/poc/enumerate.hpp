#pragma once

#include <cstddef>
#include <vector>

#include "poc/graph.hpp"

namespace poc {

/// Hard ceiling for every enumerator.
inline constexpr std::size_t kEnumerationHardLimit = 10;
inline constexpr std::size_t kDefaultEnumerationCap = 8;
inline constexpr std::size_t kDefaultChordalEnumerationCap = 9;

/// One graph per isomorphism class, in canonical labeling, sorted by
/// canonical key. levels[k] holds the graphs on k vertices, k = 0..max_n
/// (levels[0] is empty). Throws std::length_error when max_n > cap or above
/// the hard limit.
///
/// Each level is grown from the previous one by adding a vertex with every
/// possible neighbourhood and deduplicating by canonical form.
std::vector<std::vector<Graph>> connected_graphs_up_to(std::size_t max_n, std::size_t cap = kDefaultEnumerationCap);
std::vector<std::vector<Graph>> all_graphs_up_to(std::size_t max_n, std::size_t cap = kDefaultEnumerationCap);

/// Connected chordal graphs. A connected chordal graph minus a simplicial
/// vertex is still connected and chordal, so each level adds a vertex whose
/// neighbourhood is a nonempty clique.
std::vector<std::vector<Graph>> connected_chordal_graphs_up_to(std::size_t max_n,
                                                               std::size_t cap = kDefaultChordalEnumerationCap);

std::vector<Graph> enumerate_connected(std::size_t n, std::size_t cap = kDefaultEnumerationCap);
std::vector<Graph> enumerate_all(std::size_t n, std::size_t cap = kDefaultEnumerationCap);
std::vector<Graph> enumerate_connected_chordal(std::size_t n, std::size_t cap = kDefaultChordalEnumerationCap);

} // namespace poc
