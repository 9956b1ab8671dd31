#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "evenspec/graph.hpp"

namespace evenspec {

inline constexpr std::size_t kMaxCanonicalOrder = 9;
inline constexpr std::size_t kMaxEnumerateOrder = 8;

/// Byte string: the order, then the lexicographically smallest upper-triangle
/// adjacency bitstring over all relabelings, packed MSB first. Two graphs get
/// equal labels iff they are isomorphic. Orders above 9 throw GraphError.
///
/// The search only visits relabelings that sort vertices by a refined degree
/// invariant, and abandons a branch as soon as its prefix exceeds the best one.
std::string canonical_label(const Graph& g);

/// The relabeling realizing canonical_label: perm[v] is v's new index.
std::vector<Vertex> canonical_permutation(const Graph& g);

/// One representative per isomorphism class of connected graphs on n vertices,
/// each given in canonical form, ordered by (edge count, label). 1 <= n <= 8.
std::vector<Graph> enumerate_connected(std::size_t n);

}  // namespace evenspec
