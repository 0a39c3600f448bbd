#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "lpp/algebra.hpp"
#include "lpp/graph.hpp"

namespace lpp {

inline constexpr std::size_t kExpansionLimit = 16;

// One component of a cover: an edge (two vertices) or a cycle (>= 3 vertices
// in cyclic order, starting from its smallest vertex).
struct CoverComponent {
  bool is_cycle = false;
  std::vector<Vertex> vertices;

  friend bool operator==(const CoverComponent&, const CoverComponent&) = default;
};

// Spanning subgraph of G[K] whose components are edges and cycles.
struct Cover {
  std::vector<Vertex> vertex_set;  // K, sorted
  std::vector<CoverComponent> components;
  std::size_t cycle_count = 0;
};

// Streams every cover exactly once, the empty cover included. Recursion
// always branches on the lowest undecided vertex: leave it out of K, match it
// with a later undecided neighbour, or close a cycle through undecided
// vertices. Throws TooLarge for n > kExpansionLimit.
void for_each_cover(const Graph& g, const std::function<void(const Cover&)>& visit);
std::vector<Cover> enumerate_covers(const Graph& g);
std::size_t count_covers(const Graph& g);

// sum over covers of sign * 2^c(H) * prod_{i not in K} d_i with original
// degrees; sign = (-1)^|K| for the Laplacian, +1 for the signless Laplacian.
// Throws InvalidN for other kinds, TooLarge for n > kExpansionLimit.
Integer permanent_by_expansion(const Graph& g, MatrixKind kind);

}  // namespace lpp
