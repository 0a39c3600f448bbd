#pragma once

// Deliberately naive reference implementations. Nothing here calls the
// optimized library routines they are compared against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "lpp/algebra.hpp"
#include "lpp/graph.hpp"

namespace oracle {

using AdjMatrix = std::vector<std::vector<int>>;

inline AdjMatrix adjacency(const lpp::Graph& g) {
  AdjMatrix a(g.n(), std::vector<int>(g.n(), 0));
  for (auto [i, j] : g.edges()) a[i][j] = a[j][i] = 1;
  return a;
}

inline std::size_t triangles(const lpp::Graph& g) {
  const auto a = adjacency(g);
  std::size_t count = 0;
  for (std::size_t i = 0; i < g.n(); ++i)
    for (std::size_t j = i + 1; j < g.n(); ++j)
      for (std::size_t k = j + 1; k < g.n(); ++k) count += a[i][j] && a[j][k] && a[i][k];
  return count;
}

// Each 4-set {i<j<k<l} carries three possible 4-cycles.
inline std::size_t quadrilaterals(const lpp::Graph& g) {
  const auto a = adjacency(g);
  const std::size_t n = g.n();
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          count += a[i][j] && a[j][k] && a[k][l] && a[l][i];
          count += a[i][j] && a[j][l] && a[l][k] && a[k][i];
          count += a[i][k] && a[k][j] && a[j][l] && a[l][i];
        }
  return count;
}

inline std::size_t triangles_at(const lpp::Graph& g, std::size_t v) {
  const auto a = adjacency(g);
  std::size_t count = 0;
  for (std::size_t j = 0; j < g.n(); ++j)
    for (std::size_t k = j + 1; k < g.n(); ++k) count += a[v][j] && a[v][k] && a[j][k];
  return count;
}

// Permutation search with degree pruning.
inline bool isomorphic(const lpp::Graph& g, const lpp::Graph& h) {
  if (g.n() != h.n() || g.m() != h.m()) return false;
  const auto a = adjacency(g);
  const auto b = adjacency(h);
  const std::size_t n = g.n();
  std::vector<std::size_t> map(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || g.degree(i) != h.degree(t)) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) ok = a[i][k] == b[t][map[k]];
      if (!ok) continue;
      used[t] = true;
      map[i] = t;
      if (place(i + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  return place(0);
}

// All graphs on n vertices where vertices 0 and 1 have degree 3 and the rest
// degree 2, up to isomorphism. Edges are added in lexicographic order of
// (i, j) while every vertex stays within its target degree.
inline std::vector<lpp::Graph> graphs_with_degrees_3322(std::size_t n) {
  std::vector<int> target(n, 2);
  target[0] = target[1] = 3;
  std::vector<int> deg(n, 0);
  std::vector<lpp::Edge> edges;
  std::vector<lpp::Graph> found;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::function<void(std::size_t)> extend = [&](std::size_t from) {
    // Vertex i can no longer gain edges once every slot (i, *) is behind us.
    if (from < slots.size()) {
      const std::size_t row = slots[from].first;
      for (std::size_t v = 0; v < row; ++v)
        if (deg[v] != target[v]) return;
    }
    bool complete = true;
    for (std::size_t v = 0; v < n; ++v) complete = complete && deg[v] == target[v];
    if (complete) {
      lpp::Graph g(n, edges);
      for (const auto& f : found)
        if (isomorphic(f, g)) return;
      found.push_back(g);
      return;
    }
    for (std::size_t s = from; s < slots.size(); ++s) {
      const auto [i, j] = slots[s];
      if (deg[i] == target[i] || deg[j] == target[j]) continue;
      ++deg[i];
      ++deg[j];
      edges.emplace_back(i, j);
      extend(s + 1);
      edges.pop_back();
      --deg[i];
      --deg[j];
    }
  };
  extend(0);
  return found;
}

inline lpp::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<lpp::Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return lpp::Graph(n, edges);
}

// Schoolbook permanent by cofactor expansion along the first row.
inline lpp::Integer permanent_cofactor(const std::vector<std::vector<lpp::Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  lpp::Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    std::vector<std::vector<lpp::Integer>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<lpp::Integer> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    total += m[0][c] * permanent_cofactor(minor);
  }
  return total;
}

// Number of matchings (empty one included) of the cycle C_n: Lucas numbers.
inline std::uint64_t cycle_matchings(std::size_t n) {
  std::uint64_t a = 2, b = 1;  // L_0, L_1
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return a;
}

}  // namespace oracle
