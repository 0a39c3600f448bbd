#include "lpp/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>

#include "lpp/error.hpp"

namespace lpp {

namespace {

void require_laplacian_kind(MatrixKind kind) {
  if (kind != MatrixKind::Laplacian && kind != MatrixKind::SignlessLaplacian) {
    throw InvalidN("decomposition rules apply to Laplacian and signless Laplacian matrices only");
  }
}

void require_vertex(const Graph& g, Vertex v) {
  if (v >= g.n()) throw IndexOutOfRange("vertex " + std::to_string(v) + " >= n = " + std::to_string(g.n()));
}

// Vertex sets of the cycles through v, each with the number of distinct
// cycles on it. Up to kPathCountLimit vertices this counts simple paths from
// v with a subset dynamic program, so dense graphs such as K_n stay within
// reach; larger graphs fall back to explicit (capped) enumeration.
constexpr std::size_t kPathCountLimit = 16;

std::vector<std::pair<std::vector<Vertex>, Integer>> cycle_vertex_sets(const Graph& g, Vertex v) {
  std::vector<std::pair<std::vector<Vertex>, Integer>> out;
  if (g.n() > kPathCountLimit) {
    std::map<std::vector<Vertex>, Integer> grouped;
    for (auto cycle : cycles_through_vertex(g, v)) {
      std::sort(cycle.begin(), cycle.end());
      grouped[cycle] += 1;
    }
    out.assign(grouped.begin(), grouped.end());
    return out;
  }
  std::vector<Vertex> others;
  for (Vertex w = 0; w < g.n(); ++w) {
    if (w != v) others.push_back(w);
  }
  const std::size_t k = others.size();
  std::vector<bool> near_v(k);
  for (std::size_t j = 0; j < k; ++j) near_v[j] = g.has_edge(v, others[j]);
  // paths[mask * k + j]: simple paths v -> ... -> others[j] using exactly mask.
  std::vector<std::uint64_t> paths((std::size_t{1} << k) * k, 0);
  for (std::size_t j = 0; j < k; ++j) {
    if (near_v[j]) paths[(std::size_t{1} << j) * k + j] = 1;
  }
  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::uint64_t closing = 0;
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint64_t count = paths[mask * k + j];
      if (count == 0) continue;
      if (near_v[j]) closing += count;
      for (Vertex w : g.neighbors(others[j])) {
        if (w == v) continue;
        const std::size_t i = w < v ? w : w - 1;
        if (mask >> i & 1) continue;
        paths[(mask | std::size_t{1} << i) * k + i] += count;
      }
    }
    if (std::popcount(mask) < 2 || closing == 0) continue;
    std::vector<Vertex> set{v};
    for (std::size_t j = 0; j < k; ++j) {
      if (mask >> j & 1) set.push_back(others[j]);
    }
    std::sort(set.begin(), set.end());
    // Each cycle is counted once per direction.
    out.emplace_back(std::move(set), Integer(static_cast<unsigned long>(closing / 2)));
  }
  return out;
}

}  // namespace

IntMatrix build_aux(const AuxMatrixSpec& spec) {
  if (spec.order < 1) throw InvalidN("auxiliary matrix order must be >= 1");
  if (spec.kind != MatrixKind::Laplacian && spec.kind != MatrixKind::SignlessLaplacian) {
    throw InvalidN("auxiliary matrices exist for Laplacian and signless Laplacian kinds only");
  }
  const auto n = static_cast<long>(spec.order);
  if (spec.tag == AuxTag::B) {
    const IntMatrix full = build_matrix(generate(FamilySpec::path(n + 1)), spec.kind);
    return full.without({0});
  }
  const IntMatrix full = build_matrix(generate(FamilySpec::path(n + 2)), spec.kind);
  return full.without({0, static_cast<std::size_t>(n + 1)});
}

std::vector<std::vector<Vertex>> cycles_through_vertex(const Graph& g, Vertex v) {
  require_vertex(g, v);
  std::vector<std::vector<Vertex>> cycles;
  std::vector<Vertex> path{v};
  std::vector<bool> on_path(g.n(), false);
  on_path[v] = true;

  // Depth-first over simple paths from v; a path closes into a cycle when its
  // end is adjacent to v. Each cycle is seen in both directions, so keep the
  // one whose second vertex is smaller than its last.
  auto extend = [&](auto&& self) -> void {
    const Vertex tail = path.back();
    for (Vertex w : g.neighbors(tail)) {
      if (w == v && path.size() >= 3 && path[1] < path.back()) {
        if (cycles.size() >= kCycleEnumerationCap) {
          throw CycleLimitExceeded("more than " + std::to_string(kCycleEnumerationCap) + " cycles through vertex " +
                                   std::to_string(v));
        }
        cycles.push_back(path);
      }
      if (on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      self(self);
      path.pop_back();
      on_path[w] = false;
    }
  };
  extend(extend);
  return cycles;
}

IntPoly perm_poly_vertex_expansion(const Graph& g, Vertex v, MatrixKind kind, const PermPolyOptions& options) {
  require_vertex(g, v);
  require_laplacian_kind(kind);
  const IntMatrix m = build_matrix(g, kind);

  IntPoly result = IntPoly::linear(m.at(v, v)) * perm_poly_matrix(m.without({v}), options);
  for (Vertex u : g.neighbors(v)) {
    result += perm_poly_matrix(m.without({u, v}), options);
  }
  for (const auto& [set, count] : cycle_vertex_sets(g, v)) {
    const bool negative = kind == MatrixKind::SignlessLaplacian && set.size() % 2 == 1;
    result += perm_poly_matrix(m.without(set), options) * Integer((negative ? -2 : 2) * count);
  }
  return result;
}

Graph coalesce(const Graph& left, Vertex u, const Graph& right, Vertex v) {
  require_vertex(left, u);
  require_vertex(right, v);
  std::vector<Vertex> relabel(right.n());
  Vertex next = left.n();
  for (Vertex w = 0; w < right.n(); ++w) relabel[w] = w == v ? u : next++;
  auto edges = left.edges();
  for (auto [a, b] : right.edges()) edges.emplace_back(relabel[a], relabel[b]);
  return Graph(left.n() + right.n() - 1, edges);
}

IntPoly perm_poly_coalescence(const Graph& left, Vertex u, const Graph& right, Vertex v, MatrixKind kind,
                              const PermPolyOptions& options) {
  require_vertex(left, u);
  require_vertex(right, v);
  require_laplacian_kind(kind);
  const IntMatrix ml = build_matrix(left, kind);
  const IntMatrix mr = build_matrix(right, kind);
  const IntPoly pi_left = perm_poly_matrix(ml, options);
  const IntPoly pi_right = perm_poly_matrix(mr, options);
  const IntPoly pi_left_u = perm_poly_matrix(ml.without({u}), options);
  const IntPoly pi_right_v = perm_poly_matrix(mr.without({v}), options);
  const IntPoly x = IntPoly::monomial(1, 1);
  return pi_left * pi_right_v + pi_right * pi_left_u - x * pi_left_u * pi_right_v;
}

}  // namespace lpp
