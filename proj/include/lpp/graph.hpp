#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lpp/algebra.hpp"
#include "lpp/error.hpp"
#include "lpp/matrix.hpp"

namespace lpp {

class InvalidGraph : public Error { using Error::Error; };

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph. Adjacency lists are strictly increasing and
// symmetric; the constructor rejects loops, parallel edges and indices
// outside [0, n).
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adjacency_(n) {}
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t n() const noexcept { return adjacency_.size(); }
  std::size_t m() const noexcept { return edge_count_; }
  const std::vector<Vertex>& neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex i, Vertex j) const;
  // Each edge once as (i, j) with i < j, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

enum class MatrixKind { Laplacian, SignlessLaplacian, Adjacency, DegreeDiagonal };

std::string_view to_string(MatrixKind kind);
// Accepts "laplacian", "signless", "adjacency", "degree" (plus the long
// enumerator names). Throws ParseError.
MatrixKind parse_matrix_kind(std::string_view text);

// Graph family descriptor. Parameter meaning per tag:
//   Path n, Cycle n, Complete n           -> params[0] = n
//   CompleteBipartite a b                 -> params[0..1]
//   Lollipop r n (cycle C_r plus a pendant path, n vertices in total)
//   Dumbbell p q r (r internal vertices between the two cycle hubs)
//   Theta p q r (internal vertex counts of the three hub-to-hub paths)
//   DisjointUnion                         -> parts
struct FamilySpec {
  enum class Tag { Path, Cycle, Complete, CompleteBipartite, Lollipop, Dumbbell, Theta, DisjointUnion };

  Tag tag = Tag::Path;
  std::array<long, 3> params{0, 0, 0};
  std::vector<FamilySpec> parts;

  static FamilySpec path(long n) { return {Tag::Path, {n, 0, 0}, {}}; }
  static FamilySpec cycle(long n) { return {Tag::Cycle, {n, 0, 0}, {}}; }
  static FamilySpec complete(long n) { return {Tag::Complete, {n, 0, 0}, {}}; }
  static FamilySpec complete_bipartite(long a, long b) { return {Tag::CompleteBipartite, {a, b, 0}, {}}; }
  static FamilySpec lollipop(long r, long n) { return {Tag::Lollipop, {r, n, 0}, {}}; }
  static FamilySpec dumbbell(long p, long q, long r) { return {Tag::Dumbbell, {p, q, r}, {}}; }
  static FamilySpec theta(long p, long q, long r) { return {Tag::Theta, {p, q, r}, {}}; }
  static FamilySpec disjoint_union(std::vector<FamilySpec> parts) {
    return {Tag::DisjointUnion, {0, 0, 0}, std::move(parts)};
  }

  // Throws InvalidFamilyParams.
  void validate() const;
  std::size_t vertex_count() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// "dumbbell(3,3,1)", "theta(0,1,2) + cycle(3)", ...
std::string to_string(const FamilySpec& spec);
FamilySpec parse_family_spec(std::string_view text);

// Canonical labelled graph for a spec. Labelling:
//   Path: 0-1-...-(n-1).  Cycle: path plus edge (n-1, 0).
//   Lollipop r n: cycle on 0..r-1, pendant path r..n-1 with edge (0, r).
//   Dumbbell p q r: cycle on 0..p-1 (hub 0), internal path p..p+r-1,
//     cycle on p+r..p+r+q-1 (hub p+r); chain 0, p, ..., p+r-1, p+r.
//   Theta p q r: hubs 0 and 1; the three paths use consecutive labels from 2
//     in the order p, q, r.
//   CompleteBipartite a b: parts 0..a-1 and a..a+b-1.
//   DisjointUnion: parts in order, indices shifted.
Graph generate(const FamilySpec& spec);

// Non-union family members with min_n <= n <= max_n: paths, cycles, K_n
// (n >= 4), K_{a,b} with a <= b, lollipops, dumbbells with p <= q and thetas
// with p <= q <= r. Ordered by vertex count, then family.
std::vector<FamilySpec> family_sweep(std::size_t max_n, std::size_t min_n = 1);

IntMatrix build_matrix(const Graph& g, MatrixKind kind);

struct DegreeStats {
  std::vector<std::size_t> degrees;  // sorted descending
  std::size_t m = 0;
  Integer sum_d2, sum_d3, sum_d4;
  Integer sum_edge_products;  // sum over edges ij of d_i * d_j
};

DegreeStats degree_stats(const Graph& g);

std::size_t count_triangles(const Graph& g);
// Number of 4-cycles as subgraphs (K_4 has three).
std::size_t count_quadrilaterals(const Graph& g);
// Triangles containing v; throws IndexOutOfRange.
std::size_t count_triangles_through_vertex(const Graph& g, Vertex v);

Graph disjoint_union(const Graph& g, const Graph& h);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// {"n": int, "edges": [[i,j],...]} with i<j, sorted.
nlohmann::json to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
Graph load_graph_file(const std::filesystem::path& path);

}  // namespace lpp
