#pragma once

#include <cstddef>
#include <vector>

#include "lpp/algebra.hpp"
#include "lpp/graph.hpp"
#include "lpp/matrix.hpp"
#include "lpp/permanent.hpp"

namespace lpp {

enum class AuxTag { B, U };

// B of order n: L(P_{n+1}) (or Q) minus one end row/column, diagonal (2,...,2,1).
// U of order n: L(P_{n+2}) (or Q) minus both end rows/columns, diagonal all 2.
struct AuxMatrixSpec {
  AuxTag tag = AuxTag::B;
  std::size_t order = 1;
  MatrixKind kind = MatrixKind::Laplacian;
};

// Throws InvalidN for order 0 or a kind other than Laplacian/SignlessLaplacian.
IntMatrix build_aux(const AuxMatrixSpec& spec);

inline constexpr std::size_t kCycleEnumerationCap = 10'000;

// Every simple cycle through v, each exactly once, as the vertex sequence
// starting at v. Several cycles may share a vertex set (K_4 has three
// 4-cycles through each vertex). Throws IndexOutOfRange, or
// CycleLimitExceeded beyond kCycleEnumerationCap cycles.
std::vector<std::vector<Vertex>> cycles_through_vertex(const Graph& g, Vertex v);

// pi(M) = (x - d(v)) pi(M_v) + sum_{u in N(v)} pi(M_uv)
//       + 2 sum_{C through v} s(C) pi(M_V(C)),
// with s(C) = 1 for the Laplacian and (-1)^|V(C)| for the signless Laplacian.
// Cycles on a common vertex set share one submatrix polynomial; up to 16
// vertices they are counted per set rather than enumerated one by one.
IntPoly perm_poly_vertex_expansion(const Graph& g, Vertex v, MatrixKind kind,
                                   const PermPolyOptions& options = {});

// Identifies u in left with v in right. Left keeps its labels; the remaining
// vertices of right follow in their original order.
Graph coalesce(const Graph& left, Vertex u, const Graph& right, Vertex v);

// pi(G.H) = pi(G) pi(H_v) + pi(H) pi(G_u) - x pi(G_u) pi(H_v).
IntPoly perm_poly_coalescence(const Graph& left, Vertex u, const Graph& right, Vertex v, MatrixKind kind,
                              const PermPolyOptions& options = {});

}  // namespace lpp
