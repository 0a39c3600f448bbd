#pragma once

#include <cstddef>

#include "lpp/algebra.hpp"
#include "lpp/graph.hpp"
#include "lpp/matrix.hpp"

namespace lpp {

// Size guards. Exceeding one is a TooLarge error, never a truncation.
inline constexpr std::size_t kNaivePermanentLimit = 9;
inline constexpr std::size_t kRyserPermanentLimit = 30;
inline constexpr std::size_t kInterpolationLimit = 22;
inline constexpr std::size_t kRyserPolyLimit = 12;

// Sum over all permutations of prod_i m[i][sigma(i)].
Integer permanent_naive(const IntMatrix& m);

// Ryser inclusion-exclusion with binary-reflected Gray-code subset order:
// per(A) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} a_ij.
// Runs in 128-bit arithmetic whenever the row-sum bound proves that no
// intermediate can overflow, otherwise in GMP integers.
Integer permanent_ryser(const IntMatrix& m);

enum class PolyRoute {
  Interpolation,  // per(kI - M) for k = 0..n, then exact interpolation
  RyserPoly,      // Ryser with linear-polynomial entries
};

struct PermPolyOptions {
  PolyRoute route = PolyRoute::Interpolation;
  unsigned threads = 1;  // concurrent evaluations on the interpolation route
};

// per(xI - M), monic of degree n.
IntPoly perm_poly_matrix(const IntMatrix& m, const PermPolyOptions& options = {});
IntPoly perm_poly(const Graph& g, MatrixKind kind, const PermPolyOptions& options = {});

}  // namespace lpp
