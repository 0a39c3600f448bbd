#include "lpp/permanent.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "lpp/error.hpp"
#include "lpp/parallel.hpp"

namespace lpp {

namespace {

using i128 = __int128;

void require_at_most(const IntMatrix& m, std::size_t limit, const char* what) {
  if (m.order() > limit) {
    throw TooLarge(std::string(what) + ": order " + std::to_string(m.order()) + " exceeds limit " +
                   std::to_string(limit));
  }
}

// True when every |row sum over any subset| and every partial product is
// provably below 2^125, so 2^n signed accumulations stay inside int128.
bool fits_int128(const IntMatrix& m) {
  const std::size_t n = m.order();
  Integer bound = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row = 0;
    for (std::size_t j = 0; j < n; ++j) row += abs(m.at(i, j));
    if (mpz_sizeinbase(row.get_mpz_t(), 2) > 62) return false;
    bound *= row;
  }
  bound <<= static_cast<mp_bitcnt_t>(n);
  return mpz_sizeinbase(bound.get_mpz_t(), 2) <= 125;
}

Integer ryser_int128(const IntMatrix& m) {
  const std::size_t n = m.order();
  std::vector<std::int64_t> cols(n * n);  // column-major for the Gray-code update
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) cols[j * n + i] = m.at(i, j).get_si();
  }
  std::vector<std::int64_t> row_sum(n, 0);
  i128 total = 0;
  std::uint64_t gray = 0;
  const std::uint64_t steps = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < steps; ++k) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(k));
    gray ^= std::uint64_t{1} << j;
    const std::int64_t* col = &cols[j * n];
    if (gray >> j & 1) {
      for (std::size_t i = 0; i < n; ++i) row_sum[i] += col[i];
    } else {
      for (std::size_t i = 0; i < n; ++i) row_sum[i] -= col[i];
    }
    i128 prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= row_sum[i];
    if (std::popcount(gray) & 1) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  if (n & 1) total = -total;
  return from_int128(total);
}

Integer ryser_gmp(const IntMatrix& m) {
  const std::size_t n = m.order();
  std::vector<Integer> row_sum(n, 0);
  Integer total = 0, prod;
  std::uint64_t gray = 0;
  const std::uint64_t steps = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < steps; ++k) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(k));
    gray ^= std::uint64_t{1} << j;
    const bool added = gray >> j & 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (added) {
        row_sum[i] += m.at(i, j);
      } else {
        row_sum[i] -= m.at(i, j);
      }
    }
    prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= row_sum[i];
    if (std::popcount(gray) & 1) {
      total -= prod;
    } else {
      total += prod;
    }
  }
  if (n & 1) total = -total;
  return total;
}

IntPoly ryser_poly(const IntMatrix& m) {
  const std::size_t n = m.order();
  // Row sum of xI - M over S is [i in S] x - sum_{j in S} m_ij.
  std::vector<Integer> constant(n, 0);
  std::vector<Integer> total(n + 1, 0), prod(n + 1);
  std::uint64_t gray = 0;
  const std::uint64_t steps = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < steps; ++k) {
    const unsigned j = static_cast<unsigned>(std::countr_zero(k));
    gray ^= std::uint64_t{1} << j;
    const bool added = gray >> j & 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (added) {
        constant[i] -= m.at(i, j);
      } else {
        constant[i] += m.at(i, j);
      }
    }
    std::fill(prod.begin(), prod.end(), 0);
    prod[0] = 1;
    std::size_t deg = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool has_x = gray >> i & 1;
      if (has_x) {
        for (std::size_t d = deg + 1; d-- > 0;) {
          prod[d + 1] += prod[d];
          prod[d] *= constant[i];
        }
        ++deg;
      } else {
        for (std::size_t d = 0; d <= deg; ++d) prod[d] *= constant[i];
      }
    }
    const bool odd = std::popcount(gray) & 1;
    for (std::size_t d = 0; d <= deg; ++d) {
      if (odd) {
        total[d] -= prod[d];
      } else {
        total[d] += prod[d];
      }
    }
  }
  if (n & 1) {
    for (auto& c : total) c = -c;
  }
  return IntPoly(std::move(total));
}

}  // namespace

Integer permanent_naive(const IntMatrix& m) {
  require_at_most(m, kNaivePermanentLimit, "permanent_naive");
  const std::size_t n = m.order();
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  Integer total = 0, prod;
  do {
    prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= m.at(i, sigma[i]);
    total += prod;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

Integer permanent_ryser(const IntMatrix& m) {
  require_at_most(m, kRyserPermanentLimit, "permanent_ryser");
  if (m.order() == 0) return 1;
  return fits_int128(m) ? ryser_int128(m) : ryser_gmp(m);
}

IntPoly perm_poly_matrix(const IntMatrix& m, const PermPolyOptions& options) {
  const std::size_t n = m.order();
  IntPoly result;
  if (options.route == PolyRoute::RyserPoly) {
    require_at_most(m, kRyserPolyLimit, "perm_poly (polynomial Ryser route)");
    result = n == 0 ? IntPoly{1} : ryser_poly(m);
  } else {
    require_at_most(m, kInterpolationLimit, "perm_poly (interpolation route)");
    std::vector<InterpolationPoint> points(n + 1);
    parallel_for(n + 1, options.threads, [&](std::size_t k) {
      const Integer node = static_cast<unsigned long>(k);
      points[k] = {node, permanent_ryser(m.shifted_negation(node))};
    });
    result = lagrange_interpolate(points);
  }
  if (result.degree() != static_cast<long>(n) || !result.is_monic()) {
    throw NonIntegralCoefficient("internal: permanental polynomial is not monic of degree " + std::to_string(n));
  }
  return result;
}

IntPoly perm_poly(const Graph& g, MatrixKind kind, const PermPolyOptions& options) {
  return perm_poly_matrix(build_matrix(g, kind), options);
}

}  // namespace lpp
