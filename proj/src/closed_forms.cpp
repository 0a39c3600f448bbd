#include "lpp/closed_forms.hpp"

#include <algorithm>
#include <string>

#include "lpp/error.hpp"
#include "lpp/parallel.hpp"

namespace lpp {

namespace {

Integer sign_pow(long e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

Rational half(long num) { return make_rational(num, 2); }

int kind_sign(MatrixKind kind) {
  if (kind == MatrixKind::Laplacian) return 1;
  if (kind == MatrixKind::SignlessLaplacian) return -1;
  throw InvalidN("closed forms are defined for the Laplacian and signless Laplacian only");
}

Integer to_integer(const Rational& r, const char* what) {
  if (r.get_den() != 1) throw UnsupportedFamily(std::string(what) + ": closed form is not integral");
  return r.get_num();
}

LaurentPoly term(long c, long e) { return LaurentPoly::monomial(Integer(c), e); }
LaurentPoly term(const Integer& c, long e) { return LaurentPoly::monomial(c, e); }

// y^n (y^2 + 1)^k
LaurentPoly clearing_factor(long n, unsigned k) {
  LaurentPoly base{{0, Integer(1)}, {2, Integer(1)}};
  return base.pow(k).shifted(n);
}

void require_bicyclic(const FamilySpec& spec) {
  if (spec.tag != FamilySpec::Tag::Dumbbell && spec.tag != FamilySpec::Tag::Theta) {
    throw UnsupportedFamily("residual identities exist for dumbbell and theta graphs only, got " + to_string(spec));
  }
  spec.validate();
}

long residual_shift(const FamilySpec& spec) {
  const auto& [p, q, r] = spec.params;
  return spec.tag == FamilySpec::Tag::Dumbbell ? p + q + r : p + q + r + 2;
}

}  // namespace

bool CoefficientReport::all_match() const {
  return std::all_of(match.begin(), match.end(), [](bool b) { return b; });
}

CoefficientReport coeff_formulas(const Graph& g, MatrixKind kind, C3VertexReading reading,
                                 const std::optional<IntPoly>& poly) {
  const int s = kind_sign(kind);
  const DegreeStats st = degree_stats(g);
  const Integer m = static_cast<unsigned long>(st.m);
  const Integer c3 = static_cast<unsigned long>(count_triangles(g));
  const Integer c4 = static_cast<unsigned long>(count_quadrilaterals(g));
  Integer weighted_c3 = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    const Integer through = static_cast<unsigned long>(count_triangles_through_vertex(g, v));
    const Integer local = reading == C3VertexReading::ContainingVertex ? through : c3 - through;
    weighted_c3 += static_cast<unsigned long>(g.degree(v)) * local;
  }
  const Rational S2(st.sum_d2), S3(st.sum_d3), S4(st.sum_d4), E(st.sum_edge_products), M(m);

  CoefficientReport rep;
  rep.kind = kind;
  rep.reading = reading;
  rep.formula[0] = 1;
  rep.formula[1] = -2 * M;
  rep.formula[2] = 2 * M * M + M - S2 / 2;
  rep.formula[3] = -S3 / 3 + (M + 1) * S2 - make_rational(4, 3) * M * M * M - 2 * M * M + 2 * s * Rational(c3);
  rep.formula[4] = -S4 / 4 + (make_rational(2, 3) * M + 1) * S3 - half(1) * (2 * M * M + 5 * M + 1) * S2 +
                   S2 * S2 / 8 + E + 2 * s * Rational(weighted_c3) + 2 * Rational(c4) -
                   4 * s * M * Rational(c3) + make_rational(2, 3) * M * M * M * M + 2 * M * M * M +
                   half(1) * M * M + half(1) * M;
  for (auto& f : rep.formula) f.canonicalize();

  const IntPoly pi = poly ? *poly : perm_poly(g, kind);
  const std::size_t n = g.n();
  for (std::size_t i = 0; i < 5; ++i) {
    rep.computed[i] = i <= n ? pi.coeff(n - i) : Integer(0);
    rep.integral[i] = rep.formula[i].get_den() == 1;
    rep.match[i] = rep.integral[i] && rep.formula[i].get_num() == rep.computed[i];
  }
  return rep;
}

RecoveredInvariants recoverable_invariants(const IntPoly& poly, MatrixKind kind) {
  kind_sign(kind);
  if (poly.degree() < 1 || !poly.is_monic()) {
    throw NonIntegralInversion("permanental polynomial must be monic of degree at least 1");
  }
  RecoveredInvariants out;
  out.n = static_cast<std::size_t>(poly.degree());
  const auto coeff = [&](std::size_t i) { return i <= out.n ? poly.coeff(out.n - i) : Integer(0); };
  const Integer c1 = coeff(1);
  if (c1 > 0 || c1 % 2 != 0) throw NonIntegralInversion("x^(n-1) coefficient must be even and non-positive");
  out.m = -c1 / 2;
  const Integer& m = out.m;
  out.sum_d2 = 2 * (2 * m * m + m - coeff(2));
  if (out.sum_d2 < 0 || out.sum_d2 % 2 != 0) throw NonIntegralInversion("degree-square sum must be even and non-negative");
  // n degrees summing to 2m have sum d^2 >= (2m)^2 / n.
  if (out.sum_d2 * static_cast<unsigned long>(out.n) < 4 * m * m) {
    throw NonIntegralInversion("degree-square sum is below the Cauchy-Schwarz bound");
  }
  out.cubic_combination = 3 * (m + 1) * out.sum_d2 - 4 * m * m * m - 6 * m * m - 3 * coeff(3);
  return out;
}

PathlikeSides pathlike_sides(PathlikeTag tag, MatrixKind kind, std::size_t n) {
  kind_sign(kind);
  if (n < 1 || (tag == PathlikeTag::C && n < 3)) {
    throw InvalidN("closed forms need n >= 1 (n >= 3 for cycles), got " + std::to_string(n));
  }
  const bool laplacian = kind == MatrixKind::Laplacian;
  const long N = static_cast<long>(n);
  const Integer sn = sign_pow(N);
  IntMatrix matrix;
  PathlikeSides sides;
  switch (tag) {
    case PathlikeTag::P:
      matrix = build_matrix(generate(FamilySpec::path(N)), kind);
      // y^{2n}(y+1)^2 + (-1)^n (y-1)^2
      sides.rhs = term(1, 2 * N + 2) + term(2, 2 * N + 1) + term(1, 2 * N) + term(sn, 2) + term(-2 * sn, 1) + term(sn, 0);
      break;
    case PathlikeTag::B:
      matrix = build_aux({AuxTag::B, n, kind});
      // y^{2n+1}(y+1) - (-1)^n (y-1)
      sides.rhs = term(1, 2 * N + 2) + term(1, 2 * N + 1) + term(-sn, 1) + term(sn, 0);
      break;
    case PathlikeTag::U:
      matrix = build_aux({AuxTag::U, n, kind});
      sides.rhs = term(1, 2 * N + 2) + term(sn, 0);
      break;
    case PathlikeTag::C:
      matrix = build_matrix(generate(FamilySpec::cycle(N)), kind);
      sides.rhs = term(1, 2 * N) + term(sn, 0) + term(laplacian ? Integer(2) : Integer(2 * sn), N);
      break;
  }
  const LaurentPoly factor = tag == PathlikeTag::C ? clearing_factor(N, 0) : clearing_factor(N, 1);
  sides.lhs = factor * substitute_xy(perm_poly_matrix(matrix));
  return sides;
}

bool verify_pathlike_closed_form(PathlikeTag tag, MatrixKind kind, std::size_t n) {
  const PathlikeSides sides = pathlike_sides(tag, kind, n);
  return sides.lhs == sides.rhs;
}

Integer y1_value(const FamilySpec& spec, MatrixKind kind) {
  const bool laplacian = kind_sign(kind) > 0;
  spec.validate();
  const auto& [p, q, r] = spec.params;
  const Rational sp(sign_pow(p)), sq(sign_pow(q)), sr(sign_pow(r));
  Rational v;
  switch (spec.tag) {
    case FamilySpec::Tag::Path:
      return 2;
    case FamilySpec::Tag::Cycle:
      return laplacian ? Integer(sign_pow(p) + 3) : Integer(3 * sign_pow(p) + 1);
    case FamilySpec::Tag::Dumbbell:
      if (laplacian) {
        v = half(9) + 3 * sp / 2 + 3 * sq / 2 + sp * sq / 2 + 2 * sq * sr + 2 * sr + 2 * sp * sr + 2 * sp * sq * sr;
      } else {
        v = half(1) + 3 * sp / 2 + 3 * sq / 2 + 9 * sp * sq / 2 + 8 * sp * sq * sr;
      }
      break;
    case FamilySpec::Tag::Theta:
      if (laplacian) {
        v = half(7) + (sp * sr + sp * sq + sr * sq) / 2 + sq + sr + sp + 2 * sp * sq * sr;
      } else {
        v = half(1) + 3 * (sp * sr + sp * sq + sr * sq) / 2 + 5 * sp * sq * sr;
      }
      break;
    default:
      throw UnsupportedFamily("no closed form at y = 1 for " + to_string(spec));
  }
  v.canonicalize();
  return to_integer(v, "y1_value");
}

Integer aux_y1_value(AuxTag tag, std::size_t n) {
  if (n < 1) throw InvalidN("auxiliary matrices need n >= 1");
  if (tag == AuxTag::B) return 1;
  return n % 2 == 0 ? 1 : 0;
}

LaurentPoly residual_offset(const FamilySpec& spec, MatrixKind kind) {
  const bool laplacian = kind_sign(kind) > 0;
  require_bicyclic(spec);
  const long n = residual_shift(spec);
  const Integer s = sign_pow(n);  // (-1)^n, equal to (-1)^{n-2} for theta
  LaurentPoly low = term(s, 0) + term(2 * s, 1) + term(5 * s, 2) + term(4 * s, 3) + term(4 * s, 4);
  if (spec.tag == FamilySpec::Tag::Dumbbell) {
    // Same offset for both kinds.
    return low + term(4, 2 * n + 2) - term(4, 2 * n + 3) + term(5, 2 * n + 4) - term(2, 2 * n + 5) +
           term(1, 2 * n + 6);
  }
  return low + term(1, 2 * n) + term(3, 2 * n + 2) - term(4, 2 * n + 3) + term(5, 2 * n + 4) -
         term(2, 2 * n + 5) + term(laplacian ? 1 : 10, 2 * n + 6);
}

ResidualReport residual(const FamilySpec& spec, MatrixKind kind, const std::optional<IntPoly>& poly) {
  ResidualReport rep;
  rep.spec = spec;
  rep.kind = kind;
  rep.f = residual_offset(spec, kind);
  rep.n = static_cast<std::size_t>(residual_shift(spec));
  const IntPoly pi = poly ? *poly : perm_poly(generate(spec), kind);
  rep.residual = clearing_factor(static_cast<long>(rep.n), 3) * substitute_xy(pi) - rep.f;
  if (!rep.residual.is_zero()) {
    rep.leading = {rep.residual.terms().rbegin()->second, rep.residual.max_exponent()};
  }
  rep.value_at_one = rep.residual.eval_at_one();
  return rep;
}

bool residual_consistent_at_one(const ResidualReport& report) {
  return report.value_at_one == 8 * y1_value(report.spec, report.kind) - report.f.eval_at_one();
}

std::vector<Monomial> claimed_leading_candidates(const FamilySpec& spec, MatrixKind kind) {
  kind_sign(kind);
  require_bicyclic(spec);
  const auto& [p, q, r] = spec.params;
  if (spec.tag == FamilySpec::Tag::Dumbbell) {
    return {{2, 2 * p + 2 * r + q + 8}, {2, 2 * q + 2 * r + p + 6}, {sign_pow(r), 2 + 2 * p + 2 * q}};
  }
  return {{2, 2 * r + p + q + 8},          {2, 2 * p + q + r + 8},          {2, 2 * q + p + r + 8},
          {sign_pow(q), 2 * p + 2 * r + 6}, {sign_pow(p), 6 + 2 * q + 2 * r}, {sign_pow(r), 6 + 2 * p + 2 * q}};
}

LeadingComparison compare_leading_terms(const ResidualReport& report) {
  LeadingComparison out;
  out.observed = report.leading;
  const auto candidates = claimed_leading_candidates(report.spec, report.kind);
  long top = candidates.front().exponent;
  for (const auto& c : candidates) top = std::max(top, c.exponent);
  Integer sum = 0;
  for (const auto& c : candidates) {
    if (c.exponent == top) sum += c.coeff;
  }
  out.claimed = {sum, top};
  out.exponent_matches = !report.residual.is_zero() && out.observed.exponent == top;
  out.monomial_matches = out.exponent_matches && out.observed.coeff == sum;
  return out;
}

std::vector<FamilySpec> canonical_family_members(FamilySpec::Tag family, std::size_t n, bool include_r0) {
  std::vector<FamilySpec> out;
  const long N = static_cast<long>(n);
  if (family == FamilySpec::Tag::Dumbbell) {
    for (long p = 3; 2 * p <= N; ++p) {
      for (long q = p; p + q <= N; ++q) {
        const long r = N - p - q;
        if (r == 0 && !include_r0) continue;
        out.push_back(FamilySpec::dumbbell(p, q, r));
      }
    }
  } else if (family == FamilySpec::Tag::Theta) {
    const long total = N - 2;
    for (long p = 0; 3 * p <= total; ++p) {
      for (long q = std::max(p, 1L); p + 2 * q <= total; ++q) {
        out.push_back(FamilySpec::theta(p, q, total - p - q));
      }
    }
  } else {
    throw UnsupportedFamily("injectivity checks cover dumbbell and theta families only");
  }
  return out;
}

bool family_injectivity_check(FamilySpec::Tag family, std::size_t n, MatrixKind kind, bool include_r0,
                              unsigned threads) {
  const auto members = canonical_family_members(family, n, include_r0);
  std::vector<IntPoly> polys(members.size());
  parallel_for(members.size(), threads, [&](std::size_t i) { polys[i] = perm_poly(generate(members[i]), kind); });
  std::vector<std::vector<Integer>> keys;
  keys.reserve(polys.size());
  for (const auto& p : polys) keys.push_back(p.coeffs());
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

}  // namespace lpp
