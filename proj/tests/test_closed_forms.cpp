#include <doctest.h>

#include <random>

#include "lpp/closed_forms.hpp"
#include "lpp/error.hpp"
#include "lpp/verify.hpp"
#include "oracles/oracles.hpp"

using namespace lpp;

namespace {

constexpr MatrixKind kKinds[] = {MatrixKind::Laplacian, MatrixKind::SignlessLaplacian};

}  // namespace

TEST_CASE("coefficient formulas, anchors") {
  const CoefficientReport c3 = coeff_formulas(generate(FamilySpec::cycle(3)), MatrixKind::Laplacian);
  CHECK(c3.formula[1] == -6);
  CHECK(c3.formula[2] == 15);
  CHECK(c3.formula[3] == -12);
  CHECK(c3.formula[4] == 0);
  CHECK(c3.all_match());

  const CoefficientReport d = coeff_formulas(generate(FamilySpec::dumbbell(3, 3, 1)), MatrixKind::Laplacian);
  CHECK(d.formula[2] == 117);
  CHECK(d.computed[2] == 117);
  CHECK(d.all_match());
}

TEST_CASE("coefficient formulas hold on every family graph up to 11 vertices") {
  for (const auto& spec : family_sweep(11)) {
    for (MatrixKind kind : kKinds) {
      CAPTURE(to_string(spec));
      CAPTURE(to_string(kind));
      const CoefficientReport rep = coeff_formulas(generate(spec), kind);
      CHECK(rep.formula[0] == 1);
      CHECK(rep.all_match());
      for (bool b : rep.integral) CHECK(b);
    }
  }
}

TEST_CASE("triangle reading in the fourth coefficient is fixed by brute force") {
  // Random graphs with plenty of triangles; the expected value comes from the
  // naive permanent, not from any polynomial route.
  std::mt19937_64 rng(31);
  int containing_ok = 0, deleted_ok = 0;
  for (int t = 0; t < 8; ++t) {
    const Graph g = oracle::random_graph(5 + t % 3, 0.6, rng);
    for (MatrixKind kind : kKinds) {
      const IntMatrix m = build_matrix(g, kind);
      std::vector<InterpolationPoint> pts;
      for (long k = 0; k <= static_cast<long>(g.n()); ++k) pts.push_back({k, permanent_naive(m.shifted_negation(k))});
      const IntPoly brute = lagrange_interpolate(pts);
      containing_ok += coeff_formulas(g, kind, C3VertexReading::ContainingVertex, brute).match[4];
      deleted_ok += coeff_formulas(g, kind, C3VertexReading::VertexDeleted, brute).match[4];
    }
  }
  CHECK(containing_ok == 16);
  CHECK(deleted_ok < 16);
}

TEST_CASE("recoverable invariants") {
  const RecoveredInvariants c3 = recoverable_invariants(IntPoly{-12, 15, -6, 1}, MatrixKind::Laplacian);
  CHECK(c3.n == 3);
  CHECK(c3.m == 3);
  CHECK(c3.sum_d2 == 12);
  CHECK(c3.cubic_combination == 18);

  const Graph d = generate(FamilySpec::dumbbell(3, 3, 1));
  CHECK(recoverable_invariants(perm_poly(d, MatrixKind::Laplacian), MatrixKind::Laplacian).cubic_combination == 82);
  CHECK(recoverable_invariants(perm_poly(d, MatrixKind::SignlessLaplacian), MatrixKind::SignlessLaplacian)
            .cubic_combination == 94 + 12);

  const RecoveredInvariants p2 = recoverable_invariants(IntPoly{2, -2, 1}, MatrixKind::Laplacian);
  CHECK(p2.n == 2);
  CHECK(p2.m == 1);
  CHECK(p2.sum_d2 == 2);

  CHECK_THROWS_AS(recoverable_invariants(IntPoly{1, 3, 1}, MatrixKind::Laplacian), NonIntegralInversion);
  CHECK_THROWS_AS(recoverable_invariants(IntPoly{1, 2, 1}, MatrixKind::Laplacian), NonIntegralInversion);
  CHECK_THROWS_AS(recoverable_invariants(IntPoly{1, -2, 2}, MatrixKind::Laplacian), NonIntegralInversion);
  CHECK_THROWS_AS(recoverable_invariants(IntPoly{5}, MatrixKind::Laplacian), NonIntegralInversion);
}

TEST_CASE("recoverable invariants reproduce random family graphs") {
  const auto sweep = family_sweep(12);
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<std::size_t> pick(0, sweep.size() - 1);
  for (int t = 0; t < 50; ++t) {
    const FamilySpec& spec = sweep[pick(rng)];
    const Graph g = generate(spec);
    const DegreeStats st = degree_stats(g);
    for (MatrixKind kind : kKinds) {
      CAPTURE(to_string(spec));
      const RecoveredInvariants inv = recoverable_invariants(perm_poly(g, kind), kind);
      CHECK(inv.n == g.n());
      CHECK(inv.m == static_cast<unsigned long>(g.m()));
      CHECK(inv.sum_d2 == st.sum_d2);
      const Integer c3 = static_cast<unsigned long>(count_triangles(g));
      CHECK(inv.cubic_combination == st.sum_d3 + (kind == MatrixKind::Laplacian ? -6 : 6) * c3);
    }
  }
}

TEST_CASE("path-like closed forms") {
  const PathlikeSides c3 = pathlike_sides(PathlikeTag::C, MatrixKind::Laplacian, 3);
  CHECK(c3.lhs == LaurentPoly{{6, Integer(1)}, {3, Integer(2)}, {0, Integer(-1)}});
  CHECK(c3.lhs == c3.rhs);
  const PathlikeSides u1 = pathlike_sides(PathlikeTag::U, MatrixKind::Laplacian, 1);
  CHECK(u1.lhs == LaurentPoly{{4, Integer(1)}, {0, Integer(-1)}});
  CHECK(verify_pathlike_closed_form(PathlikeTag::B, MatrixKind::Laplacian, 1));
  for (PathlikeTag tag : {PathlikeTag::P, PathlikeTag::B, PathlikeTag::U, PathlikeTag::C}) {
    for (MatrixKind kind : kKinds) {
      for (std::size_t n = tag == PathlikeTag::C ? 3 : 1; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(verify_pathlike_closed_form(tag, kind, n));
      }
    }
  }
  CHECK_THROWS_AS(verify_pathlike_closed_form(PathlikeTag::P, MatrixKind::Laplacian, 0), InvalidN);
  CHECK_THROWS_AS(verify_pathlike_closed_form(PathlikeTag::C, MatrixKind::Laplacian, 2), InvalidN);
}

TEST_CASE("values at y = 1") {
  CHECK(y1_value(FamilySpec::dumbbell(3, 3, 1), MatrixKind::Laplacian) == 2);
  CHECK(y1_value(FamilySpec::dumbbell(3, 3, 1), MatrixKind::SignlessLaplacian) == -6);
  CHECK(y1_value(FamilySpec::theta(1, 1, 1), MatrixKind::Laplacian) == 0);
  CHECK(y1_value(FamilySpec::theta(1, 1, 1), MatrixKind::SignlessLaplacian) == 0);
  CHECK_THROWS_AS(y1_value(FamilySpec::complete(4), MatrixKind::Laplacian), UnsupportedFamily);
  // x(y = 1) = 2, so the closed forms must equal pi(2); pi(2) itself is taken
  // from the naive permanent of 2I - M.
  std::vector<FamilySpec> specs;
  for (long n = 1; n <= 8; ++n) specs.push_back(FamilySpec::path(n));
  for (long n = 3; n <= 9; ++n) specs.push_back(FamilySpec::cycle(n));
  for (const auto& s : canonical_family_members(FamilySpec::Tag::Dumbbell, 9)) specs.push_back(s);
  for (const auto& s : canonical_family_members(FamilySpec::Tag::Theta, 9)) specs.push_back(s);
  for (const auto& s : specs) {
    for (MatrixKind kind : kKinds) {
      CAPTURE(to_string(s));
      const IntMatrix m = build_matrix(generate(s), kind);
      CHECK(y1_value(s, kind) == permanent_naive(m.shifted_negation(2)));
    }
  }
  for (std::size_t n = 1; n <= 9; ++n) {
    for (MatrixKind kind : kKinds) {
      CHECK(aux_y1_value(AuxTag::B, n) == permanent_naive(build_aux({AuxTag::B, n, kind}).shifted_negation(2)));
      CHECK(aux_y1_value(AuxTag::U, n) == permanent_naive(build_aux({AuxTag::U, n, kind}).shifted_negation(2)));
    }
  }
}

TEST_CASE("residual identities are consistent at y = 1 and y = 2") {
  std::vector<FamilySpec> specs = canonical_family_members(FamilySpec::Tag::Dumbbell, 10);
  for (const auto& s : canonical_family_members(FamilySpec::Tag::Theta, 9)) specs.push_back(s);
  for (const auto& s : specs) {
    for (MatrixKind kind : kKinds) {
      CAPTURE(to_string(s));
      const ResidualReport rep = residual(s, kind);
      CHECK(residual_consistent_at_one(rep));
      CHECK(rep.value_at_one == 8 * y1_value(s, kind) - rep.f.eval_at_one());
      // At y = 2 the substitution gives x = 7/2 and the clearing factor 2^n 5^3.
      const IntPoly pi = perm_poly(generate(s), kind);
      Rational two_n = 1;
      for (std::size_t i = 0; i < rep.n; ++i) two_n *= 2;
      CHECK(rep.residual.eval(Rational(2)) == two_n * 125 * pi.eval(make_rational(7, 2)) - rep.f.eval(Rational(2)));
    }
  }
}

TEST_CASE("residual offsets") {
  // Dumbbell offsets coincide for both kinds; theta offsets differ only in
  // the top term.
  const FamilySpec d = FamilySpec::dumbbell(3, 4, 1);
  CHECK(residual_offset(d, MatrixKind::Laplacian) == residual_offset(d, MatrixKind::SignlessLaplacian));
  const FamilySpec t = FamilySpec::theta(1, 2, 3);
  const LaurentPoly diff = residual_offset(t, MatrixKind::SignlessLaplacian) - residual_offset(t, MatrixKind::Laplacian);
  CHECK(diff == LaurentPoly::monomial(9, 2 * 8 + 6));
  CHECK(residual_offset(d, MatrixKind::Laplacian).coeff(0) == 1);  // (-1)^8
  CHECK_THROWS_AS(residual_offset(FamilySpec::cycle(5), MatrixKind::Laplacian), UnsupportedFamily);
}

TEST_CASE("residuals are symmetric under swapping the dumbbell cycles") {
  for (long r = 0; r <= 2; ++r) {
    for (MatrixKind kind : kKinds) {
      CHECK(residual(FamilySpec::dumbbell(3, 5, r), kind).residual ==
            residual(FamilySpec::dumbbell(5, 3, r), kind).residual);
    }
  }
  CHECK(residual(FamilySpec::theta(1, 2, 3), MatrixKind::Laplacian).residual ==
        residual(FamilySpec::theta(3, 1, 2), MatrixKind::Laplacian).residual);
}

TEST_CASE("claimed leading candidates") {
  const auto theta = claimed_leading_candidates(FamilySpec::theta(1, 1, 1), MatrixKind::Laplacian);
  REQUIRE(theta.size() == 6);
  int at12 = 0;
  for (const auto& m : theta) at12 += m.exponent == 12 && m.coeff == 2;
  CHECK(at12 == 3);
  const ResidualReport rep = residual(FamilySpec::theta(1, 1, 1), MatrixKind::Laplacian);
  const LeadingComparison cmp = compare_leading_terms(rep);
  CHECK(cmp.claimed == Monomial{6, 12});
  CHECK(cmp.exponent_matches);
  // Regression pin of the exact residual: the top coefficient is 7, not the
  // claimed 6, because the offset leaves one extra y^{2n+2}.
  CHECK(rep.leading == Monomial{7, 12});
  CHECK_FALSE(cmp.monomial_matches);

  const auto dumbbell = claimed_leading_candidates(FamilySpec::dumbbell(3, 4, 1), MatrixKind::Laplacian);
  CHECK(dumbbell == std::vector<Monomial>{{2, 20}, {2, 19}, {-1, 16}});
  // Pin: exact top term of d(3,4,1).
  CHECK(residual(FamilySpec::dumbbell(3, 4, 1), MatrixKind::Laplacian).leading == Monomial{2, 19});
}

TEST_CASE("family members and injectivity") {
  CHECK(canonical_family_members(FamilySpec::Tag::Dumbbell, 8) ==
        std::vector<FamilySpec>{FamilySpec::dumbbell(3, 3, 2), FamilySpec::dumbbell(3, 4, 1),
                                FamilySpec::dumbbell(3, 5, 0), FamilySpec::dumbbell(4, 4, 0)});
  CHECK(canonical_family_members(FamilySpec::Tag::Dumbbell, 8, false).size() == 2);
  CHECK(canonical_family_members(FamilySpec::Tag::Theta, 5) ==
        std::vector<FamilySpec>{FamilySpec::theta(0, 1, 2), FamilySpec::theta(1, 1, 1)});
  CHECK(family_injectivity_check(FamilySpec::Tag::Dumbbell, 8, MatrixKind::Laplacian));
  CHECK(family_injectivity_check(FamilySpec::Tag::Theta, 7, MatrixKind::SignlessLaplacian));
  CHECK(family_injectivity_check(FamilySpec::Tag::Theta, 5, MatrixKind::Laplacian));
  for (std::size_t n = 6; n <= 12; ++n) {
    for (MatrixKind kind : kKinds) {
      CHECK(family_injectivity_check(FamilySpec::Tag::Dumbbell, n, kind));
      CHECK(family_injectivity_check(FamilySpec::Tag::Theta, n, kind));
    }
  }
  CHECK_THROWS_AS(canonical_family_members(FamilySpec::Tag::Cycle, 5), UnsupportedFamily);
}

TEST_CASE("verification sweeps have the documented extent") {
  CHECK(dumbbell_sweep().size() == 15 * 6);
  for (const auto& s : theta_sweep()) {
    const auto [p, q, r] = s.params;
    CHECK(p <= q);
    CHECK(q <= r);
    CHECK(p + q + r <= 12);
    CHECK_NOTHROW(s.validate());
  }
}
