#pragma once

// Closed-form identities for Laplacian and signless Laplacian permanental
// polynomials, each evaluated as an executable check against the exact
// routes in permanent.hpp.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "lpp/algebra.hpp"
#include "lpp/decomposition.hpp"
#include "lpp/graph.hpp"
#include "lpp/permanent.hpp"

namespace lpp {

// How c_3(G_{v_i}) in the fourth-coefficient formula is read. Only
// ContainingVertex agrees with brute-force permanents; VertexDeleted is kept
// so the choice can be re-checked.
enum class C3VertexReading { ContainingVertex, VertexDeleted };

struct CoefficientReport {
  MatrixKind kind = MatrixKind::Laplacian;
  C3VertexReading reading = C3VertexReading::ContainingVertex;
  // Index i is the coefficient of x^{n-i}; i > n compares against 0.
  std::array<Rational, 5> formula;
  std::array<Integer, 5> computed;
  std::array<bool, 5> integral{};
  std::array<bool, 5> match{};

  bool all_match() const;
};

// Coefficient formulas p_0..p_4 (Laplacian) or q_0..q_4 (signless) from
// degree statistics and triangle/quadrilateral counts. `poly` may carry a
// precomputed permanental polynomial; otherwise it is computed.
CoefficientReport coeff_formulas(const Graph& g, MatrixKind kind,
                                 C3VertexReading reading = C3VertexReading::ContainingVertex,
                                 const std::optional<IntPoly>& poly = std::nullopt);

struct RecoveredInvariants {
  std::size_t n = 0;
  Integer m;
  Integer sum_d2;
  // sum d_i^3 - 6 c_3 for the Laplacian, sum d_i^3 + 6 c_3 for the signless kind.
  Integer cubic_combination;
};

// Inverts the first four coefficient formulas. Throws NonIntegralInversion
// when the polynomial cannot come from a graph (non-monic, odd or positive
// x^{n-1} coefficient, negative or odd degree-square sum).
RecoveredInvariants recoverable_invariants(const IntPoly& poly, MatrixKind kind);

enum class PathlikeTag { P, B, U, C };

struct PathlikeSides {
  LaurentPoly lhs;  // clearing factor * pi(y)
  LaurentPoly rhs;  // numerator of the closed form
};

// LHS: pi of L(P_n)/B_n/U_n/L(C_n) (or signless versions) substituted at
// x = y + 2 - 1/y and multiplied by y^n (y^2 + 1) (y^n for C).
// Throws InvalidN for n < 1 (n < 3 for C).
PathlikeSides pathlike_sides(PathlikeTag tag, MatrixKind kind, std::size_t n);
bool verify_pathlike_closed_form(PathlikeTag tag, MatrixKind kind, std::size_t n);

// Closed-form values of pi at y = 1 (x = 2) for paths, cycles, dumbbells and
// thetas. Throws UnsupportedFamily for other specs.
Integer y1_value(const FamilySpec& spec, MatrixKind kind);
// pi(B_n) and pi(U_n) (either kind) at y = 1.
Integer aux_y1_value(AuxTag tag, std::size_t n);

struct Monomial {
  Integer coeff;
  long exponent = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct ResidualReport {
  FamilySpec spec;
  MatrixKind kind = MatrixKind::Laplacian;
  std::size_t n = 0;
  LaurentPoly f;         // subtracted polynomial f(y)
  LaurentPoly residual;  // y^n (y^2 + 1)^3 pi(y) - f(y)
  Monomial leading;      // maximal-exponent term of the residual
  Integer value_at_one;  // residual at y = 1
};

// f(y) for dumbbell/theta specs and either kind. Throws UnsupportedFamily.
LaurentPoly residual_offset(const FamilySpec& spec, MatrixKind kind);
ResidualReport residual(const FamilySpec& spec, MatrixKind kind, const std::optional<IntPoly>& poly = std::nullopt);

// R(1) must equal 8 * pi(y = 1) - f(1) with pi(y = 1) the closed-form value.
bool residual_consistent_at_one(const ResidualReport& report);

// Candidate leading monomials of the residual as stated in the injectivity
// arguments for each family (dumbbell: three candidates, theta: six).
std::vector<Monomial> claimed_leading_candidates(const FamilySpec& spec, MatrixKind kind);

struct LeadingComparison {
  Monomial observed;
  Monomial claimed;  // like candidates at the maximal claimed exponent, summed
  bool exponent_matches = false;
  bool monomial_matches = false;
};

LeadingComparison compare_leading_terms(const ResidualReport& report);

// Canonical parameter tuples of a connected bicyclic family at n vertices:
// dumbbell p <= q (r >= 0, or r >= 1 without include_r0), theta p <= q <= r.
std::vector<FamilySpec> canonical_family_members(FamilySpec::Tag family, std::size_t n, bool include_r0 = true);

// True iff the family members at n have pairwise distinct polynomials.
bool family_injectivity_check(FamilySpec::Tag family, std::size_t n, MatrixKind kind, bool include_r0 = true,
                              unsigned threads = 1);

}  // namespace lpp
