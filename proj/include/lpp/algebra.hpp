#pragma once

// Exact integer, rational, polynomial and Laurent-polynomial arithmetic.
//
// Integers and rationals are GMP values. IntPoly stores coefficients densely
// (index = power of x); LaurentPoly stores a sparse exponent -> coefficient
// map and never keeps a zero coefficient.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace lpp {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Integer from_int128(__int128 v);

class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t power);
  // x - a
  static IntPoly linear(const Integer& a);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  // Coefficient of x^power; zero beyond the degree.
  Integer coeff(std::size_t power) const;
  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

  Rational eval(const Rational& x) const;
  Integer eval(const Integer& x) const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const Integer& scalar);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& s) { return a *= s; }
  friend IntPoly operator-(IntPoly a);
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
Rational eval(const IntPoly& p, const Rational& x);

struct InterpolationPoint {
  Integer node;
  Integer value;
};

// Unique interpolant through the points. Throws DuplicateNode on repeated
// nodes and NonIntegralCoefficient when the interpolant leaves Z[x].
IntPoly lagrange_interpolate(std::span<const InterpolationPoint> points);

class LaurentPoly {
 public:
  using Terms = std::map<long, Integer>;

  LaurentPoly() = default;
  explicit LaurentPoly(Terms terms);
  LaurentPoly(std::initializer_list<std::pair<const long, Integer>> terms);

  static LaurentPoly monomial(const Integer& c, long exponent);

  bool is_zero() const noexcept { return terms_.empty(); }
  const Terms& terms() const noexcept { return terms_; }
  Integer coeff(long exponent) const;
  // Only meaningful when !is_zero().
  long max_exponent() const { return terms_.rbegin()->first; }
  long min_exponent() const { return terms_.begin()->first; }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

  // Multiply by y^k.
  LaurentPoly shifted(long k) const;
  Integer eval_at_one() const;
  // Throws std::domain_error for y = 0 when a negative exponent is present.
  Rational eval(const Rational& y) const;
  LaurentPoly pow(unsigned k) const;

  std::string to_string(char var = 'y') const;

 private:
  void add_term(long exponent, const Integer& c);
  Terms terms_;
};

LaurentPoly shift(const LaurentPoly& p, long k);
Integer eval_at_one(const LaurentPoly& p);

// p((y^2 + 2y - 1) / y), i.e. x = y + 2 - 1/y.
LaurentPoly substitute_xy(const IntPoly& p);

// Polynomial serialization: array of decimal strings, constant term first.
nlohmann::json to_json(const IntPoly& p);
IntPoly poly_from_json(const nlohmann::json& j);
std::vector<std::string> decimal_coefficients(const IntPoly& p);

}  // namespace lpp
