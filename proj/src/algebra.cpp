#include "lpp/algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lpp/error.hpp"

namespace lpp {

Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Integer from_int128(__int128 v) {
  const bool negative = v < 0;
  const auto mag = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  const Integer hi = static_cast<unsigned long>(mag >> 64);
  const Integer lo = static_cast<unsigned long>(mag & ~std::uint64_t{0});
  Integer out = (hi << 64) + lo;
  return negative ? Integer(-out) : out;
}

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t power) {
  std::vector<Integer> v(power + 1);
  v[power] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear(const Integer& a) { return IntPoly(std::vector<Integer>{-a, 1}); }

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Integer(0);
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + Rational(*it);
  }
  acc.canonicalize();
  return acc;
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& other) { return *this = *this * other; }

IntPoly& IntPoly::operator*=(const Integer& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

IntPoly operator-(IntPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || k == 0) os << mag.get_str();
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

IntPoly add(const IntPoly& a, const IntPoly& b) { return a + b; }
IntPoly mul(const IntPoly& a, const IntPoly& b) { return a * b; }
Rational eval(const IntPoly& p, const Rational& x) { return p.eval(x); }

// Newton divided differences over Q, then expansion of the Newton form into
// the monomial basis.
IntPoly lagrange_interpolate(std::span<const InterpolationPoint> points) {
  if (points.empty()) return {};
  std::set<Integer> seen;
  for (const auto& pt : points) {
    if (!seen.insert(pt.node).second) {
      throw DuplicateNode("duplicate interpolation node " + pt.node.get_str());
    }
  }
  const std::size_t n = points.size();
  std::vector<Rational> diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = Rational(points[i].value);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      diff[i] = (diff[i] - diff[i - 1]) / Rational(points[i].node - points[i - level].node);
      diff[i].canonicalize();
    }
  }
  // Horner on the Newton form: c_{n-1}, then acc = acc*(x - x_i) + c_i.
  std::vector<Rational> acc{diff[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    std::vector<Rational> next(acc.size() + 1);
    const Rational node(points[i].node);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      next[k + 1] += acc[k];
      next[k] -= acc[k] * node;
    }
    next[0] += diff[i];
    acc = std::move(next);
  }
  std::vector<Integer> coeffs(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) {
    acc[k].canonicalize();
    if (acc[k].get_den() != 1) {
      throw NonIntegralCoefficient("interpolated coefficient of x^" + std::to_string(k) +
                                   " is " + acc[k].get_str());
    }
    coeffs[k] = acc[k].get_num();
  }
  return IntPoly(std::move(coeffs));
}

// ------------------------------------------------------------ LaurentPoly

LaurentPoly::LaurentPoly(Terms terms) {
  for (auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const long, Integer>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, long exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

void LaurentPoly::add_term(long exponent, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer LaurentPoly::coeff(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (&other == this) {
    for (auto& [e, c] : terms_) c *= 2;
    return *this;
  }
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (&other == this) {
    terms_.clear();
    return *this;
  }
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) { return *this = *this * other; }

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

Integer LaurentPoly::eval_at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Rational LaurentPoly::eval(const Rational& y) const {
  if (y == 0) {
    if (!terms_.empty() && min_exponent() < 0) {
      throw std::domain_error("Laurent polynomial with negative exponents evaluated at 0");
    }
    return Rational(coeff(0));
  }
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class power;
    mpz_class num = y.get_num(), den = y.get_den();
    const unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), k);
    mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), k);
    power = e < 0 ? make_rational(pd, pn) : make_rational(pn, pd);
    acc += Rational(c) * power;
  }
  acc.canonicalize();
  return acc;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly out = monomial(1, 0);
  for (unsigned i = 0; i < k; ++i) out *= *this;
  return out;
}

std::string LaurentPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || e == 0) os << mag.get_str();
    if (e != 0) {
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPoly shift(const LaurentPoly& p, long k) { return p.shifted(k); }
Integer eval_at_one(const LaurentPoly& p) { return p.eval_at_one(); }

LaurentPoly substitute_xy(const IntPoly& p) {
  const LaurentPoly x{{1, Integer(1)}, {0, Integer(2)}, {-1, Integer(-1)}};
  LaurentPoly acc;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc *= x;
    acc += LaurentPoly::monomial(c[k], 0);
  }
  return acc;
}

nlohmann::json to_json(const IntPoly& p) { return decimal_coefficients(p); }

std::vector<std::string> decimal_coefficients(const IntPoly& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  if (out.empty()) out.emplace_back("0");
  return out;
}

IntPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be a JSON array of decimal strings");
  std::vector<Integer> coeffs;
  coeffs.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_string()) throw ParseError("polynomial coefficient must be a decimal string");
    Integer c;
    if (c.set_str(item.get<std::string>(), 10) != 0) {
      throw ParseError("invalid decimal coefficient '" + item.get<std::string>() + "'");
    }
    coeffs.push_back(std::move(c));
  }
  return IntPoly(std::move(coeffs));
}

}  // namespace lpp
