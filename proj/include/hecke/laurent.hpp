#pragma once

// Single-variable Laurent polynomials with rational coefficients. The
// variable is usually read as q1, the Hecke parameter, but nothing here
// depends on that reading.

#include <map>
#include <ostream>
#include <string>

#include "hecke/rational.hpp"

namespace hecke {

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(const Rational& c);                    // NOLINT(google-explicit-constructor)

  /// The indeterminate X.
  static LaurentPoly variable() { return monomial(Rational(1), 1); }
  static LaurentPoly monomial(const Rational& c, int exponent);

  const std::map<int, Rational>& coefficients() const { return terms_; }
  Rational coefficient(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  int min_exponent() const;
  int max_exponent() const;

  /// Exact substitution X := x. Throws if x = 0 and a negative power occurs.
  Rational evaluate(const Rational& x) const;

  /// Only monomials c·X^k with c ≠ 0 are units.
  LaurentPoly inverse() const;
  LaurentPoly pow(long n) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// e.g. "-1/2*X^-3 + X + 4".
  std::string to_string(const std::string& var = "X") const;

 private:
  void add_term(int exponent, const Rational& c);
  std::map<int, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

inline LaurentPoly inverse(const LaurentPoly& p) { return p.inverse(); }
inline LaurentPoly pow(const LaurentPoly& p, long n) { return p.pow(n); }
inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

}  // namespace hecke
