#pragma once

// Exact rational numbers backed by GMP. Values are always stored reduced with a
// positive denominator; zero is 0/1.

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hecke {

/// Thrown when asked for the inverse of a non-unit.
class NonInvertible : public std::domain_error {
 public:
  explicit NonInvertible(const std::string& what)
      : std::domain_error("NonInvertible: " + what) {}
};

class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(n) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

  /// Parses "n", "n/d" or "-n/d". Throws std::invalid_argument on bad input.
  static Rational parse(std::string_view text);

  std::string numerator() const { return v_.get_num().get_str(); }
  std::string denominator() const { return v_.get_den().get_str(); }
  /// Always "num/den", including "0/1" and "3/1".
  std::string to_string() const;

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational inverse() const;
  Rational pow(long n) const;
  Rational abs() const { return Rational(mpq_class(::abs(v_))); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Lossy; only for human-readable summaries.
  double to_double() const { return v_.get_d(); }
  const mpq_class& raw() const { return v_; }

 private:
  mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational inverse(const Rational& r) { return r.inverse(); }
inline Rational pow(const Rational& r, long n) { return r.pow(n); }
inline bool is_zero(const Rational& r) { return r.is_zero(); }

}  // namespace hecke
