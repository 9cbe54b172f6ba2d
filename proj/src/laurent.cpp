#include "hecke/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace hecke {

LaurentPoly::LaurentPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

Rational LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("LaurentPoly: zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("LaurentPoly: zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Rational LaurentPoly::evaluate(const Rational& x) const {
  if (x.is_zero()) {
    if (!terms_.empty() && terms_.begin()->first < 0)
      throw std::domain_error("LaurentPoly::evaluate: negative power at 0");
    return coefficient(0);
  }
  Rational acc;
  for (const auto& [k, c] : terms_) acc += c * x.pow(k);
  return acc;
}

LaurentPoly LaurentPoly::inverse() const {
  if (!is_monomial()) throw NonInvertible("Laurent polynomial '" + to_string() + "' is not a monomial");
  const auto& [k, c] = *terms_.begin();
  return monomial(c.inverse(), -k);
}

LaurentPoly LaurentPoly::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  LaurentPoly result(1), base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly out;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) out.add_term(a + b, ca * cb);
  *this = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out;
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    Rational mag = c.abs();
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const std::string coeff = mag.is_integer() ? mag.numerator() : mag.to_string();
    if (k == 0) {
      os << coeff;
      continue;
    }
    if (!mag.is_one()) os << coeff << "*";
    os << var;
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

}  // namespace hecke
