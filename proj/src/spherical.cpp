#include "hecke/spherical.hpp"

namespace hecke {

PsiParams<LaurentPoly> generic_q1_params(int e, const Rational& chi_pi) {
  return {e, LaurentPoly::variable(), LaurentPoly(chi_pi)};
}

PsiParams<LaurentPoly> symbolic_chi_params(int e, const Rational& q1) {
  return {e, LaurentPoly(q1), LaurentPoly::variable()};
}

bool is_prime_power(const Rational& q) {
  if (!q.is_integer() || q.sign() <= 0) return false;
  mpz_class n(q.numerator());
  if (n < 2) return false;
  mpz_class p = 2;
  while (p * p <= n) {
    if (n % p == 0) break;
    ++p;
  }
  if (p * p > n) return true;  // n itself is prime
  while (n % p == 0) n /= p;
  return n == 1;
}

void SphericalParams::validate() const {
  if (e < 2) throw std::invalid_argument("e must be >= 2");
  if (f < 1) throw std::invalid_argument("f must be >= 1");
  if (!is_prime_power(q0)) throw std::invalid_argument("q0 must be a prime power >= 2, got " + q0.to_string());
  if (chi_pi.is_zero()) throw std::invalid_argument("chi_pi must be nonzero");
  if (omega_minus_one.is_zero()) throw std::invalid_argument("omega(-1) must be nonzero");
}

Rational matrix_coefficient_scalar(const AffinePermutation& w0, std::int64_t /*k*/, const SphericalParams& p) {
  if (!p.chi_pi.is_one()) throw RequiresTrivialChiPi();
  const long l = w0.length();
  return (-p.q1().inverse()).pow(l) * p.q_half_block().pow(-l);
}

bool support_check(const DoubleCosetIndex& g) { return std::holds_alternative<ExtendedWeylElement>(g); }

Rational coefficient_at(const DoubleCosetIndex& g, const SphericalParams& p) {
  if (const auto* w = std::get_if<ExtendedWeylElement>(&g)) {
    // Π^k w0 = (Π^k w0 Π^{-k}) Π^k, and conjugation by Π preserves length.
    const AffinePermutation conj = w->w0().pi_conjugate(-w->k());
    return matrix_coefficient_scalar(conj, w->k(), p);
  }
  return Rational(0);
}

}  // namespace hecke
