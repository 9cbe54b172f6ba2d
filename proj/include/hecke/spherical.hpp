#pragma once

// The zonal spherical function
//
//   Ψ0 = Σ_{w ∈ W0, k ∈ Z} (-1/q1)^{l(w)} χ(Π)^{-k} [Π]^k [w]
//
// in the scalar model, the checks of its eigen-equation φ ⋆ Ψ0 = χ(φ) Ψ0 on
// finite truncations, and the explicit matrix coefficient values.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hecke/affine_weyl.hpp"
#include "hecke/hecke_algebra.hpp"
#include "hecke/rational.hpp"
#include "hecke/scalar.hpp"

namespace hecke {

class RequiresTrivialChiPi : public std::domain_error {
 public:
  RequiresTrivialChiPi()
      : std::domain_error("RequiresTrivialChiPi: the matrix coefficient formula needs chi_pi = 1") {}
};

/// Parameters of the coefficient rule of Ψ0 over a scalar ring S.
template <ExactScalar S>
struct PsiParams {
  int e = 2;
  S q1 = S(1);
  S chi_pi = S(1);
};

/// q1 is the indeterminate X, χ(Π) a fixed rational unit.
PsiParams<LaurentPoly> generic_q1_params(int e, const Rational& chi_pi = Rational(1));
/// χ(Π) is the indeterminate X, q1 a fixed rational.
PsiParams<LaurentPoly> symbolic_chi_params(int e, const Rational& q1);

/// Numeric parameters: q = q0², q1 = q^f.
struct SphericalParams {
  int e = 3;
  int f = 1;
  Rational q0{2};
  Rational chi_pi{1};
  /// ω(-1); the distinguished case has ω(-1) = 1.
  Rational omega_minus_one{1};

  Rational q() const { return q0 * q0; }
  Rational q1() const { return q().pow(f); }
  /// q^{f(f-1)/2} = q0^{f(f-1)}.
  Rational q_half_block() const { return q0.pow(static_cast<long>(f) * (f - 1)); }
  PsiParams<Rational> psi() const { return {e, q1(), chi_pi}; }
  /// Throws std::invalid_argument unless e ≥ 2, f ≥ 1, q0 a prime power and
  /// chi_pi, ω(-1) units.
  void validate() const;
};

bool is_prime_power(const Rational& q);

/// (-1/q1)^{l(w0)} · χ(Π)^{-k} at w = Π^k w0.
template <ExactScalar S>
S psi0_coefficient(const ExtendedWeylElement& w, const PsiParams<S>& p) {
  return pow(-inverse(p.q1), length(w)) * pow(p.chi_pi, -w.k());
}

/// Ψ0 restricted to {Π^k w0 : |k| ≤ K, l(w0) ≤ L}.
template <ExactScalar S>
HeckeElement<S> psi0_truncation(const PsiParams<S>& p, const Layers& layers, int K) {
  HeckeElement<S> out(p.e);
  for (const auto& layer : layers)
    for (const auto& w0 : layer)
      for (std::int64_t k = -K; k <= K; ++k) {
        ExtendedWeylElement w(k, w0);
        out.add_term(w, psi0_coefficient(w, p));
      }
  return out;
}

/// The same truncation written as Σ c_{w,k} [w][Π]^k, evaluated by products.
template <ExactScalar S>
HeckeElement<S> psi0_truncation_right_form(const PsiParams<S>& p, const Layers& layers, int K) {
  const HeckeAlgebra<S> alg(p.e, p.q1);
  HeckeElement<S> out(p.e);
  for (const auto& layer : layers)
    for (const auto& w0 : layer)
      for (std::int64_t k = -K; k <= K; ++k) {
        const ExtendedWeylElement w(0, w0);
        const S c = pow(-inverse(p.q1), w0.length()) * pow(p.chi_pi, -k);
        out += c * alg.product(alg.basis(w), alg.pi(k));
      }
  return out;
}

struct EigenReport {
  std::string op;  // "s_i", "Pi", "Pi^-1", "two-sided"
  int checked = 0;
  int passed = 0;
  int boundary_skipped = 0;
  std::vector<std::string> failures;
  bool ok() const { return passed == checked && failures.empty(); }
};

/// Checks [s_i] ⋆ Ψ0 = -Ψ0 coefficientwise at every Π^k w0 with |k| ≤ K and
/// l(w0) ≤ L-1. Indices of length L are counted as boundary_skipped.
template <ExactScalar S>
EigenReport verify_eigen_generator(int i, int L, const PsiParams<S>& p, int K = 1) {
  if (L < 1) throw std::invalid_argument("verify_eigen_generator: L must be >= 1");
  const Layers layers = enumerate_by_length(p.e, L);
  const HeckeAlgebra<S> alg(p.e, p.q1);
  const HeckeElement<S> psi = psi0_truncation(p, layers, K);
  const HeckeElement<S> lhs = alg.left_multiply_generator(i, psi);

  EigenReport rep;
  rep.op = "s_" + std::to_string(i);
  for (const auto& [u, c] : psi.terms()) {
    if (length(u) >= L) {
      ++rep.boundary_skipped;
      continue;
    }
    ++rep.checked;
    if (lhs.coefficient(u) == -c) ++rep.passed;
    else rep.failures.push_back(u.to_string());
  }
  return rep;
}

/// Checks [Π]^d ⋆ Ψ0 = χ(Π)^d Ψ0 (d = ±1) at every index with |k| ≤ K-1.
template <ExactScalar S>
EigenReport verify_eigen_pi(int L, const PsiParams<S>& p, int K = 2, int direction = 1) {
  if (direction != 1 && direction != -1) throw std::invalid_argument("verify_eigen_pi: direction must be +-1");
  if (K < 1) throw std::invalid_argument("verify_eigen_pi: K must be >= 1");
  const Layers layers = enumerate_by_length(p.e, L);
  const HeckeAlgebra<S> alg(p.e, p.q1);
  const HeckeElement<S> psi = psi0_truncation(p, layers, K);
  const HeckeElement<S> lhs = alg.product(alg.pi(direction), psi);
  const S factor = pow(p.chi_pi, direction);

  EigenReport rep;
  rep.op = direction == 1 ? "Pi" : "Pi^-1";
  for (const auto& [u, c] : psi.terms()) {
    if (u.k() > K - 1 || u.k() < -(K - 1)) {
      ++rep.boundary_skipped;
      continue;
    }
    ++rep.checked;
    if (lhs.coefficient(u) == factor * c) ++rep.passed;
    else rep.failures.push_back(u.to_string());
  }
  return rep;
}

/// Compares the left form Σ c [Π]^k[w] with the right form Σ c [w][Π]^k.
template <ExactScalar S>
EigenReport verify_two_sided(int L, const PsiParams<S>& p, int K = 1) {
  const Layers layers = enumerate_by_length(p.e, L);
  const HeckeElement<S> left = psi0_truncation(p, layers, K);
  const HeckeElement<S> right = psi0_truncation_right_form(p, layers, K);
  EigenReport rep;
  rep.op = "two-sided";
  for (const auto& [u, c] : left.terms()) {
    ++rep.checked;
    if (right.coefficient(u) == c) ++rep.passed;
    else rep.failures.push_back(u.to_string());
  }
  for (const auto& [u, c] : right.terms())
    if (left.coefficient(u) != c) {
      ++rep.checked;
      rep.failures.push_back("extra " + u.to_string());
    }
  return rep;
}

template <ExactScalar S>
struct RecurrenceSolution {
  std::map<AffinePermutation, S> coefficients;  // on W0, lengths ≤ L
  bool consistent = true;
};

/// Solves the generator eigen-identities forward from c(1) = 1: for every
/// left descent s_i of x, the coefficient of [x] in [s_i] ⋆ Ψ equals
/// c(s_i x) + (q1 - 1) c(x), and setting this to -c(x) forces
/// c(x) = -c(s_i x) / q1. All descents must give the same value.
template <ExactScalar S>
RecurrenceSolution<S> solve_eigen_recurrence(int L, const PsiParams<S>& p) {
  const Layers layers = enumerate_by_length(p.e, L);
  std::vector<AffinePermutation> gens;
  for (int i = 0; i < p.e; ++i) gens.push_back(generator(p.e, i).w0());
  RecurrenceSolution<S> sol;
  sol.coefficients.emplace(layers[0][0], S(1));
  const S step = -inverse(p.q1);
  for (std::size_t ell = 1; ell < layers.size(); ++ell) {
    for (const auto& x : layers[ell]) {
      bool have = false;
      S value(0);
      for (int i = 0; i < p.e; ++i) {
        if (!x.has_left_descent(i)) continue;
        const S candidate = step * sol.coefficients.at(gens[i] * x);
        if (!have) {
          value = candidate;
          have = true;
        } else if (!(candidate == value)) {
          sol.consistent = false;
        }
      }
      sol.coefficients.emplace(x, value);
    }
  }
  return sol;
}

/// c_{v,ṽ}(w0 Π^k) / ⟨v, ṽ⟩ = (-1/q1)^{l(w0)} · q^{-f(f-1)/2 · l(w0)}.
/// Throws RequiresTrivialChiPi unless chi_pi = 1.
Rational matrix_coefficient_scalar(const AffinePermutation& w0, std::int64_t k, const SphericalParams& p);

/// A double coset index: J w J for w ∈ W, or a point outside J W J.
struct OutsideSupport {};
using DoubleCosetIndex = std::variant<ExtendedWeylElement, OutsideSupport>;

/// True when the matrix coefficient may be nonzero there (the point lies in J W J).
bool support_check(const DoubleCosetIndex& g);
/// Normalised matrix coefficient at g; 0 outside J W J.
Rational coefficient_at(const DoubleCosetIndex& g, const SphericalParams& p);

}  // namespace hecke
