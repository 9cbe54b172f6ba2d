#pragma once

// The distinction integral as a double-coset sum:
//
//   ∫_{G0/F0^×} c_{v,ṽ} = Σ_{k=0}^{e-1} Σ_{w0 ∈ W0} μ(J0 w0 Π^k J0) c_{v,ṽ}(w0 Π^k)
//                       = e ⟨v,ṽ⟩ P_{W0}(-1/q0^f),
//
// with μ(J0) = 1, together with the Poincaré series of W0 (breadth-first
// counts and the closed product formula).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hecke/affine_weyl.hpp"
#include "hecke/laurent.hpp"
#include "hecke/rational.hpp"

namespace hecke {

class RequiresOddE : public std::domain_error {
 public:
  RequiresOddE() : std::domain_error("RequiresOddE: the distinction integral is computed for odd e only") {}
};

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// μ_{G0}(J0 w0 Π^k J0) = q0^{f² l(w0)}; independent of k.
Rational coset_measure(const AffinePermutation& w0, std::int64_t k, int f, const Rational& q0);

/// μ(J0 w0 J0) · c_{v,ṽ}(w0) / ⟨v,ṽ⟩, which reduces to (-1/q0^f)^{l(w0)}.
Rational per_term_value(const AffinePermutation& w0, int f, const Rational& q0);

enum class Provenance { BFS, ClosedForm };

struct GrowthSeries {
  int e = 0;
  std::vector<std::uint64_t> counts;  // N(0..L)
  Provenance provenance = Provenance::BFS;
};

GrowthSeries growth_bfs(int e, int L);
GrowthSeries growth_closed_form(int e, int L);

/// numerator / denominator, both polynomials in X.
struct RationalFunction {
  LaurentPoly numerator;
  LaurentPoly denominator;
  /// Throws PoleError where the denominator vanishes.
  Rational evaluate(const Rational& x) const;
  /// First n+1 Maclaurin coefficients. Requires denominator(0) ≠ 0.
  std::vector<Rational> maclaurin(int n) const;
};

/// Π_{i=1}^{e-1} (1 - X^{i+1}) / ((1 - X)(1 - X^i)) in lowest terms, which is
/// (1 + X + ... + X^{e-1}) / (1 - X)^{e-1}.
RationalFunction poincare_closed_form(int e);

/// Exact value of the closed form at x, -1 < x < 1.
Rational poincare_value(int e, const Rational& x);

/// P(x) - Σ_{ℓ ≤ L} N(ℓ) x^ℓ, exact.
Rational poincare_tail(int e, const Rational& x, int L);

struct IntegralReport {
  int e = 0;
  int f = 0;
  Rational q0;
  Rational chi_pi{1};
  int L = 0;
  Rational partial_sum;   // normalised by ⟨v, ṽ⟩
  Rational closed_form;   // e · P(-1/q0^f)
  Rational abs_error;     // |partial_sum - closed_form|
  Rational tail_bound;    // e · Σ_{ℓ > L} N(ℓ) q0^{-fℓ}
  bool per_term_ok = false;
  std::uint64_t terms = 0;  // double cosets summed (all k)
  bool within_tail_bound() const { return abs_error <= tail_bound; }
};

/// Throws RequiresOddE for even e.
IntegralReport distinction_integral(int e, int f, const Rational& q0, int L);
/// Reference implementation of the same sum, single-threaded.
IntegralReport distinction_integral_serial(int e, int f, const Rational& q0, int L);

/// Σ_{l(w0) ≤ L} per_term_value(w0) for k = 0 alone.
Rational k_zero_sum(int e, int f, const Rational& q0, int L);

struct NonvanishingSample {
  Rational x;
  Rational value;
  bool positive = false;
};

struct NonvanishingReport {
  int e = 0;
  std::vector<NonvanishingSample> samples;
  bool all_positive() const {
    for (const auto& s : samples)
      if (!s.positive) return false;
    return true;
  }
};

/// Evaluates P_{W0} at each sample in (-1, 1).
NonvanishingReport nonvanishing_scan(int e, const std::vector<Rational>& samples);

}  // namespace hecke
