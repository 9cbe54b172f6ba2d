#include <random>

#include "doctest.h"
#include "hecke/spherical.hpp"
#include "oracles.hpp"

using namespace hecke;

namespace {

const LaurentPoly X = LaurentPoly::variable();

// Coefficient of [u] in [s_i] ⋆ Σ c(w)[w], written out from the two-case rule
// with lengths taken from the Cayley-graph distances.
template <class S, class C>
S generator_image_coefficient(int i, const ExtendedWeylElement& u, const S& q1, C&& c,
                              const std::unordered_map<AffinePermutation, int>& dist) {
  const ExtendedWeylElement su = generator(u.rank(), i) * u;
  const bool su_shorter = dist.at(su.w0()) < dist.at(u.w0());
  if (su_shorter) return c(su) + (q1 - S(1)) * c(u);
  return q1 * c(su);
}

}  // namespace

TEST_CASE("psi0 coefficients") {
  const auto p = generic_q1_params(3);
  CHECK(psi0_coefficient(ExtendedWeylElement::identity(3), p) == LaurentPoly(1));
  CHECK(psi0_coefficient(generator(3, 1), p) == -X.inverse());
  const auto x = pi_element(3) * generator(3, 1) * generator(3, 2);
  CHECK(oracle::cayley_distances(3, 3).at(x.w0()) == 2);
  CHECK(psi0_coefficient(x, p) == X.pow(-2));
  const auto ps = symbolic_chi_params(3, Rational(4));
  CHECK(psi0_coefficient(pi_power(3, 2) * generator(3, 0), ps) == LaurentPoly::monomial(Rational(-1, 4), -2));
}

TEST_CASE("generator eigen-equation against the two-case oracle") {
  for (int e = 2; e <= 3; ++e) {
    const int L = e == 2 ? 6 : 5;
    const auto dist = oracle::cayley_distances(e, L + 1);
    const auto p = generic_q1_params(e);
    auto c = [&](const ExtendedWeylElement& w) {
      return pow(-inverse(p.q1), dist.at(w.w0())) * pow(p.chi_pi, -w.k());
    };
    for (int i = 0; i < e; ++i) {
      for (const auto& [w0, d] : dist) {
        if (d > L - 1) continue;
        for (std::int64_t k = -1; k <= 1; ++k) {
          const ExtendedWeylElement u(k, w0);
          CHECK(generator_image_coefficient<LaurentPoly>(i, u, p.q1, c, dist) == -c(u));
        }
      }
      const auto rep = verify_eigen_generator(i, L, p);
      CHECK(rep.ok());
      CHECK(rep.checked > 0);
      CHECK(rep.boundary_skipped > 0);
    }
  }
  const auto rep = verify_eigen_generator(1, 6, generic_q1_params(2));
  CHECK(rep.ok());
  CHECK_THROWS_AS(verify_eigen_generator(1, 0, generic_q1_params(2)), std::invalid_argument);
}

TEST_CASE("length-one coefficient by hand") {
  // At u = s_i: [s_i]·[1] contributes c(1) = 1, [s_i]·[s_i] contributes
  // (q1 - 1)·(-1/q1); the sum is 1/q1 = -c(s_i).
  const auto p = generic_q1_params(3);
  const LaurentPoly lhs = LaurentPoly(1) + (X - LaurentPoly(1)) * (-X.inverse());
  CHECK(lhs == -psi0_coefficient(generator(3, 2), p));
}

TEST_CASE("Pi eigen-equation") {
  for (int e = 2; e <= 3; ++e) {
    for (int dir : {1, -1}) {
      CHECK(verify_eigen_pi(5, generic_q1_params(e), 2, dir).ok());
      CHECK(verify_eigen_pi(5, generic_q1_params(e, Rational(-3, 5)), 2, dir).ok());
      CHECK(verify_eigen_pi(5, symbolic_chi_params(e, Rational(7)), 2, dir).ok());
    }
  }
  // Oracle: coefficient of [u] in [Π]Ψ is c(Π⁻¹u).
  const auto p = symbolic_chi_params(3, Rational(5));
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = oracle::random_element(3, 6, rng);
    CHECK(psi0_coefficient(inverse(pi_element(3)) * u, p) == X * psi0_coefficient(u, p));
  }
  CHECK_THROWS_AS(verify_eigen_pi(3, generic_q1_params(2), 2, 2), std::invalid_argument);
}

TEST_CASE("two-sided form") {
  CHECK(verify_two_sided(4, generic_q1_params(3)).ok());
  CHECK(verify_two_sided(4, symbolic_chi_params(2, Rational(3))).ok());
}

TEST_CASE("recurrence forces the coefficients") {
  for (int e = 2; e <= 4; ++e) {
    const auto p = generic_q1_params(e);
    const auto sol = solve_eigen_recurrence(5, p);
    CHECK(sol.consistent);
    for (const auto& [w0, c] : sol.coefficients) CHECK(c == psi0_coefficient(ExtendedWeylElement(0, w0), p));
  }
}

TEST_CASE("matrix coefficient") {
  SphericalParams sp{3, 2, Rational(2)};
  CHECK(matrix_coefficient_scalar(generator(3, 1).w0(), 0, sp) == Rational(-1, 64));
  CHECK(matrix_coefficient_scalar(AffinePermutation::identity(3), 2, sp) == Rational(1));
  // f = 1 gives exactly the Ψ0 coefficient at q1 = q0².
  SphericalParams sp1{5, 1, Rational(3)};
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = oracle::random_element(5, 6, rng);
    CHECK(matrix_coefficient_scalar(x.w0(), x.k(), sp1) == psi0_coefficient(ExtendedWeylElement(0, x.w0()), sp1.psi()));
  }
  SphericalParams bad = sp;
  bad.chi_pi = Rational(2);
  CHECK_THROWS_AS(matrix_coefficient_scalar(AffinePermutation::identity(3), 0, bad), RequiresTrivialChiPi);
}

TEST_CASE("support") {
  const SphericalParams sp{3, 1, Rational(2)};
  CHECK(support_check(DoubleCosetIndex{generator(3, 1)}));
  CHECK_FALSE(support_check(DoubleCosetIndex{OutsideSupport{}}));
  CHECK(coefficient_at(OutsideSupport{}, sp) == Rational(0));
  CHECK(coefficient_at(pi_element(3) * generator(3, 1), sp) == Rational(-1, 4));
}

TEST_CASE("parameter validation") {
  CHECK(is_prime_power(Rational(8)));
  CHECK(is_prime_power(Rational(9)));
  CHECK_FALSE(is_prime_power(Rational(6)));
  CHECK_FALSE(is_prime_power(Rational(1)));
  CHECK_FALSE(is_prime_power(Rational(1, 2)));
  CHECK_NOTHROW(SphericalParams{3, 1, Rational(4)}.validate());
  CHECK_THROWS_AS((SphericalParams{3, 1, Rational(6)}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((SphericalParams{3, 0, Rational(2)}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((SphericalParams{1, 1, Rational(2)}.validate()), std::invalid_argument);
}
