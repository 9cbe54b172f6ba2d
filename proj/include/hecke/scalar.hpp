#pragma once

// The coefficient rings the algebra code is generic over: Rational (numeric
// mode, q1 specialised to a number) and LaurentPoly (generic mode, q1 an
// indeterminate).

#include <concepts>

#include "hecke/laurent.hpp"
#include "hecke/rational.hpp"

namespace hecke {

template <class S>
concept ExactScalar = std::regular<S> && requires(const S a, const S b, long n) {
  { S(0) };
  { S(1) };
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { inverse(a) } -> std::convertible_to<S>;
  { pow(a, n) } -> std::convertible_to<S>;
  { is_zero(a) } -> std::convertible_to<bool>;
};

static_assert(ExactScalar<Rational>);
static_assert(ExactScalar<LaurentPoly>);

/// (-1)^n as a scalar.
template <ExactScalar S>
S sign_power(long n) {
  return (n % 2 == 0) ? S(1) : S(-1);
}

}  // namespace hecke
