#pragma once

// The extended affine Weyl group W = Π^Z ⋉ W0 of type A, with W0 realised as
// affine permutations of Z in window notation.
//
// Conventions:
//  * An affine permutation w satisfies w(j + e) = w(j) + e and is stored by
//    its window [w(1), ..., w(e)]. Elements of W0 have Σ (w(j) - j) = 0.
//  * Products are composition of maps: (ab)(j) = a(b(j)).
//  * Π is the shift j ↦ j - 1, so that Π s_i Π⁻¹ = s_{i-1 mod e} and
//    s_0 = Π s_1 Π⁻¹ is the transposition exchanging 0 and 1.
//  * Every element of W is stored canonically as Π^k · w0 with w0 ∈ W0.
//  * Words are read left to right: {i1, ..., il} means s_{i1} ··· s_{il}.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hecke {

class AffinePermutation {
 public:
  /// Identity of rank e. Throws std::invalid_argument for e < 2.
  static AffinePermutation identity(int e);
  /// Validates periodic bijectivity and the zero shift sum.
  static AffinePermutation from_window(std::vector<std::int64_t> window);

  int rank() const { return static_cast<int>(window_.size()); }
  std::span<const std::int64_t> window() const { return window_; }
  /// w(j) for any integer j.
  std::int64_t operator()(std::int64_t j) const;

  bool is_identity() const;
  AffinePermutation inverse() const;
  /// Π^{-b} · this · Π^{b}.
  AffinePermutation pi_conjugate(std::int64_t b) const;
  /// Coxeter length with respect to {s_0, ..., s_{e-1}}, by counting affine
  /// inversions.
  int length() const;
  /// True when length(s_i · this) < length(this).
  bool has_left_descent(int i) const;

  friend AffinePermutation operator*(const AffinePermutation& a, const AffinePermutation& b);
  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;
  friend auto operator<=>(const AffinePermutation& a, const AffinePermutation& b) {
    return a.window_ <=> b.window_;
  }

  std::size_t hash() const;

 private:
  explicit AffinePermutation(std::vector<std::int64_t> w) : window_(std::move(w)) {}
  std::vector<std::int64_t> window_;
};

class ExtendedWeylElement {
 public:
  ExtendedWeylElement(std::int64_t k, AffinePermutation w0) : k_(k), w0_(std::move(w0)) {}

  static ExtendedWeylElement identity(int e) { return {0, AffinePermutation::identity(e)}; }

  int rank() const { return w0_.rank(); }
  std::int64_t k() const { return k_; }
  const AffinePermutation& w0() const { return w0_; }
  bool is_identity() const { return k_ == 0 && w0_.is_identity(); }

  friend bool operator==(const ExtendedWeylElement&, const ExtendedWeylElement&) = default;
  friend auto operator<=>(const ExtendedWeylElement&, const ExtendedWeylElement&) = default;

  std::string to_string() const;

 private:
  std::int64_t k_;
  AffinePermutation w0_;
};

using Word = std::vector<int>;
/// A permutation of {1..e}, stored as 1-based images: perm[j-1] = σ(j).
using FinitePermutation = std::vector<int>;

/// s_i for 0 ≤ i ≤ e-1. Throws std::out_of_range otherwise.
ExtendedWeylElement generator(int e, int i);
ExtendedWeylElement pi_element(int e);
/// Π^k.
ExtendedWeylElement pi_power(int e, std::int64_t k);

/// Throws std::invalid_argument on rank mismatch.
ExtendedWeylElement multiply(const ExtendedWeylElement& a, const ExtendedWeylElement& b);
ExtendedWeylElement inverse(const ExtendedWeylElement& a);
ExtendedWeylElement power(const ExtendedWeylElement& a, std::int64_t n);
inline ExtendedWeylElement operator*(const ExtendedWeylElement& a, const ExtendedWeylElement& b) {
  return multiply(a, b);
}

/// l(Π^k w0) = l(w0).
int length(const ExtendedWeylElement& a);
/// The product s_{i1} ··· s_{il} in W0.
ExtendedWeylElement word_to_element(int e, const Word& word);
/// A reduced word for the W0 part; the Π power is a.k().
Word reduced_word(const ExtendedWeylElement& a);
/// Every reduced word of the W0 part.
std::vector<Word> all_reduced_words(const ExtendedWeylElement& a);
/// True iff l(s_i a) = l(a) + 1.
bool is_length_increasing(int i, const ExtendedWeylElement& a);

/// Image in S_e: s_i ↦ (i i+1), s_0 ↦ (1 e), Π ↦ (j ↦ j-1 mod e).
FinitePermutation project_to_finite(const ExtendedWeylElement& a);
/// σ∘τ.
FinitePermutation compose(const FinitePermutation& sigma, const FinitePermutation& tau);

/// Thrown when an enumeration would exceed its element cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Layers = std::vector<std::vector<AffinePermutation>>;

/// Cap read from HECKE_MAX_ELEMS, defaulting to 5,000,000 elements.
std::size_t default_element_cap();

/// W0 grouped by length 0..L, by breadth-first search of the Cayley graph on
/// {s_0, ..., s_{e-1}}. Each layer is sorted. Uses OpenMP when available.
Layers enumerate_by_length(int e, int max_length, std::size_t cap = default_element_cap());
/// Single-threaded reference version of enumerate_by_length.
Layers enumerate_by_length_serial(int e, int max_length, std::size_t cap = default_element_cap());

}  // namespace hecke

template <>
struct std::hash<hecke::AffinePermutation> {
  std::size_t operator()(const hecke::AffinePermutation& w) const noexcept { return w.hash(); }
};
