#pragma once

// Place-permutation operators on X = X0^{⊗e}.
//
// A PlaceOperator (σ, c) sends v_1 ⊗ ... ⊗ v_e to c times the tensor whose
// slot σ(j) holds v_j. With this convention (σ, c) ∘ (τ, d) = (σ∘τ, c·d).
//
//   t_i  (1 ≤ i ≤ e-1) exchanges slots i and i+1
//   t_0  exchanges slots 1 and e
//   Γ    moves every slot one step right: v_1⊗...⊗v_e ↦ v_e⊗v_1⊗...⊗v_{e-1}
//
// Γ is the value of the dual Hecke generator at Π⁻¹, so Π acts through Γ⁻¹:
// t_0 = Γ⁻¹ t_1 Γ.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "hecke/affine_weyl.hpp"
#include "hecke/rational.hpp"
#include "hecke/spherical.hpp"

namespace hecke {

struct PlaceOperator {
  FinitePermutation perm;  // 1-based images
  Rational scale{1};

  int rank() const { return static_cast<int>(perm.size()); }
  static PlaceOperator identity(int e);
  PlaceOperator inverse() const;
  friend PlaceOperator operator*(const PlaceOperator& a, const PlaceOperator& b);
  friend bool operator==(const PlaceOperator&, const PlaceOperator&) = default;
};

PlaceOperator t_operator(int i, int e);
PlaceOperator gamma_operator(int e);

/// Ev(Π^k w0) = (ω(-1) q^{-f(f-1)/2})^{l(w0)} · Γ^{-k} ∘ t_{i1} ∘ ... ∘ t_{il}
/// along the canonical reduced word of w0.
PlaceOperator ev(const ExtendedWeylElement& w, const SphericalParams& p);
/// The same along an explicit word for the W0 part (assumed reduced).
PlaceOperator ev_word(int e, std::int64_t k, const Word& word, const SphericalParams& p);

/// Default bound on d^e for dense tensors.
inline constexpr std::size_t kTensorCap = 4096;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense coordinates of an element of (Q^d)^{⊗e}; index digits are slots,
/// slot 1 most significant.
class TensorVector {
 public:
  TensorVector(int e, int d, std::size_t cap = kTensorCap);
  /// factor ⊗ ... ⊗ factor (e copies).
  static TensorVector pure_power(const std::vector<Rational>& factor, int e, std::size_t cap = kTensorCap);
  /// factors[0] ⊗ ... ⊗ factors[e-1].
  static TensorVector pure(const std::vector<std::vector<Rational>>& factors, std::size_t cap = kTensorCap);

  int rank() const { return e_; }
  int slot_dim() const { return d_; }
  std::size_t size() const { return data_.size(); }
  const std::vector<Rational>& data() const { return data_; }
  Rational& operator[](std::size_t i) { return data_[i]; }
  const Rational& operator[](std::size_t i) const { return data_[i]; }
  friend bool operator==(const TensorVector&, const TensorVector&) = default;

 private:
  int e_;
  int d_;
  std::vector<Rational> data_;
};

/// Full coordinate contraction Σ_I v[I]·ṽ[I].
Rational pair(const TensorVector& v, const TensorVector& vt);
TensorVector apply(const PlaceOperator& op, const TensorVector& v);
/// Reference implementation of apply without the OpenMP loop.
TensorVector apply_serial(const PlaceOperator& op, const TensorVector& v);

}  // namespace hecke
