#pragma once

// Finite-group check of the pairing statement: if (H, K) is a Gelfand pair and an
// irreducible V has a K-fixed line in V and in its dual, the natural pairing
// of the two fixed generators is nonzero.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  /// Gauss-Jordan; throws NonInvertible for singular or non-square input.
  RationalMatrix inverse() const;
  std::size_t rank() const;
  /// Basis of {x : A x = 0}.
  std::vector<RationalVector> nullspace() const;
  RationalVector apply(const RationalVector& v) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& c, const RationalMatrix& a);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// A representation of a small finite group, listed element by element,
/// with a distinguished subgroup K given by element indices.
struct FiniteRep {
  std::string group;
  std::string name;
  std::size_t dim = 0;
  std::vector<RationalMatrix> elements;
  std::vector<std::size_t> subgroup;
  bool gelfand_pair_declared = false;

  /// Closure, identity and invertibility; also that K is closed. Throws
  /// std::invalid_argument with the first problem found.
  void validate() const;
  std::vector<RationalMatrix> subgroup_matrices() const;
};

/// ρ*(g) = (ρ(g)⁻¹)ᵀ on the dual space, same subgroup indices.
FiniteRep dual(const FiniteRep& rep);

/// (1/|K|) Σ_{k ∈ K} ρ(k).
RationalMatrix averaging_projector(const std::vector<RationalMatrix>& k_elements);
/// Basis of V^K = ker(I - P) for the averaging projector P.
std::vector<RationalVector> fixed_space(const FiniteRep& rep, const std::vector<RationalMatrix>& k_elements);
inline std::vector<RationalVector> fixed_space(const FiniteRep& rep) {
  return fixed_space(rep, rep.subgroup_matrices());
}

/// dim_Q {A : A ρ(g) = ρ(g) A for all g}.
std::size_t commutant_dimension(const FiniteRep& rep);

Rational natural_pairing(const RationalVector& v, const RationalVector& vt);

struct GelfandReport {
  std::string group;
  std::string name;
  std::size_t dim_fixed_V = 0;
  std::size_t dim_fixed_Vdual = 0;
  std::size_t commutant_dim = 0;
  bool irreducible = false;
  bool gelfand_multiplicity_ok = false;  // both fixed spaces are lines
  std::optional<Rational> pairing;       // only when both dims are 1
  bool pairing_nonzero() const { return pairing.has_value() && !pairing->is_zero(); }
};

GelfandReport check_pairing(const FiniteRep& rep);

/// Representations of S_n (n ≤ 5) with K = S_{n-1}, the stabiliser of n.
/// kind ∈ {"trivial", "sign", "standard"}; standard acts on {x : Σ x_i = 0}
/// in the basis e_i - e_n.
FiniteRep symmetric_group_rep(int n, const std::string& kind);
/// The 2-dimensional rational representation of the dihedral group of order
/// 2m, m ∈ {3, 4, 6}, with K generated by one reflection.
FiniteRep dihedral_group_rep(int m);

/// The shipped pairs: (S3,S2) and (S4,S3) standard, (S5,S4) standard,
/// (D4, reflection) and the sign representation of S3.
std::vector<FiniteRep> shipped_catalog();

/// JSON catalog entries (see data/gelfand/*.json).
FiniteRep load_finite_rep(const std::string& path);
std::string finite_rep_to_json(const FiniteRep& rep);

}  // namespace hecke
