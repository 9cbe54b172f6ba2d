#include "hecke/tensor_ops.hpp"

#include <numeric>
#include <string>

namespace hecke {

PlaceOperator PlaceOperator::identity(int e) {
  PlaceOperator op;
  op.perm.resize(e);
  std::iota(op.perm.begin(), op.perm.end(), 1);
  return op;
}

PlaceOperator PlaceOperator::inverse() const {
  PlaceOperator op;
  op.perm.resize(perm.size());
  for (std::size_t j = 0; j < perm.size(); ++j) op.perm[perm[j] - 1] = static_cast<int>(j + 1);
  op.scale = scale.inverse();
  return op;
}

PlaceOperator operator*(const PlaceOperator& a, const PlaceOperator& b) {
  return {compose(a.perm, b.perm), a.scale * b.scale};
}

PlaceOperator t_operator(int i, int e) {
  if (e < 2) throw std::invalid_argument("t_operator: e must be >= 2");
  if (i < 0 || i >= e) throw std::out_of_range("t_operator: index " + std::to_string(i) + " out of range");
  PlaceOperator op = PlaceOperator::identity(e);
  const int a = i == 0 ? 1 : i;
  const int b = i == 0 ? e : i + 1;
  std::swap(op.perm[a - 1], op.perm[b - 1]);
  return op;
}

PlaceOperator gamma_operator(int e) {
  if (e < 2) throw std::invalid_argument("gamma_operator: e must be >= 2");
  PlaceOperator op;
  op.perm.resize(e);
  for (int j = 1; j <= e; ++j) op.perm[j - 1] = j % e + 1;
  return op;
}

PlaceOperator ev_word(int e, std::int64_t k, const Word& word, const SphericalParams& p) {
  PlaceOperator op = PlaceOperator::identity(e);
  const PlaceOperator gamma_inv = gamma_operator(e).inverse();
  const PlaceOperator gamma = gamma_operator(e);
  for (std::int64_t m = 0; m < (k < 0 ? -k : k); ++m) op = op * (k > 0 ? gamma_inv : gamma);
  for (int i : word) op = op * t_operator(i, e);
  op.scale = (p.omega_minus_one * p.q_half_block().inverse()).pow(static_cast<long>(word.size()));
  return op;
}

PlaceOperator ev(const ExtendedWeylElement& w, const SphericalParams& p) {
  return ev_word(w.rank(), w.k(), reduced_word(w), p);
}

// ---------------------------------------------------------------------------

namespace {

std::size_t checked_size(int e, int d, std::size_t cap) {
  if (e < 1 || d < 1) throw DimensionError("TensorVector: e and d must be positive");
  std::size_t n = 1;
  for (int j = 0; j < e; ++j) {
    n *= static_cast<std::size_t>(d);
    if (n > cap) throw DimensionError("TensorVector: d^e exceeds cap " + std::to_string(cap));
  }
  return n;
}

}  // namespace

TensorVector::TensorVector(int e, int d, std::size_t cap) : e_(e), d_(d), data_(checked_size(e, d, cap)) {}

TensorVector TensorVector::pure_power(const std::vector<Rational>& factor, int e, std::size_t cap) {
  return pure(std::vector<std::vector<Rational>>(e, factor), cap);
}

TensorVector TensorVector::pure(const std::vector<std::vector<Rational>>& factors, std::size_t cap) {
  if (factors.empty()) throw DimensionError("TensorVector::pure: no factors");
  const int d = static_cast<int>(factors[0].size());
  for (const auto& f : factors)
    if (static_cast<int>(f.size()) != d) throw DimensionError("TensorVector::pure: factor sizes differ");
  TensorVector t(static_cast<int>(factors.size()), d, cap);
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    Rational c(1);
    std::size_t rest = idx;
    for (int j = t.e_ - 1; j >= 0 && !c.is_zero(); --j) {
      c *= factors[j][rest % d];
      rest /= d;
    }
    t.data_[idx] = c;
  }
  return t;
}

Rational pair(const TensorVector& v, const TensorVector& vt) {
  if (v.rank() != vt.rank() || v.slot_dim() != vt.slot_dim()) throw DimensionError("pair: dimension mismatch");
  Rational acc;
  for (std::size_t i = 0; i < v.size(); ++i) acc += v[i] * vt[i];
  return acc;
}

namespace {

template <bool Parallel>
TensorVector apply_impl(const PlaceOperator& op, const TensorVector& v) {
  const int e = v.rank();
  const int d = v.slot_dim();
  if (op.rank() != e) throw DimensionError("apply: operator rank differs from tensor rank");
  TensorVector out(e, d, v.size());
  const auto n = static_cast<std::ptrdiff_t>(v.size());
#ifdef HECKE_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (Parallel)
#endif
  for (std::ptrdiff_t idx = 0; idx < n; ++idx) {
    // digits[j] = basis index held by slot j+1
    std::vector<std::size_t> digits(e), moved(e);
    std::size_t rest = static_cast<std::size_t>(idx);
    for (int j = e - 1; j >= 0; --j) {
      digits[j] = rest % d;
      rest /= d;
    }
    for (int j = 0; j < e; ++j) moved[op.perm[j] - 1] = digits[j];
    std::size_t target = 0;
    for (int j = 0; j < e; ++j) target = target * d + moved[j];
    out[target] = op.scale * v[static_cast<std::size_t>(idx)];
  }
  return out;
}

}  // namespace

TensorVector apply(const PlaceOperator& op, const TensorVector& v) { return apply_impl<true>(op, v); }
TensorVector apply_serial(const PlaceOperator& op, const TensorVector& v) { return apply_impl<false>(op, v); }

}  // namespace hecke
