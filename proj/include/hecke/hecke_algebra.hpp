#pragma once

// The affine Hecke algebra H(e, q1) with basis {[w] : w ∈ W}. Products are
// computed by peeling a reduced word of the left factor and applying
//
//   [s_i][w] = [s_i w]                      if l(s_i w) = l(w) + 1
//   [s_i][w] = q1 [s_i w] + (q1 - 1) [w]    if l(s_i w) = l(w) - 1
//
// while [Π]^k [w] = [Π^k w].

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hecke/affine_weyl.hpp"
#include "hecke/scalar.hpp"

namespace hecke {

template <ExactScalar S>
class HeckeElement {
 public:
  using Terms = std::map<ExtendedWeylElement, S>;

  explicit HeckeElement(int e) : e_(e) {}
  static HeckeElement basis(const ExtendedWeylElement& w, const S& c = S(1)) {
    HeckeElement h(w.rank());
    h.add_term(w, c);
    return h;
  }

  int rank() const { return e_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  S coefficient(const ExtendedWeylElement& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? S(0) : it->second;
  }

  void add_term(const ExtendedWeylElement& w, const S& c) {
    if (w.rank() != e_) throw std::invalid_argument("HeckeElement: rank mismatch");
    if (hecke::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second = it->second + c;
      if (hecke::is_zero(it->second)) terms_.erase(it);
    }
  }

  HeckeElement& operator+=(const HeckeElement& o) {
    check_rank(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  HeckeElement& operator-=(const HeckeElement& o) {
    check_rank(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const S& c, const HeckeElement& h) {
    HeckeElement out(h.e_);
    for (const auto& [w, x] : h.terms_) out.add_term(w, c * x);
    return out;
  }
  friend bool operator==(const HeckeElement&, const HeckeElement&) = default;

  /// Applies f to every coefficient (e.g. specialisation q1 := value).
  template <ExactScalar T, class F>
  HeckeElement<T> map_coefficients(F&& f) const {
    HeckeElement<T> out(e_);
    for (const auto& [w, c] : terms_) out.add_term(w, f(c));
    return out;
  }

 private:
  void check_rank(const HeckeElement& o) const {
    if (o.e_ != e_) throw std::invalid_argument("HeckeElement: rank mismatch");
  }
  int e_;
  Terms terms_;
};

template <ExactScalar S>
class HeckeAlgebra {
 public:
  HeckeAlgebra(int e, S q1) : e_(e), q1_(std::move(q1)) {
    if (e < 2) throw std::invalid_argument("HeckeAlgebra: rank must be >= 2");
  }

  int rank() const { return e_; }
  const S& q1() const { return q1_; }

  HeckeElement<S> one() const { return basis(ExtendedWeylElement::identity(e_)); }
  HeckeElement<S> basis(const ExtendedWeylElement& w) const {
    check(w.rank());
    return HeckeElement<S>::basis(w);
  }
  /// [s_i]
  HeckeElement<S> s(int i) const { return basis(generator(e_, i)); }
  /// [Π]^k
  HeckeElement<S> pi(std::int64_t k = 1) const { return basis(pi_power(e_, k)); }
  HeckeElement<S> scalar(const S& c) const { return c * one(); }

  /// [s_i] · h
  HeckeElement<S> left_multiply_generator(int i, const HeckeElement<S>& h) const {
    check(h.rank());
    const ExtendedWeylElement si = generator(e_, i);
    HeckeElement<S> out(e_);
    for (const auto& [w, c] : h.terms()) {
      ExtendedWeylElement x = multiply(si, w);
      if (length(x) > length(w)) {
        out.add_term(x, c);
      } else {
        out.add_term(x, q1_ * c);
        out.add_term(w, (q1_ - S(1)) * c);
      }
    }
    return out;
  }

  /// [u] · [v]
  HeckeElement<S> basis_product(const ExtendedWeylElement& u, const ExtendedWeylElement& v) const {
    HeckeElement<S> acc = HeckeElement<S>::basis(v);
    const Word word = reduced_word(u);
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = left_multiply_generator(*it, acc);
    return shift_by_pi(u.k(), acc);
  }

  HeckeElement<S> product(const HeckeElement<S>& a, const HeckeElement<S>& b) const {
    check(a.rank());
    check(b.rank());
    HeckeElement<S> out(e_);
    for (const auto& [u, cu] : a.terms())
      for (const auto& [v, cv] : b.terms()) out += (cu * cv) * basis_product(u, v);
    return out;
  }

  /// [Π]^k · h
  HeckeElement<S> shift_by_pi(std::int64_t k, const HeckeElement<S>& h) const {
    if (k == 0) return h;
    HeckeElement<S> out(e_);
    const ExtendedWeylElement p = pi_power(e_, k);
    for (const auto& [w, c] : h.terms()) out.add_term(multiply(p, w), c);
    return out;
  }

 private:
  void check(int rank) const {
    if (rank != e_) throw std::invalid_argument("HeckeAlgebra: rank mismatch");
  }
  int e_;
  S q1_;
};

/// Value of the one-dimensional character on [Π]; χ([s_i]) = -1 is fixed.
template <ExactScalar S>
struct CharacterData {
  S chi_pi = S(1);
};

/// χ(Σ c_w [Π^k w0]) = Σ c_w · χ(Π)^k · (-1)^{l(w0)}.
template <ExactScalar S>
S chi(const HeckeElement<S>& h, const CharacterData<S>& cd) {
  if (is_zero(cd.chi_pi)) throw NonInvertible("chi_pi must be a unit");
  S total(0);
  for (const auto& [w, c] : h.terms()) total = total + c * pow(cd.chi_pi, w.k()) * sign_power<S>(length(w));
  return total;
}

struct RelationCheck {
  std::string name;         // "(i)" ... "(vi)", or "derived: ..."
  std::string description;  // the identity checked
  int instances = 0;        // number of index instances evaluated
  int passed = 0;
  std::vector<std::string> failures;
  bool ok() const { return passed == instances; }
};

struct PresentationReport {
  int e = 0;
  std::vector<RelationCheck> relations;
  bool all_passed() const {
    for (const auto& r : relations)
      if (!r.ok()) return false;
    return true;
  }
};

/// Checks relations (i)-(vi) of the presentation with q1 an indeterminate,
/// plus the s_0 relations they imply.
PresentationReport verify_presentation(int e);

}  // namespace hecke
