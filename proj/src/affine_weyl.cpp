#include "hecke/affine_weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#ifdef HECKE_HAVE_OPENMP
#include <omp.h>
#endif

namespace hecke {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Residue of j in {1, ..., e} and the matching block offset: j = r + t e.
std::pair<std::int64_t, std::int64_t> split(std::int64_t j, int e) {
  const std::int64_t t = floor_div(j - 1, e);
  return {j - t * e, t};
}

void require_rank(int e) {
  if (e < 2) throw std::invalid_argument("affine Weyl group: rank e must be >= 2, got " + std::to_string(e));
}

AffinePermutation simple_reflection(int e, int i) {
  std::vector<std::int64_t> w(e);
  std::iota(w.begin(), w.end(), 1);
  if (i == 0) {
    // exchanges 0 and 1, hence e and e+1
    w[0] = 0;
    w[e - 1] = e + 1;
  } else {
    std::swap(w[i - 1], w[i]);
  }
  return AffinePermutation::from_window(std::move(w));
}

}  // namespace

// ---------------------------------------------------------------------------
// AffinePermutation

AffinePermutation AffinePermutation::identity(int e) {
  require_rank(e);
  std::vector<std::int64_t> w(e);
  std::iota(w.begin(), w.end(), 1);
  return AffinePermutation(std::move(w));
}

AffinePermutation AffinePermutation::from_window(std::vector<std::int64_t> window) {
  const int e = static_cast<int>(window.size());
  require_rank(e);
  std::vector<bool> seen(e, false);
  std::int64_t shift = 0;
  for (int j = 0; j < e; ++j) {
    const auto r = split(window[j], e).first;
    if (seen[r - 1]) throw std::invalid_argument("affine permutation: window residues are not a permutation");
    seen[r - 1] = true;
    shift += window[j] - (j + 1);
  }
  if (shift != 0) throw std::invalid_argument("affine permutation: window shift sum must be 0");
  return AffinePermutation(std::move(window));
}

std::int64_t AffinePermutation::operator()(std::int64_t j) const {
  const auto [r, t] = split(j, rank());
  return window_[r - 1] + t * rank();
}

bool AffinePermutation::is_identity() const {
  for (std::size_t j = 0; j < window_.size(); ++j)
    if (window_[j] != static_cast<std::int64_t>(j + 1)) return false;
  return true;
}

AffinePermutation AffinePermutation::inverse() const {
  const int e = rank();
  std::vector<std::int64_t> inv(e);
  for (int j = 1; j <= e; ++j) {
    const auto [r, t] = split(window_[j - 1], e);
    inv[r - 1] = j - t * e;
  }
  return AffinePermutation(std::move(inv));
}

AffinePermutation AffinePermutation::pi_conjugate(std::int64_t b) const {
  // (Π^{-b} u Π^{b})(j) = u(j - b) + b
  const int e = rank();
  std::vector<std::int64_t> w(e);
  for (int j = 1; j <= e; ++j) w[j - 1] = (*this)(j - b) + b;
  return AffinePermutation(std::move(w));
}

int AffinePermutation::length() const {
  // l(w) = Σ_{1≤i<j≤e} |⌊(w(j) - w(i)) / e⌋|
  const int e = rank();
  std::int64_t total = 0;
  for (int i = 0; i < e; ++i)
    for (int j = i + 1; j < e; ++j) total += std::abs(floor_div(window_[j] - window_[i], e));
  return static_cast<int>(total);
}

bool AffinePermutation::has_left_descent(int i) const {
  const AffinePermutation inv = inverse();
  return inv(i) > inv(i + 1);
}

AffinePermutation operator*(const AffinePermutation& a, const AffinePermutation& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("affine permutation: rank mismatch");
  std::vector<std::int64_t> w(a.rank());
  for (int j = 0; j < a.rank(); ++j) w[j] = a(b.window_[j]);
  return AffinePermutation(std::move(w));
}

std::size_t AffinePermutation::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto v : window_) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
  return h;
}

// ---------------------------------------------------------------------------
// ExtendedWeylElement

std::string ExtendedWeylElement::to_string() const {
  std::ostringstream os;
  os << "Pi^" << k_ << "*[";
  for (int j = 0; j < rank(); ++j) os << (j ? "," : "") << w0_.window()[j];
  os << "]";
  return os.str();
}

ExtendedWeylElement generator(int e, int i) {
  require_rank(e);
  if (i < 0 || i >= e)
    throw std::out_of_range("generator index " + std::to_string(i) + " out of range 0.." + std::to_string(e - 1));
  return {0, simple_reflection(e, i)};
}

ExtendedWeylElement pi_element(int e) { return pi_power(e, 1); }

ExtendedWeylElement pi_power(int e, std::int64_t k) { return {k, AffinePermutation::identity(e)}; }

ExtendedWeylElement multiply(const ExtendedWeylElement& a, const ExtendedWeylElement& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("multiply: rank mismatch");
  // Π^a u Π^b v = Π^{a+b} (Π^{-b} u Π^b) v
  return {a.k() + b.k(), a.w0().pi_conjugate(b.k()) * b.w0()};
}

ExtendedWeylElement inverse(const ExtendedWeylElement& a) {
  // (Π^k w)^{-1} = w^{-1} Π^{-k} = Π^{-k} (Π^k w^{-1} Π^{-k})
  return {-a.k(), a.w0().inverse().pi_conjugate(-a.k())};
}

ExtendedWeylElement power(const ExtendedWeylElement& a, std::int64_t n) {
  ExtendedWeylElement base = n < 0 ? inverse(a) : a;
  ExtendedWeylElement result = ExtendedWeylElement::identity(a.rank());
  for (std::int64_t m = n < 0 ? -n : n; m > 0; --m) result = multiply(result, base);
  return result;
}

int length(const ExtendedWeylElement& a) { return a.w0().length(); }

ExtendedWeylElement word_to_element(int e, const Word& word) {
  ExtendedWeylElement w = ExtendedWeylElement::identity(e);
  for (int i : word) w = multiply(w, generator(e, i));
  return w;
}

namespace {

// Left descent of the W0 part: l(s_i Π^k w0) = l(s_{i+k} w0), so descents of
// Π^k w0 are those of w0 relabelled; here we only need w0 itself.
bool w0_left_descent(const AffinePermutation& w0, int i) { return w0.has_left_descent(i); }

}  // namespace

Word reduced_word(const ExtendedWeylElement& a) {
  Word word;
  AffinePermutation w = a.w0();
  const int e = a.rank();
  std::vector<AffinePermutation> gens;
  for (int i = 0; i < e; ++i) gens.push_back(simple_reflection(e, i));
  while (!w.is_identity()) {
    int i = 0;
    while (!w0_left_descent(w, i)) ++i;
    word.push_back(i);
    w = gens[i] * w;
  }
  return word;
}

namespace {

void collect_reduced_words(const AffinePermutation& w, const std::vector<AffinePermutation>& gens,
                           Word& prefix, std::vector<Word>& out) {
  if (w.is_identity()) {
    out.push_back(prefix);
    return;
  }
  for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
    if (!w0_left_descent(w, i)) continue;
    prefix.push_back(i);
    collect_reduced_words(gens[i] * w, gens, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> all_reduced_words(const ExtendedWeylElement& a) {
  const int e = a.rank();
  std::vector<AffinePermutation> gens;
  for (int i = 0; i < e; ++i) gens.push_back(simple_reflection(e, i));
  std::vector<Word> out;
  Word prefix;
  collect_reduced_words(a.w0(), gens, prefix, out);
  return out;
}

bool is_length_increasing(int i, const ExtendedWeylElement& a) {
  const int e = a.rank();
  if (i < 0 || i >= e) throw std::out_of_range("generator index out of range");
  // s_i Π^k w0 = Π^k s_{i+k} w0
  const auto shifted = static_cast<int>(((i + a.k()) % e + e) % e);
  return !a.w0().has_left_descent(shifted);
}

FinitePermutation project_to_finite(const ExtendedWeylElement& a) {
  const int e = a.rank();
  FinitePermutation perm(e);
  for (int j = 1; j <= e; ++j) {
    // residue map of Π^k w0: j ↦ w0(j) - k mod e
    const std::int64_t v = a.w0()(j) - a.k();
    perm[j - 1] = static_cast<int>(split(v, e).first);
  }
  return perm;
}

FinitePermutation compose(const FinitePermutation& sigma, const FinitePermutation& tau) {
  if (sigma.size() != tau.size()) throw std::invalid_argument("compose: size mismatch");
  FinitePermutation out(tau.size());
  for (std::size_t j = 0; j < tau.size(); ++j) out[j] = sigma[tau[j] - 1];
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

std::size_t default_element_cap() {
  if (const char* env = std::getenv("HECKE_MAX_ELEMS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 5'000'000;
}

namespace {

void check_cap(std::size_t total, std::size_t cap) {
  if (total > cap)
    throw CapExceeded("enumeration exceeds element cap " + std::to_string(cap) + " (HECKE_MAX_ELEMS)");
}

template <bool Parallel>
Layers enumerate_impl(int e, int max_length, std::size_t cap) {
  require_rank(e);
  if (max_length < 0) throw std::invalid_argument("enumerate_by_length: L must be >= 0");
  std::vector<AffinePermutation> gens;
  for (int i = 0; i < e; ++i) gens.push_back(simple_reflection(e, i));

  Layers layers;
  layers.push_back({AffinePermutation::identity(e)});
  std::size_t total = 1;
  check_cap(total, cap);
  for (int ell = 1; ell <= max_length; ++ell) {
    const auto& cur = layers.back();
    const std::vector<AffinePermutation> empty;
    const auto& prev = ell >= 2 ? layers[ell - 2] : empty;

    // The Cayley graph is bipartite for lengths, so neighbours of layer ℓ-1
    // lie in layer ℓ-2 or layer ℓ.
    const auto n = static_cast<std::ptrdiff_t>(cur.size());
    std::vector<AffinePermutation> candidates(cur.size() * e, AffinePermutation::identity(e));
    std::vector<char> keep(cur.size() * e, 0);
#ifdef HECKE_HAVE_OPENMP
#pragma omp parallel for schedule(static) if (Parallel)
#endif
    for (std::ptrdiff_t idx = 0; idx < n; ++idx) {
      for (int i = 0; i < e; ++i) {
        AffinePermutation y = gens[i] * cur[idx];
        const std::size_t slot = static_cast<std::size_t>(idx) * e + i;
        keep[slot] = !std::binary_search(prev.begin(), prev.end(), y);
        candidates[slot] = std::move(y);
      }
    }

    std::vector<AffinePermutation> next;
    for (std::size_t s = 0; s < candidates.size(); ++s)
      if (keep[s]) next.push_back(std::move(candidates[s]));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    total += next.size();
    check_cap(total, cap);
    layers.push_back(std::move(next));
  }
  return layers;
}

}  // namespace

Layers enumerate_by_length(int e, int max_length, std::size_t cap) {
  return enumerate_impl<true>(e, max_length, cap);
}

Layers enumerate_by_length_serial(int e, int max_length, std::size_t cap) {
  return enumerate_impl<false>(e, max_length, cap);
}

}  // namespace hecke
