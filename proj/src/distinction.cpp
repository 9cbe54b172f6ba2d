#include "hecke/distinction.hpp"

#include "hecke/spherical.hpp"

namespace hecke {

Rational coset_measure(const AffinePermutation& w0, std::int64_t /*k*/, int f, const Rational& q0) {
  if (q0 < Rational(2)) throw std::invalid_argument("coset_measure: q0 must be >= 2");
  return q0.pow(static_cast<long>(f) * f * w0.length());
}

Rational per_term_value(const AffinePermutation& w0, int f, const Rational& q0) {
  SphericalParams p;
  p.e = w0.rank();
  p.f = f;
  p.q0 = q0;
  return coset_measure(w0, 0, f, q0) * matrix_coefficient_scalar(w0, 0, p);
}

// ---------------------------------------------------------------------------
// Poincaré series

Rational RationalFunction::evaluate(const Rational& x) const {
  const Rational den = denominator.evaluate(x);
  if (den.is_zero()) throw PoleError("rational function has a pole at " + x.to_string());
  return numerator.evaluate(x) / den;
}

std::vector<Rational> RationalFunction::maclaurin(int n) const {
  const Rational d0 = denominator.coefficient(0);
  if (d0.is_zero()) throw PoleError("maclaurin: denominator vanishes at 0");
  std::vector<Rational> a(n + 1);
  for (int m = 0; m <= n; ++m) {
    Rational acc = numerator.coefficient(m);
    for (const auto& [j, dj] : denominator.coefficients())
      if (j >= 1 && j <= m) acc -= dj * a[m - j];
    a[m] = acc / d0;
  }
  return a;
}

RationalFunction poincare_closed_form(int e) {
  if (e < 2) throw std::invalid_argument("poincare_closed_form: e must be >= 2");
  // Π_{i=1}^{e-1} [i+1] / ((1 - X)[i]) with [n] = 1 + X + ... + X^{n-1}
  // telescopes to [e] / (1 - X)^{e-1}.
  const LaurentPoly x = LaurentPoly::variable();
  LaurentPoly num;
  for (int j = 0; j < e; ++j) num += x.pow(j);
  return {num, (LaurentPoly(1) - x).pow(e - 1)};
}

Rational poincare_value(int e, const Rational& x) {
  if (x == Rational(1)) throw PoleError("P_W0 has a pole at x = 1");
  if (!(Rational(-1) < x && x < Rational(1)))
    throw std::domain_error("poincare_value: x must lie in (-1, 1), got " + x.to_string());
  return poincare_closed_form(e).evaluate(x);
}

Rational poincare_tail(int e, const Rational& x, int L) {
  const auto coeffs = poincare_closed_form(e).maclaurin(L);
  Rational partial;
  Rational power(1);
  for (int ell = 0; ell <= L; ++ell) {
    partial += coeffs[ell] * power;
    power *= x;
  }
  return poincare_value(e, x) - partial;
}

GrowthSeries growth_bfs(int e, int L) {
  GrowthSeries g;
  g.e = e;
  g.provenance = Provenance::BFS;
  for (const auto& layer : enumerate_by_length(e, L)) g.counts.push_back(layer.size());
  return g;
}

GrowthSeries growth_closed_form(int e, int L) {
  GrowthSeries g;
  g.e = e;
  g.provenance = Provenance::ClosedForm;
  for (const auto& c : poincare_closed_form(e).maclaurin(L)) {
    if (!c.is_integer() || c.sign() < 0) throw std::logic_error("growth_closed_form: non-integral coefficient");
    g.counts.push_back(std::stoull(c.numerator()));
  }
  return g;
}

// ---------------------------------------------------------------------------
// The integral

namespace {

template <bool Parallel>
IntegralReport integral_impl(int e, int f, const Rational& q0, int L) {
  if (e % 2 == 0) throw RequiresOddE();
  if (L < 0) throw std::invalid_argument("distinction_integral: L must be >= 0");
  SphericalParams params;
  params.e = e;
  params.f = f;
  params.q0 = q0;
  params.validate();

  const Layers layers = Parallel ? enumerate_by_length(e, L) : enumerate_by_length_serial(e, L);
  std::vector<const AffinePermutation*> elems;
  for (const auto& layer : layers)
    for (const auto& w : layer) elems.push_back(&w);

  const Rational step = -q0.pow(f).inverse();
  const auto n = static_cast<std::ptrdiff_t>(elems.size());
  std::vector<Rational> terms(elems.size() * e);
  int all_ok = 1;
#ifdef HECKE_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : all_ok) if (Parallel)
#endif
  for (std::ptrdiff_t idx = 0; idx < n; ++idx) {
    const AffinePermutation& w0 = *elems[idx];
    const Rational expected = step.pow(w0.length());
    for (int k = 0; k < e; ++k) {
      Rational t = coset_measure(w0, k, f, q0) * matrix_coefficient_scalar(w0, k, params);
      all_ok = all_ok && (t == expected);
      terms[static_cast<std::size_t>(idx) * e + k] = std::move(t);
    }
  }

  IntegralReport r;
  r.e = e;
  r.f = f;
  r.q0 = q0;
  r.L = L;
  for (const auto& t : terms) r.partial_sum += t;
  r.terms = terms.size();
  r.per_term_ok = all_ok != 0;
  r.closed_form = Rational(e) * poincare_value(e, step);
  r.abs_error = (r.partial_sum - r.closed_form).abs();
  r.tail_bound = Rational(e) * poincare_tail(e, -step, L);
  return r;
}

}  // namespace

IntegralReport distinction_integral(int e, int f, const Rational& q0, int L) {
  return integral_impl<true>(e, f, q0, L);
}

IntegralReport distinction_integral_serial(int e, int f, const Rational& q0, int L) {
  return integral_impl<false>(e, f, q0, L);
}

Rational k_zero_sum(int e, int f, const Rational& q0, int L) {
  Rational acc;
  for (const auto& layer : enumerate_by_length_serial(e, L))
    for (const auto& w0 : layer) acc += per_term_value(w0, f, q0);
  return acc;
}

NonvanishingReport nonvanishing_scan(int e, const std::vector<Rational>& samples) {
  NonvanishingReport rep;
  rep.e = e;
  for (const auto& x : samples) {
    const Rational v = poincare_value(e, x);
    rep.samples.push_back({x, v, v.sign() > 0});
  }
  return rep;
}

}  // namespace hecke
