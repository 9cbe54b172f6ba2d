// One line per acceptance criterion; exit status 0 iff every line is PASS.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "hecke/cli.hpp"
#include "hecke/distinction.hpp"
#include "hecke/gelfand.hpp"
#include "hecke/hecke_algebra.hpp"
#include "hecke/spherical.hpp"
#include "hecke/tensor_ops.hpp"
#include "oracles.hpp"

using namespace hecke;

namespace {

constexpr double kPresentationSeconds = 5.0;
constexpr double kLengthSeconds = 30.0;
constexpr double kDistinctionSeconds = 10.0;
const Rational kTailLimit(1, 1000000);

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& ex) {
    o = {false, std::string("exception: ") + ex.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = limit_s <= 0 || secs < limit_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s %2d %s: %s [%.2fs%s]\n", pass ? "PASS" : "FAIL", id, title.c_str(), o.detail.c_str(), secs,
              limit_s > 0 ? (", limit " + std::to_string(static_cast<int>(limit_s)) + "s").c_str() : "");
  std::fflush(stdout);
}

Outcome presentation() {
  int relations = 0;
  for (int e = 2; e <= 4; ++e) {
    const auto rep = verify_presentation(e);
    if (!rep.all_passed()) return {false, "relation failure at e=" + std::to_string(e)};
    relations += static_cast<int>(rep.relations.size());
  }
  return {true, std::to_string(relations) + " relation families, e=2,3,4"};
}

Outcome length_oracle() {
  std::size_t n = 0;
  for (int e = 2; e <= 4; ++e) {
    const auto dist = oracle::cayley_distances(e, 8, 1000 + e);
    for (const auto& [w, d] : dist) {
      if (w.length() != d) return {false, "mismatch at e=" + std::to_string(e)};
      ++n;
    }
    const auto layers = enumerate_by_length(e, 8);
    std::size_t total = 0;
    for (const auto& l : layers) total += l.size();
    if (total != dist.size()) return {false, "layer count differs from BFS at e=" + std::to_string(e)};
  }
  return {true, std::to_string(n) + " elements of length <= 8"};
}

Outcome character() {
  const LaurentPoly X = LaurentPoly::variable();
  const CharacterData<LaurentPoly> trivial{LaurentPoly(1)};
  const CharacterData<LaurentPoly> symbolic{X};
  std::size_t n = 0;
  for (int e = 2; e <= 4; ++e) {
    const HeckeAlgebra<LaurentPoly> alg(e, X);
    for (const auto& layer : enumerate_by_length(e, 8))
      for (const auto& w0 : layer)
        for (std::int64_t k = -1; k <= 1; ++k) {
          const ExtendedWeylElement w(k, w0);
          const auto bw = alg.basis(w);
          const LaurentPoly sign = sign_power<LaurentPoly>(w0.length());
          if (chi(bw, trivial) != sign) return {false, "chi([w]) at " + w.to_string()};
          const LaurentPoly cw = chi(bw, symbolic);
          for (int i = 0; i < e; ++i)
            if (chi(alg.left_multiply_generator(i, bw), symbolic) != -cw)
              return {false, "chi([s_i][w]) at " + w.to_string()};
          if (chi(alg.shift_by_pi(1, bw), symbolic) != X * cw) return {false, "chi([Pi][w]) at " + w.to_string()};
          ++n;
        }
  }
  return {true, std::to_string(n) + " elements, generators and [Pi]"};
}

Outcome eigen() {
  int checked = 0, boundary = 0;
  auto absorb = [&](const EigenReport& r) {
    checked += r.checked;
    boundary += r.boundary_skipped;
    return r.ok() && r.checked > 0;
  };
  for (int e = 2; e <= 3; ++e) {
    const auto generic = generic_q1_params(e);
    const auto symbolic = symbolic_chi_params(e, Rational(4));
    for (int i = 0; i < e; ++i) {
      if (!absorb(verify_eigen_generator(i, 10, generic)))
        return {false, "s_" + std::to_string(i) + " e=" + std::to_string(e)};
      if (!absorb(verify_eigen_generator(i, 10, symbolic)))
        return {false, "s_" + std::to_string(i) + " symbolic e=" + std::to_string(e)};
    }
    for (int d : {1, -1}) {
      if (!absorb(verify_eigen_pi(10, generic, 2, d))) return {false, "Pi generic e=" + std::to_string(e)};
      if (!absorb(verify_eigen_pi(10, symbolic, 2, d))) return {false, "Pi symbolic e=" + std::to_string(e)};
    }
  }
  return {true, std::to_string(checked) + " interior coefficients, 0 failures, " + std::to_string(boundary) +
                    " boundary indices reported"};
}

Outcome operator_oracle() {
  std::size_t values = 0, words = 0;
  for (int e : {3, 5}) {
    const auto layers = enumerate_by_length(e, 6);
    for (int f : {1, 2})
      for (long q0 : {2, 3}) {
        const SphericalParams p{e, f, Rational(q0)};
        const Rational step = -p.q1().inverse();
        for (const auto& layer : layers)
          for (const auto& w0 : layer)
            for (std::int64_t k = 0; k < e; ++k) {
              const ExtendedWeylElement w(k, w0);
              const PlaceOperator op = ev(w, p);
              if (op.perm != project_to_finite(w)) return {false, "permutation at " + w.to_string()};
              if (step.pow(w0.length()) * op.scale != matrix_coefficient_scalar(w0, k, p))
                return {false, "value at " + w.to_string()};
              ++values;
            }
      }
    const SphericalParams p{e, 2, Rational(3)};
    for (const auto& layer : layers)
      for (const auto& w0 : layer) {
        const ExtendedWeylElement w(1, w0);
        const PlaceOperator ref = ev(w, p);
        for (const auto& word : all_reduced_words(w)) {
          if (ev_word(e, 1, word, p) != ref) return {false, "word dependence at " + w.to_string()};
          ++words;
        }
      }
  }
  return {true, std::to_string(values) + " values, " + std::to_string(words) + " reduced words"};
}

Outcome growth() {
  for (int e = 2; e <= 4; ++e) {
    const auto bfs = growth_bfs(e, 12);
    const auto series = poincare_closed_form(e).maclaurin(12);
    for (int l = 0; l <= 12; ++l)
      if (Rational(static_cast<long>(bfs.counts[l])) != series[l])
        return {false, "e=" + std::to_string(e) + " degree " + std::to_string(l)};
  }
  const auto c2 = growth_bfs(2, 3).counts, c3 = growth_bfs(3, 3).counts;
  if (c2 != std::vector<std::uint64_t>{1, 2, 2, 2}) return {false, "e=2 prefix"};
  if (c3 != std::vector<std::uint64_t>{1, 3, 6, 9}) return {false, "e=3 prefix"};
  return {true, "e=2,3,4 to degree 12"};
}

Outcome distinction_main() {
  const auto r = distinction_integral(3, 1, Rational(2), 40);
  if (r.closed_form != Rational(1)) return {false, "closed form " + r.closed_form.to_string()};
  if (!r.per_term_ok) return {false, "per-term identity"};
  if (!(r.abs_error < r.tail_bound)) return {false, "error exceeds tail bound"};
  if (!(r.tail_bound < kTailLimit)) return {false, "tail bound " + std::to_string(r.tail_bound.to_double())};
  std::ostringstream os;
  os << "(3,1,2) L=40: closed form 1, |error| " << r.abs_error.to_double() << " < tail " << r.tail_bound.to_double()
     << " < 1e-6, " << r.terms << " terms";
  return {true, os.str()};
}

Outcome distinction_q3() {
  const auto r = distinction_integral(3, 1, Rational(3), 40);
  if (r.closed_form != Rational(21, 16)) return {false, "closed form " + r.closed_form.to_string()};
  if (!r.per_term_ok || !r.within_tail_bound()) return {false, "partial sum"};
  return {true, "(3,1,3): closed form 21/16"};
}

Outcome nonvanishing() {
  int n = 0;
  for (int e = 2; e <= 6; ++e) {
    std::vector<Rational> xs;
    for (long q0 : {2, 3, 4, 5})
      for (int f : {1, 2}) xs.push_back(-Rational(q0).pow(f).inverse());
    const auto rep = nonvanishing_scan(e, xs);
    if (!rep.all_positive()) return {false, "e=" + std::to_string(e)};
    n += static_cast<int>(rep.samples.size());
  }
  return {true, std::to_string(n) + " exact values, all positive"};
}

Outcome gelfand() {
  for (int n : {3, 4}) {
    const auto r = check_pairing(symmetric_group_rep(n, "standard"));
    if (r.dim_fixed_V != 1 || r.dim_fixed_Vdual != 1) return {false, "fixed dims for S" + std::to_string(n)};
    if (!r.pairing_nonzero()) return {false, "zero pairing for S" + std::to_string(n)};
  }
  return {true, "(S3,S2), (S4,S3): dims (1,1), pairing nonzero"};
}

Outcome determinism() {
  const std::vector<std::vector<std::string>> configs = {
      {"all", "--e", "3", "--L", "5", "--seed", "424242"},
      {"poincare", "--e", "5", "--seed", "99", "--samples", "40"},
      {"presentation", "--e", "4", "--seed", "3"},
  };
  for (const auto& args : configs) {
    std::string first;
    for (int rep = 0; rep < 3; ++rep) {
      std::ostringstream out, err;
      if (cli::run_cli(args, out, err) != cli::kExitPass) return {false, args.front() + " did not pass"};
      if (rep == 0) first = out.str();
      else if (out.str() != first) return {false, args.front() + " output differs"};
    }
  }
  return {true, "3 configurations x 3 runs byte-identical"};
}

}  // namespace

int main() {
  criterion(1, "presentation relations", kPresentationSeconds, presentation);
  criterion(2, "length = Cayley distance", kLengthSeconds, length_oracle);
  criterion(3, "character", 0, character);
  criterion(4, "eigen-equation at L=10", 0, eigen);
  criterion(5, "operator oracle", 0, operator_oracle);
  criterion(6, "growth vs closed form", 0, growth);
  criterion(7, "distinction integral", kDistinctionSeconds, distinction_main);
  criterion(7, "distinction integral", kDistinctionSeconds, distinction_q3);
  criterion(8, "non-vanishing", 0, nonvanishing);
  criterion(9, "Gelfand pairing", 0, gelfand);
  criterion(10, "determinism", 0, determinism);
  std::printf("%s: %d failing\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
