#include "hecke/hecke_algebra.hpp"

#include <functional>

namespace hecke {

namespace {

using H = HeckeElement<LaurentPoly>;

void record(RelationCheck& rc, const std::string& instance, const H& lhs, const H& rhs) {
  ++rc.instances;
  if (lhs == rhs) ++rc.passed;
  else rc.failures.push_back(instance);
}

std::string idx(int i) { return std::to_string(i); }

RelationCheck named(std::string name, std::string description) {
  RelationCheck rc;
  rc.name = std::move(name);
  rc.description = std::move(description);
  return rc;
}

}  // namespace

PresentationReport verify_presentation(int e) {
  const HeckeAlgebra<LaurentPoly> alg(e, LaurentPoly::variable());
  const LaurentPoly q1 = alg.q1();
  const H one = alg.one();
  auto mul = [&](std::initializer_list<H> fs) {
    H acc = one;
    for (const auto& f : fs) acc = alg.product(acc, f);
    return acc;
  };
  const H pi = alg.pi(1), pi_inv = alg.pi(-1);

  PresentationReport report;
  report.e = e;

  RelationCheck r1 = named("(i)", "[Pi][Pi^-1] = [Pi^-1][Pi] = 1");
  record(r1, "[Pi][Pi^-1]", mul({pi, pi_inv}), one);
  record(r1, "[Pi^-1][Pi]", mul({pi_inv, pi}), one);
  report.relations.push_back(r1);

  RelationCheck r2 = named("(ii)", "([s_i] + 1)([s_i] - q1) = 0, 1 <= i <= e-1");
  for (int i = 1; i <= e - 1; ++i)
    record(r2, "i=" + idx(i), mul({alg.s(i) + one, alg.s(i) - alg.scalar(q1)}), H(e));
  report.relations.push_back(r2);

  RelationCheck r3 = named("(iii)", "[Pi]^2 [s_1] = [s_{e-1}] [Pi]^2");
  record(r3, "", mul({pi, pi, alg.s(1)}), mul({alg.s(e - 1), pi, pi}));
  report.relations.push_back(r3);

  RelationCheck r4 = named("(iv)", "[Pi][s_i] = [s_{i-1}][Pi], 2 <= i <= e-1");
  for (int i = 2; i <= e - 1; ++i) record(r4, "i=" + idx(i), mul({pi, alg.s(i)}), mul({alg.s(i - 1), pi}));
  report.relations.push_back(r4);

  RelationCheck r5 = named("(v)", "[s_i][s_{i+1}][s_i] = [s_{i+1}][s_i][s_{i+1}], 1 <= i <= e-2");
  for (int i = 1; i <= e - 2; ++i)
    record(r5, "i=" + idx(i), mul({alg.s(i), alg.s(i + 1), alg.s(i)}), mul({alg.s(i + 1), alg.s(i), alg.s(i + 1)}));
  report.relations.push_back(r5);

  RelationCheck r6 = named("(vi)", "[s_i][s_j] = [s_j][s_i], 1 <= i,j <= e-1, |i-j| >= 2");
  for (int i = 1; i <= e - 1; ++i)
    for (int j = i + 2; j <= e - 1; ++j)
      record(r6, "i=" + idx(i) + ",j=" + idx(j), mul({alg.s(i), alg.s(j)}), mul({alg.s(j), alg.s(i)}));
  report.relations.push_back(r6);

  // Relations involving s_0 = Π s_1 Π⁻¹, which the list above does not state.
  const H s0 = alg.s(0);
  RelationCheck d0 = named("derived: s0", "[s_0] = [Pi][s_1][Pi^-1]");
  record(d0, "", s0, mul({pi, alg.s(1), pi_inv}));
  report.relations.push_back(d0);

  RelationCheck d1 = named("derived: (ii) for s0", "([s_0] + 1)([s_0] - q1) = 0");
  record(d1, "", mul({s0 + one, s0 - alg.scalar(q1)}), H(e));
  report.relations.push_back(d1);

  RelationCheck d2 = named("derived: braid s0", "[s_0][s_j][s_0] = [s_j][s_0][s_j] for j in {1, e-1}, e >= 3");
  RelationCheck d3 = named("derived: commute s0", "[s_0][s_j] = [s_j][s_0], 2 <= j <= e-2");
  if (e >= 3) {
    for (int j : {1, e - 1}) {
      record(d2, "j=" + idx(j), mul({s0, alg.s(j), s0}), mul({alg.s(j), s0, alg.s(j)}));
    }
    for (int j = 2; j <= e - 2; ++j) record(d3, "j=" + idx(j), mul({s0, alg.s(j)}), mul({alg.s(j), s0}));
  }
  report.relations.push_back(d2);
  report.relations.push_back(d3);
  return report;
}

}  // namespace hecke
