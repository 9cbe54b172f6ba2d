#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "hecke/gelfand.hpp"

using namespace hecke;

namespace {

bool is_fixed(const FiniteRep& rep, const RationalVector& v) {
  for (const auto& k : rep.subgroup_matrices())
    if (k.apply(v) != v) return false;
  return true;
}

}  // namespace

TEST_CASE("matrix basics") {
  const auto a = RationalMatrix::from_rows({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}});
  CHECK(a * a.inverse() == RationalMatrix::identity(2));
  CHECK(a.rank() == 2);
  const auto s = RationalMatrix::from_rows({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}});
  CHECK(s.rank() == 1);
  CHECK_THROWS_AS(s.inverse(), NonInvertible);
  const auto ns = s.nullspace();
  REQUIRE(ns.size() == 1);
  CHECK(s.apply(ns[0]) == RationalVector{Rational(0), Rational(0)});
}

TEST_CASE("fixed spaces") {
  const auto triv = symmetric_group_rep(3, "trivial");
  CHECK(fixed_space(triv).size() == 1);
  const auto sign = symmetric_group_rep(3, "sign");
  CHECK(fixed_space(sign).empty());

  // The standard rep of S3 in the basis e1 - e3, e2 - e3; K swaps 1 and 2,
  // so averaging its two matrices by hand gives [[1/2,1/2],[1/2,1/2]].
  const auto std3 = symmetric_group_rep(3, "standard");
  const auto p = averaging_projector(std3.subgroup_matrices());
  const Rational h(1, 2);
  CHECK(p == RationalMatrix::from_rows({{h, h}, {h, h}}));
  const auto fx = fixed_space(std3);
  REQUIRE(fx.size() == 1);
  CHECK(fx[0][0] == fx[0][1]);
}

TEST_CASE("projector and dual properties") {
  for (const auto& rep : shipped_catalog()) {
    CHECK_NOTHROW(rep.validate());
    const auto p = averaging_projector(rep.subgroup_matrices());
    CHECK(p * p == p);
    for (const auto& v : fixed_space(rep)) CHECK(is_fixed(rep, v));
    const auto d = dual(rep);
    CHECK_NOTHROW(d.validate());
    for (std::size_t g = 0; g < rep.elements.size(); ++g)
      CHECK(d.elements[g].transpose() * rep.elements[g] == RationalMatrix::identity(rep.dim));
    CHECK(fixed_space(d).size() == fixed_space(rep).size());
    CHECK(commutant_dimension(rep) == 1);
  }
}

TEST_CASE("pairing for shipped pairs") {
  for (int n = 3; n <= 5; ++n) {
    const auto r = check_pairing(symmetric_group_rep(n, "standard"));
    CHECK(r.dim_fixed_V == 1);
    CHECK(r.dim_fixed_Vdual == 1);
    CHECK(r.irreducible);
    CHECK(r.pairing_nonzero());
  }
  const auto s = check_pairing(symmetric_group_rep(3, "sign"));
  CHECK(s.dim_fixed_V == 0);
  CHECK(s.dim_fixed_Vdual == 0);
  CHECK_FALSE(s.pairing.has_value());
  CHECK(check_pairing(dihedral_group_rep(4)).pairing_nonzero());
}

TEST_CASE("rescaling a fixed vector rescales the pairing") {
  const auto rep = symmetric_group_rep(4, "standard");
  const auto v = fixed_space(rep).at(0);
  const auto vt = fixed_space(dual(rep)).at(0);
  RationalVector v3 = v;
  for (auto& x : v3) x *= Rational(-3, 7);
  CHECK(natural_pairing(v3, vt) == Rational(-3, 7) * natural_pairing(v, vt));
  CHECK_FALSE(natural_pairing(v, vt).is_zero());
}

TEST_CASE("shipped catalog files match the generators") {
  const std::filesystem::path dir = std::filesystem::path(HECKE_DATA_DIR) / "gelfand";
  const std::vector<std::pair<std::string, FiniteRep>> expected = {
      {"s3_standard.json", symmetric_group_rep(3, "standard")},
      {"s4_standard.json", symmetric_group_rep(4, "standard")},
      {"s5_standard.json", symmetric_group_rep(5, "standard")},
      {"s3_sign.json", symmetric_group_rep(3, "sign")},
      {"d4_standard.json", dihedral_group_rep(4)},
  };
  for (const auto& [file, rep] : expected) {
    const auto loaded = load_finite_rep((dir / file).string());
    CHECK(loaded.elements == rep.elements);
    CHECK(loaded.subgroup == rep.subgroup);
    CHECK(finite_rep_to_json(loaded) == finite_rep_to_json(rep));
  }
}

TEST_CASE("invalid catalog entries are rejected") {
  const auto path = std::filesystem::temp_directory_path() / "hecke_bad_rep.json";
  {
    std::ofstream out(path);
    out << R"({"group":"Z2","name":"bad","dimension":1,"elements":[[["1/1"]],[["2/1"]]],"subgroup":[0],"gelfand_pair_declared":true})";
  }
  CHECK_THROWS_AS(load_finite_rep(path.string()), std::invalid_argument);
  std::filesystem::remove(path);
  CHECK_THROWS(load_finite_rep("/nonexistent/rep.json"));
  CHECK_THROWS_AS(symmetric_group_rep(6, "standard"), std::invalid_argument);
  CHECK_THROWS_AS(dihedral_group_rep(5), std::invalid_argument);
}
