#include "hecke/gelfand.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace hecke {

// ---------------------------------------------------------------------------
// RationalMatrix

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return {};
  RationalMatrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw std::invalid_argument("RationalMatrix: ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
    const Rational inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw NonInvertible("non-square matrix");
  const std::size_t n = rows_;
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw NonInvertible("singular matrix");
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix m = *this;
  return rref(m).size();
}

std::vector<RationalVector> RationalMatrix::nullspace() const {
  RationalMatrix m = *this;
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols_);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("RationalMatrix::apply: size mismatch");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("RationalMatrix: product shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("RationalMatrix: shape mismatch");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) { return a + Rational(-1) * b; }

RationalMatrix operator*(const Rational& c, const RationalMatrix& a) {
  RationalMatrix out = a;
  for (auto& x : out.data_) x *= c;
  return out;
}

// ---------------------------------------------------------------------------
// Representations

void FiniteRep::validate() const {
  if (elements.empty()) throw std::invalid_argument(name + ": no group elements");
  const auto contains = [this](const RationalMatrix& m) {
    return std::find(elements.begin(), elements.end(), m) != elements.end();
  };
  for (const auto& g : elements)
    if (g.rows() != dim || g.cols() != dim) throw std::invalid_argument(name + ": matrix of wrong size");
  if (!contains(RationalMatrix::identity(dim))) throw std::invalid_argument(name + ": identity missing");
  for (const auto& g : elements) {
    try {
      (void)g.inverse();
    } catch (const NonInvertible&) {
      throw std::invalid_argument(name + ": singular group element");
    }
  }
  // Closure of the listed image. A non-faithful representation lists repeats.
  for (const auto& a : elements)
    for (const auto& b : elements)
      if (!contains(a * b)) throw std::invalid_argument(name + ": element list not closed under product");
  for (auto i : subgroup)
    if (i >= elements.size()) throw std::invalid_argument(name + ": subgroup index out of range");
  const auto ks = subgroup_matrices();
  for (const auto& a : ks)
    for (const auto& b : ks)
      if (std::find(ks.begin(), ks.end(), a * b) == ks.end())
        throw std::invalid_argument(name + ": subgroup not closed");
}

std::vector<RationalMatrix> FiniteRep::subgroup_matrices() const {
  std::vector<RationalMatrix> out;
  for (auto i : subgroup) out.push_back(elements.at(i));
  return out;
}

FiniteRep dual(const FiniteRep& rep) {
  FiniteRep d = rep;
  d.name = rep.name + "*";
  for (auto& g : d.elements) g = g.inverse().transpose();
  return d;
}

RationalMatrix averaging_projector(const std::vector<RationalMatrix>& k_elements) {
  if (k_elements.empty()) throw std::invalid_argument("averaging_projector: empty subgroup");
  RationalMatrix sum(k_elements[0].rows(), k_elements[0].cols());
  for (const auto& k : k_elements) sum = sum + k;
  return Rational(1, static_cast<long>(k_elements.size())) * sum;
}

std::vector<RationalVector> fixed_space(const FiniteRep& rep, const std::vector<RationalMatrix>& k_elements) {
  return (RationalMatrix::identity(rep.dim) - averaging_projector(k_elements)).nullspace();
}

std::size_t commutant_dimension(const FiniteRep& rep) {
  // Unknown A has d² entries, A(i,j) at column i*d + j; one block of d² rows
  // per group element for A g - g A = 0.
  const std::size_t d = rep.dim;
  RationalMatrix system(rep.elements.size() * d * d, d * d);
  std::size_t base = 0;
  for (const auto& g : rep.elements) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const std::size_t row = base + i * d + j;
        for (std::size_t k = 0; k < d; ++k) {
          system(row, i * d + k) += g(k, j);   // (A g)(i,j)
          system(row, k * d + j) -= g(i, k);   // (g A)(i,j)
        }
      }
    base += d * d;
  }
  return d * d - system.rank();
}

Rational natural_pairing(const RationalVector& v, const RationalVector& vt) {
  if (v.size() != vt.size()) throw std::invalid_argument("natural_pairing: size mismatch");
  Rational acc;
  for (std::size_t i = 0; i < v.size(); ++i) acc += v[i] * vt[i];
  return acc;
}

GelfandReport check_pairing(const FiniteRep& rep) {
  GelfandReport r;
  r.group = rep.group;
  r.name = rep.name;
  const auto fixed_v = fixed_space(rep);
  const FiniteRep d = dual(rep);
  const auto fixed_vd = fixed_space(d);
  r.dim_fixed_V = fixed_v.size();
  r.dim_fixed_Vdual = fixed_vd.size();
  r.commutant_dim = commutant_dimension(rep);
  r.irreducible = r.commutant_dim == 1;
  r.gelfand_multiplicity_ok = r.dim_fixed_V == 1 && r.dim_fixed_Vdual == 1;
  if (r.gelfand_multiplicity_ok) r.pairing = natural_pairing(fixed_v[0], fixed_vd[0]);
  return r;
}

// ---------------------------------------------------------------------------
// Catalog

FiniteRep symmetric_group_rep(int n, const std::string& kind) {
  if (n < 2 || n > 5) throw std::invalid_argument("symmetric_group_rep: n must be in 2..5");
  FiniteRep rep;
  rep.group = "S" + std::to_string(n);
  rep.name = rep.group + " " + kind;
  rep.gelfand_pair_declared = true;
  std::vector<int> g(n);
  std::iota(g.begin(), g.end(), 0);
  std::size_t index = 0;
  do {
    RationalMatrix m;
    if (kind == "trivial") {
      m = RationalMatrix::identity(1);
    } else if (kind == "sign") {
      int inversions = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) inversions += g[i] > g[j];
      m = RationalMatrix(1, 1);
      m(0, 0) = inversions % 2 == 0 ? 1 : -1;
    } else if (kind == "standard") {
      // column j: g·(e_j - e_n) = e_{g(j)} - e_{g(n)}, first n-1 coordinates
      m = RationalMatrix(n - 1, n - 1);
      for (int j = 0; j < n - 1; ++j) {
        if (g[j] < n - 1) m(g[j], j) += 1;
        if (g[n - 1] < n - 1) m(g[n - 1], j) -= 1;
      }
    } else {
      throw std::invalid_argument("symmetric_group_rep: unknown kind '" + kind + "'");
    }
    rep.dim = m.rows();
    rep.elements.push_back(std::move(m));
    if (g[n - 1] == n - 1) rep.subgroup.push_back(index);
    ++index;
  } while (std::next_permutation(g.begin(), g.end()));
  return rep;
}

FiniteRep dihedral_group_rep(int m) {
  RationalMatrix rotation, reflection;
  switch (m) {
    case 3: rotation = RationalMatrix::from_rows({{0, -1}, {1, -1}}); break;
    case 4: rotation = RationalMatrix::from_rows({{0, -1}, {1, 0}}); break;
    case 6: rotation = RationalMatrix::from_rows({{1, -1}, {1, 0}}); break;
    default: throw std::invalid_argument("dihedral_group_rep: m must be 3, 4 or 6");
  }
  reflection = m == 4 ? RationalMatrix::from_rows({{1, 0}, {0, -1}}) : RationalMatrix::from_rows({{0, 1}, {1, 0}});
  FiniteRep rep;
  rep.group = "D" + std::to_string(m);
  rep.name = rep.group + " standard";
  rep.dim = 2;
  rep.gelfand_pair_declared = true;
  RationalMatrix r = RationalMatrix::identity(2);
  for (int j = 0; j < m; ++j) {
    rep.elements.push_back(r);
    r = rotation * r;
  }
  for (int j = 0; j < m; ++j) rep.elements.push_back(rep.elements[j] * reflection);
  rep.subgroup = {0, static_cast<std::size_t>(m)};
  return rep;
}

std::vector<FiniteRep> shipped_catalog() {
  return {symmetric_group_rep(3, "standard"), symmetric_group_rep(4, "standard"),
          symmetric_group_rep(5, "standard"), symmetric_group_rep(3, "sign"), dihedral_group_rep(4)};
}

FiniteRep load_finite_rep(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  const auto j = nlohmann::json::parse(in);
  FiniteRep rep;
  rep.group = j.at("group").get<std::string>();
  rep.name = j.at("name").get<std::string>();
  rep.dim = j.at("dimension").get<std::size_t>();
  rep.gelfand_pair_declared = j.value("gelfand_pair_declared", false);
  for (const auto& mj : j.at("elements")) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& rj : mj) {
      std::vector<Rational> row;
      for (const auto& x : rj) row.push_back(Rational::parse(x.get<std::string>()));
      rows.push_back(std::move(row));
    }
    rep.elements.push_back(RationalMatrix::from_rows(rows));
  }
  rep.subgroup = j.at("subgroup").get<std::vector<std::size_t>>();
  rep.validate();
  return rep;
}

std::string finite_rep_to_json(const FiniteRep& rep) {
  nlohmann::ordered_json j;
  j["group"] = rep.group;
  j["name"] = rep.name;
  j["dimension"] = rep.dim;
  j["gelfand_pair_declared"] = rep.gelfand_pair_declared;
  nlohmann::ordered_json elems = nlohmann::ordered_json::array();
  for (const auto& m : rep.elements) {
    nlohmann::ordered_json mj = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
      mj.push_back(row);
    }
    elems.push_back(mj);
  }
  j["elements"] = elems;
  j["subgroup"] = rep.subgroup;
  return j.dump();
}

}  // namespace hecke
