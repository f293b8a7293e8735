#include "steenrod/variety.hpp"

#include "steenrod/errors.hpp"

#include <cstdint>
#include <limits>

namespace steenrod {

namespace {

void invalid(const std::string& name, const std::string& what) {
  fail(ErrorKind::InvalidVariety, name + ": " + what);
}

// The associativity check runs in machine integers; builder tables are tiny.
Matrix<std::int64_t> small_copy(const Matrix<Integer>& m, const std::string& name) {
  Matrix<std::int64_t> out(m.rows(), m.cols());
  const Integer bound = Integer(1) << 40;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (abs(m(r, c)) > bound) invalid(name, "structure constant too large to verify");
      out(r, c) = m(r, c).convert_to<std::int64_t>();
    }
  return out;
}

}  // namespace

CellularVariety::CellularVariety(Data data) : data_(std::move(data)) {}

VarietyHandle CellularVariety::create(Data data) {
  std::shared_ptr<CellularVariety> v(new CellularVariety(std::move(data)));
  v->validate();
  for (const auto& m : v->data_.mult) v->mult_rational_.push_back(to_rational(m));
  const int n = v->size();
  v->terms_.resize(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Integer& c = v->structure_constant(i, j, k);
        if (c != 0) v->terms_[static_cast<std::size_t>(i * n + j)].push_back(Term{k, c, Rational(c)});
      }
  return v;
}

void CellularVariety::validate() {
  const auto& d = data_;
  const int n = static_cast<int>(d.cells.size());
  if (d.dim < 0) invalid(d.name, "negative dimension");
  if (n == 0) invalid(d.name, "no cells");

  int top = 0, points = 0;
  for (int i = 0; i < n; ++i) {
    const Cell& c = d.cells[static_cast<std::size_t>(i)];
    if (c.dim < 0 || c.dim > d.dim) invalid(d.name, "cell " + c.label + " has dimension out of range");
    if (i > 0 && c.dim > d.cells[static_cast<std::size_t>(i - 1)].dim)
      invalid(d.name, "cells must be ordered by increasing codimension");
    if (c.label == "1") invalid(d.name, "label '1' is reserved for the fundamental class");
    if (!index_.emplace(c.label, i).second) invalid(d.name, "duplicate label " + c.label);
    if (c.dim == d.dim) {
      ++top;
      fundamental_ = i;
    }
    if (c.dim == 0) ++points;
  }
  if (top != 1) invalid(d.name, "expected exactly one fundamental cell");
  if (points < 1) invalid(d.name, "expected at least one zero-dimensional cell");

  if (static_cast<int>(d.mult.size()) != n) invalid(d.name, "multiplication table has wrong size");
  std::vector<Matrix<std::int64_t>> m;
  for (const auto& mi : d.mult) {
    if (mi.rows() != n || mi.cols() != n) invalid(d.name, "multiplication matrix has wrong shape");
    m.push_back(small_copy(mi, d.name));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const auto c = m[static_cast<std::size_t>(i)](k, j);
        if (c != m[static_cast<std::size_t>(j)](k, i)) invalid(d.name, "product is not commutative");
        if (c != 0 && cell_codim(k) != cell_codim(i) + cell_codim(j))
          invalid(d.name, "product does not respect the grading");
      }
  const auto unit = m[static_cast<std::size_t>(fundamental_)];
  if (unit != Matrix<std::int64_t>::Identity(n, n)) invalid(d.name, "fundamental class is not the unit");
  // (a b) c = a (b c) for all basis triples, i.e. M_a M_b = sum_k c_abk M_k.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Matrix<std::int64_t> lhs = m[static_cast<std::size_t>(a)] * m[static_cast<std::size_t>(b)];
      Matrix<std::int64_t> rhs = Matrix<std::int64_t>::Zero(n, n);
      for (int k = 0; k < n; ++k) {
        const auto c = m[static_cast<std::size_t>(a)](k, b);
        if (c != 0) rhs += c * m[static_cast<std::size_t>(k)];
      }
      if (lhs != rhs) invalid(d.name, "product is not associative");
    }

  if (d.degree.size() != n) invalid(d.name, "degree vector has wrong size");
  for (int i = 0; i < n; ++i)
    if (d.degree[i] != 0 && cell_dim(i) != 0) invalid(d.name, "degree on a positive-dimensional cell");

  if (d.tangent_ch.size() != n) invalid(d.name, "tangent Chern character has wrong size");
  if (d.tangent_ch[fundamental_] != d.dim) invalid(d.name, "tangent bundle rank differs from dimension");
  for (int i = 0; i < n; ++i)
    if (i != fundamental_ && cell_dim(i) == d.dim) invalid(d.name, "tangent data malformed");

  if (d.tau.rows() != n || d.tau.cols() != n) invalid(d.name, "tau matrix has wrong shape");
  for (int col = 0; col < n; ++col)
    for (int row = 0; row < n; ++row) {
      const Rational& t = d.tau(row, col);
      if (row == col) {
        if (t != 1) invalid(d.name, "tau matrix must have unit diagonal");
      } else if (t != 0 && cell_dim(row) >= cell_dim(col)) {
        invalid(d.name, "tau matrix is not triangular with respect to cell dimension");
      }
    }
  if (!d.representatives.empty() && static_cast<int>(d.representatives.size()) != n)
    invalid(d.name, "representatives list has wrong size");
  if (d.hyperplane && cell_codim(*d.hyperplane) != 1) invalid(d.name, "hyperplane class must have codimension 1");
  if (!d.factor_cells.empty() && static_cast<int>(d.factor_cells.size()) != n)
    invalid(d.name, "factor cell table has wrong size");
}

int CellularVariety::index_of(const std::string& label) const {
  if (label == "1") return fundamental_;
  auto it = index_.find(label);
  if (it == index_.end()) fail(ErrorKind::UnknownLabel, "'" + label + "' is not a cell of " + name());
  return it->second;
}

bool CellularVariety::has_label(const std::string& label) const { return label == "1" || index_.count(label) > 0; }

Vector<Residue> CellularVariety::multiply_mod(const Vector<Residue>& a, const Vector<Residue>& b, Residue p) const {
  const int n = size();
  Vector<Residue> out = Vector<Residue>::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      const Residue ab = (a[i] * b[j]) % p;
      for (const Term& t : terms(i, j)) out[t.cell] = (out[t.cell] + ab * residue(t.integer, p)) % p;
    }
  }
  return out;
}

std::vector<int> CellularVariety::cells_of_dim(int d) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (cell_dim(i) == d) out.push_back(i);
  return out;
}

bool same_variety(const CellularVariety& a, const CellularVariety& b) {
  return &a == &b || (a.name() == b.name() && a.dim() == b.dim() && a.size() == b.size());
}

void require_same_variety(const CellularVariety& a, const CellularVariety& b) {
  if (!same_variety(a, b)) fail(ErrorKind::VarietyMismatch, a.name() + " vs " + b.name());
}

}  // namespace steenrod
