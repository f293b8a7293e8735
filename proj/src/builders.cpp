#include "steenrod/builders.hpp"

#include "steenrod/errors.hpp"
#include "steenrod/series.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace steenrod {

namespace {

std::string hlabel(int i) { return "h^" + std::to_string(i); }
std::string llabel(int j) { return "l_" + std::to_string(j); }

std::vector<Matrix<Integer>> zero_tables(int n) {
  return std::vector<Matrix<Integer>>(static_cast<std::size_t>(n), Matrix<Integer>::Zero(n, n));
}

}  // namespace

VarietyHandle projective_space(int n) {
  if (n < 0) fail(ErrorKind::InvalidInput, "projective space of negative dimension");
  CellularVariety::Data d;
  d.name = "P^" + std::to_string(n);
  d.dim = n;
  for (int i = 0; i <= n; ++i) {
    d.cells.push_back({hlabel(i), n - i});
    d.representatives.push_back("linear subspace P^" + std::to_string(n - i));
  }
  const int size = n + 1;
  d.mult = zero_tables(size);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) d.mult[static_cast<std::size_t>(i)](i + j, j) = 1;
  d.degree = Vector<Integer>::Zero(size);
  d.degree[n] = 1;

  // (n+1) e^h - 1
  const PowerSeries e = PowerSeries::exp_linear(n, 1);
  d.tangent_ch = Vector<Rational>::Zero(size);
  for (int k = 0; k <= n; ++k) d.tangent_ch[k] = Rational(n + 1) * e[k];
  d.tangent_ch[0] -= 1;

  // Column j: h^j (h / (1 - e^{-h}))^{n-j+1}
  d.tau = Matrix<Rational>::Zero(size, size);
  const PowerSeries todd = todd_series(n);
  for (int j = 0; j <= n; ++j) {
    const PowerSeries col = todd.pow(n - j + 1);
    for (int a = 0; j + a <= n; ++a) d.tau(j + a, j) = col[a];
  }
  if (n >= 1) d.hyperplane = 1;
  return CellularVariety::create(std::move(d));
}

VarietyHandle odd_quadric(int dim) {
  if (dim < 1) fail(ErrorKind::InvalidInput, "quadric dimension must be positive");
  if (dim % 2 == 0)
    fail(ErrorKind::EvenDimensionUnsupported, "split quadrics of even dimension are not modelled (d=" +
                                                  std::to_string(dim) + ")");
  const int m = (dim - 1) / 2;
  const int size = dim + 1;
  CellularVariety::Data d;
  d.name = "Q_" + std::to_string(dim);
  d.dim = dim;
  // Index of h^i is i; index of l_j is dim - j.
  auto h_index = [](int i) { return i; };
  auto l_index = [dim](int j) { return dim - j; };
  for (int i = 0; i <= m; ++i) {
    d.cells.push_back({hlabel(i), dim - i});
    d.representatives.push_back("quadric section Q_" + std::to_string(dim - i));
  }
  for (int j = m; j >= 0; --j) {
    d.cells.push_back({llabel(j), j});
    d.representatives.push_back("linear subspace P^" + std::to_string(j));
  }

  // h^k as a vector: h^k for k <= m, 2 l_{dim-k} for m < k <= dim.
  auto hpow = [&](int k) {
    Vector<Integer> v = Vector<Integer>::Zero(size);
    if (k <= m) v[h_index(k)] = 1;
    else if (k <= dim) v[l_index(dim - k)] = 2;
    return v;
  };

  d.mult = zero_tables(size);
  for (int i = 0; i <= m; ++i) {
    for (int j = 0; j <= m; ++j) d.mult[static_cast<std::size_t>(h_index(i))].col(h_index(j)) = hpow(i + j);
    for (int j = 0; j <= m; ++j)
      if (j - i >= 0) d.mult[static_cast<std::size_t>(h_index(i))](l_index(j - i), l_index(j)) = 1;
  }
  for (int j = 0; j <= m; ++j)
    for (int i = 0; i <= m; ++i)
      if (j - i >= 0) d.mult[static_cast<std::size_t>(l_index(j))](l_index(j - i), h_index(i)) = 1;
  // l_i l_j = 0: both have codimension > m.

  d.degree = Vector<Integer>::Zero(size);
  d.degree[l_index(0)] = 1;

  auto eval_in_h = [&](const PowerSeries& f) {
    Vector<Rational> v = Vector<Rational>::Zero(size);
    for (int k = 0; k <= std::min(f.order(), dim); ++k) v += f[k] * to_rational(hpow(k));
    return v;
  };

  // Euler sequence of P^{d+1} and normal bundle O(2): (d+2) e^h - 1 - e^{2h}
  PowerSeries tangent = Rational(dim + 2) * PowerSeries::exp_linear(dim, 1) - PowerSeries::constant(dim, 1) -
                        PowerSeries::exp_linear(dim, 2);
  d.tangent_ch = eval_in_h(tangent);

  d.tau = Matrix<Rational>::Zero(size, size);
  const PowerSeries todd = todd_series(dim);
  PowerSeries todd_of_twice(dim);
  for (int k = 0; k <= dim; ++k) todd_of_twice[k] = todd[k] * power(Rational(2), k);
  // Todd(T_Q) = Todd(O(1))^{d+2} / Todd(O(2))
  const PowerSeries todd_quadric = todd.pow(dim + 2) * todd_of_twice.inverse();
  // ch O_{Q_{d-i}} = (1 - e^{-h})^i for the complete intersection with i hyperplanes.
  const PowerSeries koszul = PowerSeries::constant(dim, 1) - PowerSeries::exp_linear(dim, -1);
  for (int i = 0; i <= m; ++i) d.tau.col(h_index(i)) = eval_in_h(todd_quadric * koszul.pow(i));
  // Push Todd(T_{P^j}) along the linear embedding P^j -> Q: h^a |-> l_{j-a}.
  for (int j = 0; j <= m; ++j) {
    const PowerSeries col = todd.pow(j + 1);
    for (int a = 0; a <= j; ++a) d.tau(l_index(j - a), l_index(j)) = col[a];
  }
  d.hyperplane = h_index(1);
  return CellularVariety::create(std::move(d));
}

VarietyHandle product(const VarietyHandle& x, const VarietyHandle& y) {
  CellularVariety::Data d;
  d.name = x->name() + "x" + y->name();
  d.dim = x->dim() + y->dim();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < x->size(); ++i)
    for (int j = 0; j < y->size(); ++j) pairs.emplace_back(i, j);
  std::stable_sort(pairs.begin(), pairs.end(), [&](auto a, auto b) {
    return x->cell_codim(a.first) + y->cell_codim(a.second) < x->cell_codim(b.first) + y->cell_codim(b.second);
  });
  const int size = static_cast<int>(pairs.size());
  Matrix<int> index(x->size(), y->size());
  for (int c = 0; c < size; ++c) {
    auto [i, j] = pairs[static_cast<std::size_t>(c)];
    index(i, j) = c;
    d.cells.push_back({x->cell(i).label + "*" + y->cell(j).label, x->cell_dim(i) + y->cell_dim(j)});
    if (!x->representatives().empty() && !y->representatives().empty())
      d.representatives.push_back(x->representatives()[static_cast<std::size_t>(i)] + " x " +
                                  y->representatives()[static_cast<std::size_t>(j)]);
    d.factor_cells.push_back({i, j});
  }
  if (d.representatives.size() != pairs.size()) d.representatives.clear();

  d.mult = zero_tables(size);
  for (int a = 0; a < size; ++a)
    for (int b = 0; b < size; ++b) {
      auto [i, j] = pairs[static_cast<std::size_t>(a)];
      auto [k, l] = pairs[static_cast<std::size_t>(b)];
      for (int r = 0; r < x->size(); ++r) {
        const Integer& cx = x->structure_constant(i, k, r);
        if (cx == 0) continue;
        for (int s = 0; s < y->size(); ++s) {
          const Integer& cy = y->structure_constant(j, l, s);
          if (cy != 0) d.mult[static_cast<std::size_t>(a)](index(r, s), b) = cx * cy;
        }
      }
    }
  d.degree = Vector<Integer>::Zero(size);
  d.tangent_ch = Vector<Rational>::Zero(size);
  d.tau = Matrix<Rational>::Zero(size, size);
  const int fx = x->fundamental_index(), fy = y->fundamental_index();
  for (int c = 0; c < size; ++c) {
    auto [i, j] = pairs[static_cast<std::size_t>(c)];
    d.degree[c] = x->degree_vector()[i] * y->degree_vector()[j];
    if (j == fy) d.tangent_ch[c] += x->tangent_ch()[i];
    if (i == fx) d.tangent_ch[c] += y->tangent_ch()[j];
    for (int r = 0; r < size; ++r) {
      auto [k, l] = pairs[static_cast<std::size_t>(r)];
      d.tau(r, c) = x->tau_matrix()(k, i) * y->tau_matrix()(l, j);
    }
  }
  d.factors = {x, y};
  return CellularVariety::create(std::move(d));
}

VarietyHandle product(const std::vector<VarietyHandle>& factors) {
  if (factors.empty()) fail(ErrorKind::InvalidInput, "product of no factors");
  VarietyHandle out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = product(out, factors[i]);
  return out;
}

int product_cell(const CellularVariety& xy, int i, int j) {
  const auto& fc = xy.factor_cells();
  for (int c = 0; c < xy.size(); ++c)
    if (fc[static_cast<std::size_t>(c)][0] == i && fc[static_cast<std::size_t>(c)][1] == j) return c;
  fail(ErrorKind::InvalidInput, xy.name() + " has no cell with the given factor indices");
}

namespace {

void require_product_of(const VarietyHandle& xy, const VarietyHandle& x, const VarietyHandle& y) {
  if (xy->factors().size() != 2 || !same_variety(*xy->factors()[0], *x) || !same_variety(*xy->factors()[1], *y))
    fail(ErrorKind::VarietyMismatch, xy->name() + " is not the product " + x->name() + " x " + y->name());
}

}  // namespace

template <typename Scalar>
ChowClass<Scalar> external_product(const ChowClass<Scalar>& x, const ChowClass<Scalar>& y, const VarietyHandle& xy) {
  require_product_of(xy, x.variety(), y.variety());
  ChowClass<Scalar> out(xy);
  for (int c = 0; c < xy->size(); ++c) {
    const auto& fc = xy->factor_cells()[static_cast<std::size_t>(c)];
    out[c] = x[fc[0]] * y[fc[1]];
  }
  return out;
}
template IntegralClass external_product(const IntegralClass&, const IntegralClass&, const VarietyHandle&);
template RationalClass external_product(const RationalClass&, const RationalClass&, const VarietyHandle&);

ModPClass external_product(const ModPClass& x, const ModPClass& y, const VarietyHandle& xy) {
  require_product_of(xy, x.variety(), y.variety());
  if (x.p() != y.p()) fail(ErrorKind::InvalidInput, "external product of classes modulo different primes");
  Vector<Residue> c(xy->size());
  for (int k = 0; k < xy->size(); ++k) {
    const auto& fc = xy->factor_cells()[static_cast<std::size_t>(k)];
    c[k] = (x[fc[0]] * y[fc[1]]) % x.p();
  }
  return ModPClass(xy, x.p(), std::move(c));
}

RationalClass hyperplane_class(const VarietyHandle& x) {
  if (!x->hyperplane()) fail(ErrorKind::InvalidInput, x->name() + " has no distinguished hyperplane class");
  return RationalClass::basis(x, *x->hyperplane());
}

}  // namespace steenrod
