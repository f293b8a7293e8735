#include "steenrod/morphism.hpp"

#include "steenrod/builders.hpp"
#include "steenrod/errors.hpp"

namespace steenrod {

namespace {

void invalid(const std::string& kind, const std::string& what) {
  fail(ErrorKind::InvalidMorphism, kind + ": " + what);
}

Integer binomial(int n, int k) {
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Morphism Morphism::create(Data data) {
  Morphism f(std::move(data));
  const auto& d = f.data_;
  const auto& s = *d.source;
  const auto& t = *d.target;
  if (d.push.rows() != t.size() || d.push.cols() != s.size()) invalid(d.kind, "push-forward matrix has wrong shape");
  if (d.pull.rows() != s.size() || d.pull.cols() != t.size()) invalid(d.kind, "pull-back matrix has wrong shape");
  for (int j = 0; j < s.size(); ++j)
    for (int i = 0; i < t.size(); ++i) {
      if (d.push(i, j) != 0 && t.cell_dim(i) != s.cell_dim(j)) invalid(d.kind, "push-forward does not preserve dimension");
      if (d.pull(j, i) != 0 && s.cell_codim(j) != t.cell_codim(i))
        invalid(d.kind, "pull-back does not preserve codimension");
    }
  const Vector<Integer> pulled_unit = d.pull * t.basis_vector<Integer>(t.fundamental_index());
  if (pulled_unit != s.basis_vector<Integer>(s.fundamental_index())) invalid(d.kind, "pull-back does not preserve the unit");
  for (int a = 0; a < t.size(); ++a)
    for (int b = 0; b < t.size(); ++b) {
      const Vector<Integer> lhs = d.pull * t.multiply(t.basis_vector<Integer>(a), t.basis_vector<Integer>(b));
      const Vector<Integer> rhs = s.multiply<Integer>(d.pull.col(a), d.pull.col(b));
      if (lhs != rhs) invalid(d.kind, "pull-back is not multiplicative");
    }
  // push(pull(y) x) = y push(x)
  for (int a = 0; a < t.size(); ++a)
    for (int b = 0; b < s.size(); ++b) {
      const Vector<Integer> lhs = d.push * s.multiply<Integer>(d.pull.col(a), s.basis_vector<Integer>(b));
      const Vector<Integer> rhs = t.multiply<Integer>(t.basis_vector<Integer>(a), d.push.col(b));
      if (lhs != rhs) invalid(d.kind, "projection formula fails");
    }
  if (d.flags.lci) {
    const VirtualBundle pulled(RationalClass(d.source, to_rational(d.pull) * t.tangent_ch()));
    f.tangent_ = VirtualBundle::tangent(d.source) - pulled;
    if (f.tangent_->rank() != s.dim() - t.dim()) invalid(d.kind, "virtual tangent bundle has wrong rank");
  }
  return f;
}

std::string Morphism::name() const { return data_.kind + ":" + data_.source->name() + "->" + data_.target->name(); }

Integer Morphism::degree() const {
  if (data_.source->dim() != data_.target->dim()) return 0;
  return data_.push(data_.target->fundamental_index(), data_.source->fundamental_index());
}

Morphism linear_embedding(int m, int n) {
  if (m < 0 || m > n) fail(ErrorKind::IncompatibleDimensions, "linear embedding P^" + std::to_string(m) + " -> P^" + std::to_string(n));
  Morphism::Data d{"linear_embedding", projective_space(m), projective_space(n), {}, {}, {}};
  d.push = Matrix<Integer>::Zero(n + 1, m + 1);
  d.pull = Matrix<Integer>::Zero(m + 1, n + 1);
  for (int i = 0; i <= m; ++i) d.push(n - m + i, i) = 1;
  for (int i = 0; i <= m; ++i) d.pull(i, i) = 1;
  return Morphism::create(std::move(d));
}

Morphism veronese(int n, int deg) {
  if (n < 0 || deg < 1) fail(ErrorKind::IncompatibleDimensions, "Veronese embedding needs n >= 0 and degree >= 1");
  const int big = binomial(n + deg, n).convert_to<int>() - 1;
  Morphism::Data d{"veronese", projective_space(n), projective_space(big), {}, {}, {}};
  d.push = Matrix<Integer>::Zero(big + 1, n + 1);
  d.pull = Matrix<Integer>::Zero(n + 1, big + 1);
  // A linear P^j in P^n maps to a degree deg^j variety of dimension j.
  for (int i = 0; i <= n; ++i) d.push(big - (n - i), i) = power(Integer(deg), static_cast<unsigned long>(n - i));
  for (int i = 0; i <= n; ++i) d.pull(i, i) = power(Integer(deg), static_cast<unsigned long>(i));
  return Morphism::create(std::move(d));
}

Morphism quadric_in_projective(int dim) {
  auto q = odd_quadric(dim);
  auto p = projective_space(dim + 1);
  Morphism::Data d{"quadric_in_projective", q, p, {}, {}, {}};
  d.push = Matrix<Integer>::Zero(p->size(), q->size());
  d.pull = Matrix<Integer>::Zero(q->size(), p->size());
  const int m = (dim - 1) / 2;
  for (int i = 0; i <= m; ++i) d.push(i + 1, q->index_of("h^" + std::to_string(i))) = 2;
  for (int j = 0; j <= m; ++j) d.push(dim + 1 - j, q->index_of("l_" + std::to_string(j))) = 1;
  // pull h^i = (h|_Q)^i
  const auto h = hyperplane_class(q);
  auto hp = RationalClass::unit(q);
  for (int i = 0; i <= dim + 1; ++i) {
    d.pull.col(i) = to_integral(hp.coeffs());
    hp = mul(hp, h);
  }
  return Morphism::create(std::move(d));
}

Morphism linear_in_quadric(int j, int dim) {
  auto q = odd_quadric(dim);
  const int m = (dim - 1) / 2;
  if (j < 0 || j > m)
    fail(ErrorKind::IncompatibleDimensions, "Q_" + std::to_string(dim) + " contains no linear P^" + std::to_string(j));
  auto p = projective_space(j);
  Morphism::Data d{"linear_in_quadric", p, q, {}, {}, {}};
  d.push = Matrix<Integer>::Zero(q->size(), p->size());
  d.pull = Matrix<Integer>::Zero(p->size(), q->size());
  for (int a = 0; a <= j; ++a) d.push(q->index_of("l_" + std::to_string(j - a)), a) = 1;
  for (int i = 0; i <= std::min(j, m); ++i) d.pull(i, q->index_of("h^" + std::to_string(i))) = 1;
  return Morphism::create(std::move(d));
}

Morphism product_projection(const VarietyHandle& xy, int index) {
  if (xy->factors().size() != 2) fail(ErrorKind::IncompatibleDimensions, xy->name() + " is not a product");
  if (index != 0 && index != 1) fail(ErrorKind::InvalidInput, "projection index must be 0 or 1");
  const auto& target = xy->factors()[static_cast<std::size_t>(index)];
  const auto& other = xy->factors()[static_cast<std::size_t>(1 - index)];
  Morphism::Data d{"product_projection", xy, target, {}, {}, {}};
  d.flags.flat = true;
  d.push = Matrix<Integer>::Zero(target->size(), xy->size());
  d.pull = Matrix<Integer>::Zero(xy->size(), target->size());
  for (int c = 0; c < xy->size(); ++c) {
    const auto& fc = xy->factor_cells()[static_cast<std::size_t>(c)];
    const int mine = fc[static_cast<std::size_t>(index)], theirs = fc[static_cast<std::size_t>(1 - index)];
    d.push(mine, c) = other->degree_vector()[theirs];
    if (theirs == other->fundamental_index()) d.pull(c, mine) = 1;
  }
  return Morphism::create(std::move(d));
}

Morphism pn_self_map(int m) {
  if (m < 1) fail(ErrorKind::IncompatibleDimensions, "self-map of P^1 needs degree >= 1");
  auto p1 = projective_space(1);
  Morphism::Data d{"pn_self_map", p1, p1, {}, {}, {}};
  d.flags.flat = true;
  d.push = Matrix<Integer>::Zero(2, 2);
  d.push(0, 0) = m;
  d.push(1, 1) = 1;
  d.pull = Matrix<Integer>::Zero(2, 2);
  d.pull(0, 0) = 1;
  d.pull(1, 1) = m;
  return Morphism::create(std::move(d));
}

Morphism identity_morphism(const VarietyHandle& x) {
  Morphism::Data d{"identity", x, x, Matrix<Integer>::Identity(x->size(), x->size()),
                   Matrix<Integer>::Identity(x->size(), x->size()), {}};
  d.flags.flat = true;
  return Morphism::create(std::move(d));
}

namespace {

void require_proper(const Morphism& f) {
  if (!f.flags().proper) fail(ErrorKind::FlagViolation, f.name() + " is not proper");
}
void require_pullable(const Morphism& f) {
  if (!f.flags().lci && !f.flags().flat) fail(ErrorKind::FlagViolation, f.name() + " is neither lci nor flat");
}

}  // namespace

IntegralClass pushforward(const Morphism& f, const IntegralClass& x) {
  require_proper(f);
  require_same_variety(*x.variety(), *f.source());
  return IntegralClass(f.target(), f.push_matrix() * x.coeffs());
}

RationalClass pushforward(const Morphism& f, const RationalClass& x) {
  require_proper(f);
  require_same_variety(*x.variety(), *f.source());
  return RationalClass(f.target(), to_rational(f.push_matrix()) * x.coeffs());
}

ModPClass pushforward(const Morphism& f, const ModPClass& x) {
  return ModPClass::reduce(pushforward(f, x.lift()), x.p());
}

IntegralClass pullback(const Morphism& f, const IntegralClass& y) {
  require_pullable(f);
  require_same_variety(*y.variety(), *f.target());
  return IntegralClass(f.source(), f.pull_matrix() * y.coeffs());
}

RationalClass pullback(const Morphism& f, const RationalClass& y) {
  require_pullable(f);
  require_same_variety(*y.variety(), *f.target());
  return RationalClass(f.source(), to_rational(f.pull_matrix()) * y.coeffs());
}

ModPClass pullback(const Morphism& f, const ModPClass& y) { return ModPClass::reduce(pullback(f, y.lift()), y.p()); }

VirtualBundle pullback(const Morphism& f, const VirtualBundle& e) {
  return VirtualBundle(pullback(f, e.ch()), e.integral());
}

}  // namespace steenrod
