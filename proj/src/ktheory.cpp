#include "steenrod/ktheory.hpp"

#include "steenrod/errors.hpp"

#include <map>
#include <mutex>

namespace steenrod {

namespace {

// Tangent classes are recomputed often; keyed by variety and p (p = 0 for Todd).
struct CachedClass {
  std::weak_ptr<const CellularVariety> owner;
  RationalClass value;
};

template <typename Make>
RationalClass cached(const VarietyHandle& x, long tag, Make make) {
  static std::mutex mutex;
  static std::map<std::pair<const CellularVariety*, long>, CachedClass> cache;
  const auto key = std::make_pair(x.get(), tag);
  {
    std::lock_guard lock(mutex);
    const auto it = cache.find(key);
    if (it != cache.end() && it->second.owner.lock() == x) return it->second.value;
  }
  RationalClass value = make();
  std::lock_guard lock(mutex);
  cache.insert_or_assign(key, CachedClass{x, value});
  return value;
}

RationalClass tangent_todd(const VarietyHandle& x) {
  return cached(x, 0, [&] { return todd(VirtualBundle::tangent(x)); });
}

RationalClass inverse_tangent_todd(const VarietyHandle& x) {
  return cached(x, -1, [&] { return inverse(tangent_todd(x)); });
}

// Todd(T_X) theta^p(-T_X)
RationalClass adams_twist(const VarietyHandle& x, long p) {
  return cached(x, p, [&] { return mul(tangent_todd(x), theta_p(-VirtualBundle::tangent(x), p)); });
}

}  // namespace

TauLattice::TauLattice(VarietyHandle variety, Matrix<Rational> basis) : variety_(std::move(variety)), basis_(std::move(basis)) {
  const int n = variety_->size();
  if (basis_.rows() != n || basis_.cols() != n) fail(ErrorKind::InvalidInput, "lattice basis has wrong shape");
  for (int c = 0; c < n; ++c)
    for (int r = 0; r <= c; ++r)
      if (basis_(r, c) != (r == c ? 1 : 0)) fail(ErrorKind::InvalidInput, "lattice basis is not unit lower triangular");
}

TauLattice TauLattice::of(const VarietyHandle& x) { return TauLattice(x, x->tau_matrix()); }

TauLattice TauLattice::vector_bundles(const VarietyHandle& x) {
  const RationalClass inv_todd = inverse_tangent_todd(x);
  Matrix<Rational> basis(x->size(), x->size());
  for (int c = 0; c < x->size(); ++c)
    basis.col(c) = x->multiply<Rational>(inv_todd.coeffs(), x->tau_matrix().col(c));
  return TauLattice(x, std::move(basis));
}

Vector<Rational> TauLattice::coordinates(const Vector<Rational>& v) const {
  return basis_.triangularView<Eigen::UnitLower>().solve(v);
}

bool TauLattice::contains(const Vector<Rational>& v) const { return is_integral(coordinates(v)); }

bool lattice_membership(const TauLattice& lattice, const Vector<Rational>& v) { return lattice.contains(v); }

KClass::KClass(VarietyHandle v, Vector<Rational> t, bool is_integral)
    : variety(std::move(v)), tau(std::move(t)), integral(is_integral) {
  if (tau.size() != variety->size()) fail(ErrorKind::InvalidInput, "tau vector does not match the basis of " + variety->name());
}

KClass& KClass::operator+=(const KClass& o) {
  require_same_variety(*variety, *o.variety);
  tau += o.tau;
  integral = integral && o.integral;
  return *this;
}

KClass& KClass::operator-=(const KClass& o) {
  require_same_variety(*variety, *o.variety);
  tau -= o.tau;
  integral = integral && o.integral;
  return *this;
}

KClass operator*(const Rational& s, KClass a) {
  a.tau *= s;
  a.integral = a.integral && is_integer(s);
  return a;
}

KClass k0_from_chow_lift(const IntegralClass& x) {
  return KClass(x.variety(), x.variety()->tau_matrix() * to_rational(x.coeffs()), true);
}

int filtration_level(const KClass& x) {
  for (int i = 0; i < x.variety->size(); ++i)
    if (x.tau[i] != 0) return x.variety->cell_dim(i);
  fail(ErrorKind::ZeroClass, "filtration level of the zero class");
}

void require_integral(const KClass& x) {
  if (!TauLattice::of(x.variety).contains(x.tau))
    fail(ErrorKind::NonIntegralInput, "K-class on " + x.variety->name() + " is not in the tau lattice");
}

IntegralClass phi_top(const KClass& x) {
  require_integral(x);
  if (x.is_zero()) return IntegralClass(x.variety);
  const int d = filtration_level(x);
  // Unit triangularity: the top tau component equals the top lattice coordinate.
  return to_integral(grade_component(x.tau_class(), d));
}

VirtualBundle adams_upper(const VirtualBundle& y, long p) {
  require_prime(p);
  RationalClass ch = y.ch();
  for (int i = 0; i < ch.size(); ++i) ch[i] *= power(Rational(p), y.variety()->cell_codim(i));
  return VirtualBundle(std::move(ch), y.integral());
}

VirtualBundle to_bundle(const KClass& x) {
  return VirtualBundle(mul(inverse_tangent_todd(x.variety), x.tau_class()), x.integral);
}

KClass to_kclass(const VirtualBundle& e) {
  return KClass(e.variety(), mul(tangent_todd(e.variety()), e.ch()).coeffs(), e.integral());
}

KClass act(const RationalClass& ch, const KClass& x) {
  require_same_variety(*ch.variety(), *x.variety);
  return KClass(x.variety, mul(ch, x.tau_class()).coeffs(), false);
}

KClass adams_lower(const KClass& x, long p) {
  require_prime(p);
  const auto& v = x.variety;
  const RationalClass value = mul(adams_twist(v, p), adams_upper(to_bundle(x), p).ch());
  return KClass(v, value.coeffs(), false);
}

Rational euler_char(const KClass& x) { return degree(grade_component(x.tau_class(), 0)); }

KClass k_pushforward(const Morphism& f, const KClass& x) {
  return KClass(f.target(), pushforward(f, x.tau_class()).coeffs(), x.integral);
}

KClass k_pullback(const Morphism& f, const KClass& y) {
  if (!f.tangent()) fail(ErrorKind::FlagViolation, f.name() + " has no virtual tangent bundle");
  return KClass(f.source(), mul(todd(*f.tangent()), pullback(f, y.tau_class())).coeffs(), y.integral);
}

BottDecomposition bott_decompose(const VirtualBundle& e, long p) {
  require_prime(p);
  const auto& x = e.variety();
  const TauLattice lattice = TauLattice::vector_bundles(x);
  if (!lattice.contains(e.ch().coeffs()))
    fail(ErrorKind::NonIntegralInput, "bundle on " + x->name() + " is not in the K^0 lattice");
  const long rank = e.rank_long();
  const int top_k = x->dim() / static_cast<int>(p - 1);

  const RationalClass theta = theta_p(e, p);
  const Vector<Rational> coords = lattice.coordinates(theta.coeffs());
  std::vector<Vector<Rational>> part_coords(static_cast<std::size_t>(top_k + 1), Vector<Rational>::Zero(x->size()));
  // A basis element of codimension j can only occur in e_k with k(p-1) <= j,
  // so its coordinate is divisible by p^{rank - [j/(p-1)]}.
  for (int i = 0; i < x->size(); ++i) {
    if (coords[i] == 0) continue;
    const int j = x->cell_codim(i);
    const int k = j / static_cast<int>(p - 1);
    const Rational c = coords[i] * power(Rational(p), k - rank);
    if (!is_integer(c))
      fail(ErrorKind::DecompositionFailure, "coordinate of " + x->cell(i).label + " in theta^" + std::to_string(p) +
                                                " is not divisible by p^" + std::to_string(rank - k));
    part_coords[static_cast<std::size_t>(k)][i] = c;
  }

  BottDecomposition out{e, p, {}, {}};
  RationalClass check(x);
  const RationalClass w = w_chp(e, p);
  for (int k = 0; k <= top_k; ++k) {
    RationalClass part(x, lattice.basis() * part_coords[static_cast<std::size_t>(k)]);
    check += part * power(Rational(p), rank - k);
    const int q = k * static_cast<int>(p - 1);
    const IntegralClass leading = to_integral(codim_component(part, q));
    const IntegralClass expected = to_integral(codim_component(w, q));
    if (!(ModPClass::reduce(leading, p) == ModPClass::reduce(expected, p)))
      fail(ErrorKind::DecompositionFailure, "leading part of e_" + std::to_string(k) +
                                                " is not congruent to w_" + std::to_string(k) + " modulo p");
    for (int i = 0; i < x->size(); ++i)
      if (part[i] != 0 && x->cell_codim(i) < q)
        fail(ErrorKind::DecompositionFailure, "e_" + std::to_string(k) + " starts below codimension k(p-1)");
    out.parts.push_back(std::move(part));
    out.leading.push_back(leading);
  }
  if (!(check == theta)) fail(ErrorKind::DecompositionFailure, "decomposition does not reassemble theta^p(e)");
  return out;
}

}  // namespace steenrod
