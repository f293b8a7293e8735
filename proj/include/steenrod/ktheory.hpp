#pragma once

#include "steenrod/char_classes.hpp"
#include "steenrod/chow.hpp"
#include "steenrod/morphism.hpp"

#include <vector>

namespace steenrod {

/// Z-span of the columns of a unit lower triangular basis matrix (cells
/// ordered by decreasing dimension). Membership is decided by forward
/// substitution.
class TauLattice {
 public:
  TauLattice(VarietyHandle variety, Matrix<Rational> basis);

  /// Lattice of tau-images of K_0(X): columns tau[O_Z] of the cell closures.
  static TauLattice of(const VarietyHandle& x);
  /// The same lattice in Chern character coordinates, i.e. K^0(X) viewed
  /// through ch = tau / Todd(T_X).
  static TauLattice vector_bundles(const VarietyHandle& x);

  const VarietyHandle& variety() const { return variety_; }
  const Matrix<Rational>& basis() const { return basis_; }
  Vector<Rational> column(int i) const { return basis_.col(i); }
  /// Rational coordinates of v in the lattice basis.
  Vector<Rational> coordinates(const Vector<Rational>& v) const;
  bool contains(const Vector<Rational>& v) const;
  Vector<Rational> combination(const Vector<Integer>& coords) const { return basis_ * to_rational(coords); }

 private:
  VarietyHandle variety_;
  Matrix<Rational> basis_;
};

bool lattice_membership(const TauLattice& lattice, const Vector<Rational>& v);

/// Element of K_0(X) tensor Q, represented by its Riemann-Roch image tau.
struct KClass {
  VarietyHandle variety;
  Vector<Rational> tau;
  /// Whether tau lies in the tau-lattice, i.e. the class is integral.
  bool integral = true;

  KClass(VarietyHandle v, Vector<Rational> t, bool is_integral = true);
  static KClass zero(const VarietyHandle& v) { return KClass(v, Vector<Rational>::Zero(v->size())); }

  RationalClass tau_class() const { return RationalClass(variety, tau); }
  bool is_zero() const { return steenrod::is_zero(tau); }

  KClass& operator+=(const KClass& o);
  KClass& operator-=(const KClass& o);
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  friend KClass operator*(const Rational& s, KClass a);
  friend bool operator==(const KClass& a, const KClass& b) {
    return same_variety(*a.variety, *b.variety) && a.tau == b.tau;
  }
};

/// Canonical lift sum_b x_b [O_{Z_b}] of an integral Chow class.
KClass k0_from_chow_lift(const IntegralClass& x);

/// Largest dimension with a nonzero tau component. Throws ZeroClass.
int filtration_level(const KClass& x);

/// Top graded piece of an integral class as a Chow class, i.e. phi^{-1} of
/// its image in gr K_0. Throws NonIntegralInput.
IntegralClass phi_top(const KClass& x);

/// Checks integrality against the tau lattice and throws NonIntegralInput.
void require_integral(const KClass& x);

/// Upper Adams operation: scales the codimension-i part of ch by p^i.
VirtualBundle adams_upper(const VirtualBundle& y, long p);

/// Homological Adams operation on a smooth variety:
/// tau(psi_p x) = Todd(T_X) ch(theta^p(-T_X)) psi^p(ch y), where ch y = tau(x) / Todd(T_X).
KClass adams_lower(const KClass& x, long p);

/// Degree of the zero-dimensional part of tau, i.e. the push-forward to a point.
Rational euler_char(const KClass& x);

/// K^0 and K_0 identification on regular builders.
VirtualBundle to_bundle(const KClass& x);
KClass to_kclass(const VirtualBundle& e);

/// Action of K^0 on K_0: tau(e . x) = ch(e) tau(x).
KClass act(const RationalClass& ch, const KClass& x);

/// Proper push-forward commutes with tau.
KClass k_pushforward(const Morphism& f, const KClass& x);
/// lci pull-back: tau(f^* y) = Todd(T_f) f^* tau(y).
KClass k_pullback(const Morphism& f, const KClass& y);

/// theta^p(e) = sum_k p^{rank(e)-k} e_k with e_k an integral element of K^0
/// whose Chern character starts in codimension >= k(p-1).
struct BottDecomposition {
  VirtualBundle bundle;
  long p;
  /// Chern characters of the e_k, k = 0 .. [dim/(p-1)].
  std::vector<RationalClass> parts;
  /// Leading (codimension k(p-1)) part of each e_k.
  std::vector<IntegralClass> leading;
};

/// Throws DecompositionFailure when an integrality or congruence check fails
/// and NonIntegralInput when e is not in the K^0 lattice.
BottDecomposition bott_decompose(const VirtualBundle& e, long p);

}  // namespace steenrod
