#pragma once

#include "steenrod/errors.hpp"
#include "steenrod/variety.hpp"

#include <map>
#include <string>

namespace steenrod {

/// Element of CH(X) (Scalar = Integer) or CH(X) tensor Q (Scalar = Rational),
/// stored as a dense coefficient vector over the cell basis.
template <typename Scalar>
class ChowClass {
 public:
  using scalar_type = Scalar;

  explicit ChowClass(VarietyHandle variety)
      : variety_(std::move(variety)), coeffs_(Vector<Scalar>::Zero(variety_->size())) {}

  ChowClass(VarietyHandle variety, Vector<Scalar> coeffs) : variety_(std::move(variety)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != variety_->size())
      fail(ErrorKind::InvalidInput, "coefficient vector does not match the basis of " + variety_->name());
  }

  static ChowClass basis(VarietyHandle variety, int cell) {
    auto v = variety->template basis_vector<Scalar>(cell);
    return ChowClass(std::move(variety), std::move(v));
  }
  static ChowClass unit(VarietyHandle variety) {
    const int f = variety->fundamental_index();
    return basis(std::move(variety), f);
  }

  const VarietyHandle& variety() const { return variety_; }
  const Vector<Scalar>& coeffs() const { return coeffs_; }
  Vector<Scalar>& coeffs() { return coeffs_; }
  const Scalar& operator[](int i) const { return coeffs_[i]; }
  Scalar& operator[](int i) { return coeffs_[i]; }
  int size() const { return static_cast<int>(coeffs_.size()); }
  bool is_zero() const { return steenrod::is_zero(coeffs_); }

  /// Coefficient of the fundamental class.
  const Scalar& rank() const { return coeffs_[variety_->fundamental_index()]; }

  ChowClass& operator+=(const ChowClass& other) {
    require_same_variety(*variety_, *other.variety_);
    coeffs_ += other.coeffs_;
    return *this;
  }
  ChowClass& operator-=(const ChowClass& other) {
    require_same_variety(*variety_, *other.variety_);
    coeffs_ -= other.coeffs_;
    return *this;
  }
  ChowClass& operator*=(const Scalar& s) {
    coeffs_ *= s;
    return *this;
  }

  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator-(ChowClass a) {
    a.coeffs_ = -a.coeffs_;
    return a;
  }
  friend ChowClass operator*(const Scalar& s, ChowClass a) { return a *= s; }
  friend ChowClass operator*(ChowClass a, const Scalar& s) { return a *= s; }

  friend bool operator==(const ChowClass& a, const ChowClass& b) {
    return same_variety(*a.variety_, *b.variety_) && a.coeffs_ == b.coeffs_;
  }

 private:
  VarietyHandle variety_;
  Vector<Scalar> coeffs_;
};

using IntegralClass = ChowClass<Integer>;
using RationalClass = ChowClass<Rational>;

template <typename Scalar>
IntegralClass make_class(VarietyHandle variety, const std::map<std::string, Scalar>& coeffs);
extern template IntegralClass make_class(VarietyHandle, const std::map<std::string, Integer>&);
extern template IntegralClass make_class(VarietyHandle, const std::map<std::string, long>&);

RationalClass make_rational_class(VarietyHandle variety, const std::map<std::string, Rational>& coeffs);

template <typename Scalar>
ChowClass<Scalar> mul(const ChowClass<Scalar>& a, const ChowClass<Scalar>& b) {
  require_same_variety(*a.variety(), *b.variety());
  return ChowClass<Scalar>(a.variety(), a.variety()->multiply(a.coeffs(), b.coeffs()));
}

/// Mixing integral and rational classes promotes to rational.
RationalClass mul(const IntegralClass& a, const RationalClass& b);
RationalClass mul(const RationalClass& a, const IntegralClass& b);

template <typename Scalar>
ChowClass<Scalar> operator*(const ChowClass<Scalar>& a, const ChowClass<Scalar>& b) {
  return mul(a, b);
}

RationalClass to_rational(const IntegralClass& x);
/// Throws NonIntegralInput when some coefficient is not an integer.
IntegralClass to_integral(const RationalClass& x);

/// Pairs the dimension-0 component with the degree vector.
Rational degree(const IntegralClass& x);
Rational degree(const RationalClass& x);

/// Restriction to cells of dimension j.
template <typename Scalar>
ChowClass<Scalar> grade_component(const ChowClass<Scalar>& x, int j) {
  ChowClass<Scalar> out(x.variety());
  for (int i = 0; i < x.size(); ++i)
    if (x.variety()->cell_dim(i) == j) out[i] = x[i];
  return out;
}

template <typename Scalar>
ChowClass<Scalar> codim_component(const ChowClass<Scalar>& x, int q) {
  return grade_component(x, x.variety()->dim() - q);
}

/// Largest dimension carrying a nonzero coefficient, or -1 for zero.
template <typename Scalar>
int top_dimension(const ChowClass<Scalar>& x) {
  for (int i = 0; i < x.size(); ++i)
    if (x[i] != 0) return x.variety()->cell_dim(i);
  return -1;
}

template <typename Scalar>
bool is_homogeneous(const ChowClass<Scalar>& x) {
  int d = -1;
  for (int i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    if (d >= 0 && x.variety()->cell_dim(i) != d) return false;
    d = x.variety()->cell_dim(i);
  }
  return true;
}

template <typename Scalar>
ChowClass<Scalar> power(const ChowClass<Scalar>& x, unsigned n) {
  auto out = ChowClass<Scalar>::unit(x.variety());
  for (unsigned i = 0; i < n; ++i) out = mul(out, x);
  return out;
}

/// exp of a nilpotent class (zero rank component).
RationalClass exp(const RationalClass& x);
/// Inverse of a class whose rank component is nonzero.
RationalClass inverse(const RationalClass& x);

/// Chow class modulo a prime p.
class ModPClass {
 public:
  ModPClass(VarietyHandle variety, Residue p);
  ModPClass(VarietyHandle variety, Residue p, Vector<Residue> coeffs);

  static ModPClass reduce(const IntegralClass& x, Residue p);
  /// Reduction of a class with p-integral rational coefficients.
  static ModPClass reduce(const RationalClass& x, Residue p);

  const VarietyHandle& variety() const { return variety_; }
  Residue p() const { return p_; }
  const Vector<Residue>& coeffs() const { return coeffs_; }
  Residue operator[](int i) const { return coeffs_[i]; }
  int size() const { return static_cast<int>(coeffs_.size()); }
  bool is_zero() const { return steenrod::is_zero(coeffs_); }

  /// Representative with coefficients in [0, p).
  IntegralClass lift() const;

  ModPClass& operator+=(const ModPClass& other);
  friend ModPClass operator+(ModPClass a, const ModPClass& b) { return a += b; }
  friend bool operator==(const ModPClass& a, const ModPClass& b) {
    return a.p_ == b.p_ && same_variety(*a.variety_, *b.variety_) && a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  VarietyHandle variety_;
  Residue p_;
  Vector<Residue> coeffs_;
};

ModPClass mul(const ModPClass& a, const ModPClass& b);
ModPClass grade_component(const ModPClass& x, int j);

}  // namespace steenrod
