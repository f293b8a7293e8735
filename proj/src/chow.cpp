#include "steenrod/chow.hpp"

namespace steenrod {

template <typename Scalar>
IntegralClass make_class(VarietyHandle variety, const std::map<std::string, Scalar>& coeffs) {
  IntegralClass out(variety);
  for (const auto& [label, value] : coeffs) out[variety->index_of(label)] += Integer(value);
  return out;
}
template IntegralClass make_class(VarietyHandle, const std::map<std::string, Integer>&);
template IntegralClass make_class(VarietyHandle, const std::map<std::string, long>&);

RationalClass make_rational_class(VarietyHandle variety, const std::map<std::string, Rational>& coeffs) {
  RationalClass out(variety);
  for (const auto& [label, value] : coeffs) out[variety->index_of(label)] += value;
  return out;
}

RationalClass to_rational(const IntegralClass& x) { return RationalClass(x.variety(), to_rational(x.coeffs())); }

IntegralClass to_integral(const RationalClass& x) { return IntegralClass(x.variety(), to_integral(x.coeffs())); }

RationalClass mul(const IntegralClass& a, const RationalClass& b) { return mul(to_rational(a), b); }
RationalClass mul(const RationalClass& a, const IntegralClass& b) { return mul(a, to_rational(b)); }

Rational degree(const IntegralClass& x) { return degree(to_rational(x)); }

Rational degree(const RationalClass& x) {
  const auto& v = *x.variety();
  Rational total = 0;
  for (int i = 0; i < x.size(); ++i)
    if (v.cell_dim(i) == 0 && x[i] != 0) total += x[i] * Rational(v.degree_vector()[i]);
  return total;
}

RationalClass exp(const RationalClass& x) {
  if (x.rank() != 0) fail(ErrorKind::InvalidInput, "exp of a class with nonzero rank component");
  auto out = RationalClass::unit(x.variety());
  auto term = out;
  for (int k = 1; k <= x.variety()->dim(); ++k) {
    term = mul(term, x) * Rational(1, k);
    out += term;
  }
  return out;
}

RationalClass inverse(const RationalClass& x) {
  const Rational a0 = x.rank();
  if (a0 == 0) fail(ErrorKind::InvalidInput, "class with zero rank component is not invertible");
  // x = a0 (1 + n) with n nilpotent.
  RationalClass n = x * (Rational(1) / a0) - RationalClass::unit(x.variety());
  auto out = RationalClass::unit(x.variety());
  auto term = out;
  for (int k = 1; k <= x.variety()->dim(); ++k) {
    term = -mul(term, n);
    out += term;
  }
  return out * (Rational(1) / a0);
}

ModPClass::ModPClass(VarietyHandle variety, Residue p)
    : variety_(std::move(variety)), p_(p), coeffs_(Vector<Residue>::Zero(variety_->size())) {
  require_prime(p);
}

ModPClass::ModPClass(VarietyHandle variety, Residue p, Vector<Residue> coeffs)
    : variety_(std::move(variety)), p_(p), coeffs_(std::move(coeffs)) {
  require_prime(p);
  if (coeffs_.size() != variety_->size())
    fail(ErrorKind::InvalidInput, "coefficient vector does not match the basis of " + variety_->name());
  normalize();
}

void ModPClass::normalize() {
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
    coeffs_[i] %= p_;
    if (coeffs_[i] < 0) coeffs_[i] += p_;
  }
}

ModPClass ModPClass::reduce(const IntegralClass& x, Residue p) {
  require_prime(p);
  Vector<Residue> c(x.size());
  for (int i = 0; i < x.size(); ++i) c[i] = residue(x[i], p);
  return ModPClass(x.variety(), p, std::move(c));
}

ModPClass ModPClass::reduce(const RationalClass& x, Residue p) {
  require_prime(p);
  Vector<Residue> c(x.size());
  for (int i = 0; i < x.size(); ++i) c[i] = residue(x[i], p);
  return ModPClass(x.variety(), p, std::move(c));
}

IntegralClass ModPClass::lift() const {
  IntegralClass out(variety_);
  for (int i = 0; i < size(); ++i) out[i] = coeffs_[i];
  return out;
}

ModPClass& ModPClass::operator+=(const ModPClass& other) {
  require_same_variety(*variety_, *other.variety_);
  if (p_ != other.p_) fail(ErrorKind::InvalidInput, "adding classes modulo different primes");
  coeffs_ += other.coeffs_;
  normalize();
  return *this;
}

ModPClass mul(const ModPClass& a, const ModPClass& b) {
  require_same_variety(*a.variety(), *b.variety());
  if (a.p() != b.p()) fail(ErrorKind::InvalidInput, "multiplying classes modulo different primes");
  return ModPClass(a.variety(), a.p(), a.variety()->multiply_mod(a.coeffs(), b.coeffs(), a.p()));
}

ModPClass grade_component(const ModPClass& x, int j) {
  Vector<Residue> c = Vector<Residue>::Zero(x.size());
  for (int i = 0; i < x.size(); ++i)
    if (x.variety()->cell_dim(i) == j) c[i] = x[i];
  return ModPClass(x.variety(), x.p(), std::move(c));
}

}  // namespace steenrod
