#include "steenrod/series.hpp"

#include "steenrod/errors.hpp"

#include <algorithm>

namespace steenrod {

PowerSeries::PowerSeries(int order) : order_(order), coeffs_(static_cast<std::size_t>(order + 1), Rational(0)) {
  if (order < 0) fail(ErrorKind::InvalidInput, "negative series order");
}

PowerSeries::PowerSeries(int order, std::vector<Rational> coeffs) : PowerSeries(order) {
  for (std::size_t k = 0; k < coeffs.size() && k <= static_cast<std::size_t>(order); ++k) coeffs_[k] = coeffs[k];
}

PowerSeries PowerSeries::constant(int order, const Rational& c) {
  PowerSeries s(order);
  s[0] = c;
  return s;
}

PowerSeries PowerSeries::variable(int order) {
  PowerSeries s(order);
  if (order >= 1) s[1] = 1;
  return s;
}

PowerSeries PowerSeries::exp_linear(int order, const Rational& a) {
  PowerSeries s(order);
  Rational term = 1;
  for (int k = 0; k <= order; ++k) {
    s[k] = term;
    term = term * a / Rational(k + 1);
  }
  return s;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  const int n = std::min(order_, o.order_);
  *this = truncated(n);
  for (int k = 0; k <= n; ++k) coeffs_[static_cast<std::size_t>(k)] += o[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  const int n = std::min(order_, o.order_);
  *this = truncated(n);
  for (int k = 0; k <= n; ++k) coeffs_[static_cast<std::size_t>(k)] -= o[k];
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order_, b.order_);
  PowerSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

PowerSeries operator*(const Rational& s, PowerSeries a) {
  for (auto& c : a.coeffs_) c *= s;
  return a;
}

PowerSeries PowerSeries::inverse() const {
  if (coeffs_[0] == 0) fail(ErrorKind::NonInvertibleSeries, "series with zero constant term");
  PowerSeries out(order_);
  const Rational inv0 = Rational(1) / coeffs_[0];
  out[0] = inv0;
  for (int k = 1; k <= order_; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i) acc += (*this)[i] * out[k - i];
    out[k] = -acc * inv0;
  }
  return out;
}

PowerSeries PowerSeries::log() const {
  if (coeffs_[0] != 1) fail(ErrorKind::InvalidInput, "log needs constant term 1");
  // (log f)' = f'/f
  PowerSeries deriv(order_);
  for (int k = 1; k <= order_; ++k) deriv[k - 1] = Rational(k) * (*this)[k];
  PowerSeries q = deriv * inverse();
  PowerSeries out(order_);
  for (int k = 1; k <= order_; ++k) out[k] = q[k - 1] / Rational(k);
  return out;
}

PowerSeries PowerSeries::exp() const {
  if (coeffs_[0] != 0) fail(ErrorKind::InvalidInput, "exp needs constant term 0");
  // g = exp f satisfies k g_k = sum_{i=1}^{k} i f_i g_{k-i}
  PowerSeries out(order_);
  out[0] = 1;
  for (int k = 1; k <= order_; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i) acc += Rational(i) * (*this)[i] * out[k - i];
    out[k] = acc / Rational(k);
  }
  return out;
}

PowerSeries PowerSeries::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  PowerSeries out = constant(order_, 1);
  PowerSeries base = *this;
  for (unsigned long e = static_cast<unsigned long>(n); e; e >>= 1) {
    if (e & 1) out = out * base;
    base = base * base;
  }
  return out;
}

PowerSeries PowerSeries::divide_by_variable() const {
  if (coeffs_[0] != 0) fail(ErrorKind::InvalidInput, "series is not divisible by t");
  if (order_ == 0) fail(ErrorKind::InvalidInput, "order too small to divide by t");
  PowerSeries out(order_ - 1);
  for (int k = 0; k < order_; ++k) out[k] = (*this)[k + 1];
  return out;
}

PowerSeries PowerSeries::truncated(int order) const {
  PowerSeries out(order);
  for (int k = 0; k <= std::min(order, order_); ++k) out[k] = (*this)[k];
  return out;
}

namespace {

// (1 - e^{-a t}) / t
PowerSeries one_minus_exp_over_t(int order, long a) {
  PowerSeries s = PowerSeries::constant(order + 1, 1) - PowerSeries::exp_linear(order + 1, Rational(-a));
  return s.divide_by_variable();
}

}  // namespace

PowerSeries todd_series(int order) { return one_minus_exp_over_t(order, 1).inverse(); }

PowerSeries bott_series(int order, long p) {
  return one_minus_exp_over_t(order, p) * one_minus_exp_over_t(order, 1).inverse();
}

PowerSeries wu_series(int order, long p) {
  PowerSeries s = PowerSeries::constant(order, 1);
  if (p - 1 <= order) s[static_cast<int>(p - 1)] += ((p - 1) % 2 == 0) ? Rational(1) : Rational(-1);
  return s;
}

PowerSeries chern_series(int order) {
  PowerSeries s = PowerSeries::constant(order, 1);
  if (order >= 1) s[1] = 1;
  return s;
}

RationalClass evaluate(const PowerSeries& f, const RationalClass& x) {
  RationalClass out(x.variety());
  auto term = RationalClass::unit(x.variety());
  for (int k = 0; k <= f.order(); ++k) {
    if (f[k] != 0) out += term * f[k];
    term = mul(term, x);
    if (term.is_zero()) break;
  }
  return out;
}

}  // namespace steenrod
