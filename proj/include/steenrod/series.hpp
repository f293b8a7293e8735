#pragma once

#include "steenrod/chow.hpp"
#include "steenrod/scalar.hpp"

#include <vector>

namespace steenrod {

/// One-variable power series with rational coefficients, truncated above a
/// fixed order.
class PowerSeries {
 public:
  explicit PowerSeries(int order);
  PowerSeries(int order, std::vector<Rational> coeffs);

  static PowerSeries constant(int order, const Rational& c);
  static PowerSeries variable(int order);
  /// e^{a t}
  static PowerSeries exp_linear(int order, const Rational& a);

  int order() const { return order_; }
  const Rational& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  Rational& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& s, PowerSeries a);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

  PowerSeries inverse() const;
  /// log of a series with constant term 1.
  PowerSeries log() const;
  /// exp of a series with constant term 0.
  PowerSeries exp() const;
  PowerSeries pow(long n) const;
  /// f(t)/t for a series with zero constant term; loses one order.
  PowerSeries divide_by_variable() const;
  PowerSeries truncated(int order) const;

 private:
  int order_;
  std::vector<Rational> coeffs_;
};

/// t / (1 - e^{-t})
PowerSeries todd_series(int order);
/// (1 - e^{-p t}) / (1 - e^{-t}) = 1 + e^{-t} + ... + e^{-(p-1) t}
PowerSeries bott_series(int order, long p);
/// 1 + (-t)^{p-1}
PowerSeries wu_series(int order, long p);
/// 1 + t
PowerSeries chern_series(int order);

/// Evaluates sum_k f_k x^k in the Chow ring of x's variety.
RationalClass evaluate(const PowerSeries& f, const RationalClass& x);

}  // namespace steenrod
