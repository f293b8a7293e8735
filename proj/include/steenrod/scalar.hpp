#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <string_view>

namespace steenrod {

namespace mp = boost::multiprecision;

// Exact scalars. Expression templates are disabled so that the types behave
// as plain values inside Eigen kernels.
using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Residue = std::int64_t;

Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);
std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);
/// Throws NonIntegralInput when the value has a nontrivial denominator.
Integer to_integer(const Rational& value);
Integer numerator_of(const Rational& value);
Integer denominator_of(const Rational& value);

Rational power(const Rational& base, long exponent);
Integer power(const Integer& base, unsigned long exponent);

/// Least nonnegative residue of value mod p.
Residue residue(const Integer& value, Residue p);
/// Residue of a p-integral rational (denominator prime to p).
Residue residue(const Rational& value, Residue p);

/// p-adic valuation of a nonzero rational.
long valuation(const Rational& value, Residue p);

bool is_prime(long n);
/// Throws NotPrime unless n is a prime number.
void require_prime(long n);

/// Floor division for possibly negative numerators.
constexpr long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

template <typename Scalar>
bool is_zero(const Vector<Scalar>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

inline Vector<Rational> to_rational(const Vector<Integer>& v) { return v.template cast<Rational>(); }
inline Matrix<Rational> to_rational(const Matrix<Integer>& m) { return m.template cast<Rational>(); }

bool is_integral(const Vector<Rational>& v);
/// Throws NonIntegralInput unless every entry is an integer.
Vector<Integer> to_integral(const Vector<Rational>& v);

}  // namespace steenrod
