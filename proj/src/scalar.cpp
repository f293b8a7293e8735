#include "steenrod/scalar.hpp"

#include "steenrod/errors.hpp"

#include <gmp.h>

namespace steenrod {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  if (s.empty()) fail(ErrorKind::InvalidInput, "empty number");
  mpq_t q;
  mpq_init(q);
  if (mpq_set_str(q, s.c_str(), 10) != 0 || mpz_sgn(mpq_denref(q)) == 0) {
    mpq_clear(q);
    fail(ErrorKind::InvalidInput, "not an exact rational: '" + s + "'");
  }
  mpq_canonicalize(q);
  Rational r(q);
  mpq_clear(q);
  return r;
}

Integer parse_integer(std::string_view text) {
  Rational r = parse_rational(text);
  if (!is_integer(r)) fail(ErrorKind::InvalidInput, "not an integer: '" + std::string(text) + "'");
  return numerator_of(r);
}

std::string to_string(const Integer& value) { return value.str(); }
std::string to_string(const Rational& value) { return value.str(); }

Integer numerator_of(const Rational& value) { return Integer(numerator(value)); }
Integer denominator_of(const Rational& value) { return Integer(denominator(value)); }

bool is_integer(const Rational& value) { return denominator(value) == 1; }

Integer to_integer(const Rational& value) {
  if (!is_integer(value)) fail(ErrorKind::NonIntegralInput, "expected an integer, got " + value.str());
  return numerator_of(value);
}

Rational power(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) fail(ErrorKind::InvalidInput, "zero to a negative power");
    return Rational(1) / power(base, -exponent);
  }
  Rational result = 1;
  Rational b = base;
  for (unsigned long e = static_cast<unsigned long>(exponent); e; e >>= 1) {
    if (e & 1) result *= b;
    b *= b;
  }
  return result;
}

Integer power(const Integer& base, unsigned long exponent) { return mp::pow(base, static_cast<unsigned>(exponent)); }

Residue residue(const Integer& value, Residue p) {
  Integer r = value % p;
  if (r < 0) r += p;
  return r.convert_to<Residue>();
}

Residue residue(const Rational& value, Residue p) {
  Integer den = denominator_of(value);
  if (den % p == 0) fail(ErrorKind::IntegralityViolation, "value " + value.str() + " is not p-integral");
  Residue n = residue(numerator_of(value), p);
  Residue d = residue(den, p);
  // Inverse by Fermat; p is prime.
  Residue inv = 1, b = d, e = p - 2;
  while (e > 0) {
    if (e & 1) inv = static_cast<Residue>((static_cast<__int128>(inv) * b) % p);
    b = static_cast<Residue>((static_cast<__int128>(b) * b) % p);
    e >>= 1;
  }
  return static_cast<Residue>((static_cast<__int128>(n) * inv) % p);
}

long valuation(const Rational& value, Residue p) {
  if (value == 0) fail(ErrorKind::InvalidInput, "valuation of zero");
  long v = 0;
  Integer n = numerator_of(value), d = denominator_of(value);
  while (n % p == 0) { n /= p; ++v; }
  while (d % p == 0) { d /= p; --v; }
  return v;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_prime(long n) {
  if (!is_prime(n)) fail(ErrorKind::NotPrime, std::to_string(n) + " is not a prime number");
}

bool is_integral(const Vector<Rational>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!is_integer(v[i])) return false;
  return true;
}

Vector<Integer> to_integral(const Vector<Rational>& v) {
  Vector<Integer> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = to_integer(v[i]);
  return out;
}

}  // namespace steenrod
