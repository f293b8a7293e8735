#include "steenrod/char_classes.hpp"

#include "steenrod/builders.hpp"
#include "steenrod/errors.hpp"

namespace steenrod {

VirtualBundle::VirtualBundle(RationalClass ch, bool integral) : ch_(std::move(ch)), integral_(integral) {
  const Rational& r = ch_.rank();
  if (!is_integer(r)) fail(ErrorKind::InvalidInput, "virtual bundle rank must be an integer, got " + r.str());
  rank_ = numerator_of(r);
}

VirtualBundle VirtualBundle::trivial(const VarietyHandle& x, long rank) {
  return VirtualBundle(RationalClass::unit(x) * Rational(rank));
}

VirtualBundle VirtualBundle::line_bundle(const RationalClass& c1) { return VirtualBundle(exp(c1)); }

VirtualBundle VirtualBundle::line_bundle(const VarietyHandle& x, long i) {
  return line_bundle(hyperplane_class(x) * Rational(i));
}

VirtualBundle VirtualBundle::tangent(const VarietyHandle& x) { return VirtualBundle(RationalClass(x, x->tangent_ch())); }

VirtualBundle& VirtualBundle::operator+=(const VirtualBundle& o) {
  ch_ += o.ch_;
  rank_ += o.rank_;
  integral_ = integral_ && o.integral_;
  return *this;
}

VirtualBundle& VirtualBundle::operator-=(const VirtualBundle& o) {
  ch_ -= o.ch_;
  rank_ -= o.rank_;
  integral_ = integral_ && o.integral_;
  return *this;
}

SeriesSpec SeriesSpec::from(const PowerSeries& s, Mode mode, long p) { return SeriesSpec{s.coeffs(), mode, p}; }

std::vector<RationalClass> power_sums(const VirtualBundle& e) {
  const auto& x = e.variety();
  std::vector<RationalClass> out;
  Rational factorial = 1;
  for (int k = 0; k <= x->dim(); ++k) {
    if (k > 0) factorial *= k;
    out.push_back(codim_component(e.ch(), k) * factorial);
  }
  return out;
}

RationalClass multiplicative_class(const SeriesSpec& s, const VirtualBundle& e) {
  const auto& x = e.variety();
  const int n = x->dim();
  if (s.coeffs.empty() || s.coeffs[0] == 0) fail(ErrorKind::NonInvertibleSeries, "series has zero constant term");
  const Rational a0 = s.coeffs[0];
  if (s.mode == SeriesSpec::Mode::InvertibleAtP) {
    require_prime(s.p);
    const Rational unit = a0 * power(Rational(s.p), -valuation(a0, s.p));
    if (unit != 1 && unit != -1)
      fail(ErrorKind::NonInvertibleSeries, "constant term " + a0.str() + " is not a unit away from p");
  }
  const PowerSeries f = (Rational(1) / a0) * PowerSeries(n, s.coeffs);
  const PowerSeries logf = f.log();
  const auto sums = power_sums(e);
  RationalClass exponent(x);
  for (int k = 1; k <= n; ++k)
    if (logf[k] != 0) exponent += sums[static_cast<std::size_t>(k)] * logf[k];
  return exp(exponent) * power(a0, e.rank_long());
}

RationalClass chern(const VirtualBundle& e) {
  const auto& x = e.variety();
  const auto sums = power_sums(e);
  // k c_k = sum_{i=1}^{k} (-1)^{i-1} c_{k-i} p_i
  std::vector<RationalClass> c{RationalClass::unit(x)};
  for (int k = 1; k <= x->dim(); ++k) {
    RationalClass acc(x);
    for (int i = 1; i <= k; ++i) {
      RationalClass term = mul(c[static_cast<std::size_t>(k - i)], sums[static_cast<std::size_t>(i)]);
      if (i % 2 == 0) acc -= term;
      else acc += term;
    }
    c.push_back(acc * Rational(1, k));
  }
  RationalClass total(x);
  for (const auto& ck : c) total += ck;
  if (e.integral() && !is_integral(total.coeffs()))
    fail(ErrorKind::IntegralityViolation, "Chern classes of an integral bundle on " + x->name() + " are not integral");
  return total;
}

RationalClass theta_p(const VirtualBundle& e, long p) {
  require_prime(p);
  return multiplicative_class(SeriesSpec::from(bott_series(e.variety()->dim(), p), SeriesSpec::Mode::InvertibleAtP, p),
                              e);
}

RationalClass w_chp(const VirtualBundle& e, long p) {
  require_prime(p);
  return multiplicative_class(SeriesSpec::from(wu_series(e.variety()->dim(), p)), e);
}

RationalClass todd(const VirtualBundle& e) {
  return multiplicative_class(SeriesSpec::from(todd_series(e.variety()->dim())), e);
}

}  // namespace steenrod
