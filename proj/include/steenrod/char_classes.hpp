#pragma once

#include "steenrod/chow.hpp"
#include "steenrod/series.hpp"

#include <vector>

namespace steenrod {

/// Element of K^0(X) given by its Chern character in CH(X) tensor Q. The
/// codimension-0 component of ch is the (integral) rank.
class VirtualBundle {
 public:
  /// `integral` declares that ch comes from a genuine element of K^0(X);
  /// Chern classes of such bundles are checked for integrality.
  explicit VirtualBundle(RationalClass ch, bool integral = true);

  static VirtualBundle trivial(const VarietyHandle& x, long rank);
  /// Line bundle with first Chern class c1: ch = e^{c1}.
  static VirtualBundle line_bundle(const RationalClass& c1);
  /// O(i) for varieties with a hyperplane class.
  static VirtualBundle line_bundle(const VarietyHandle& x, long i);
  static VirtualBundle tangent(const VarietyHandle& x);

  const VarietyHandle& variety() const { return ch_.variety(); }
  const Integer& rank() const { return rank_; }
  long rank_long() const { return rank_.convert_to<long>(); }
  const RationalClass& ch() const { return ch_; }
  bool integral() const { return integral_; }

  VirtualBundle& operator+=(const VirtualBundle& o);
  VirtualBundle& operator-=(const VirtualBundle& o);
  friend VirtualBundle operator+(VirtualBundle a, const VirtualBundle& b) { return a += b; }
  friend VirtualBundle operator-(VirtualBundle a, const VirtualBundle& b) { return a -= b; }
  friend VirtualBundle operator-(const VirtualBundle& a) { return VirtualBundle(-a.ch_, a.integral_); }
  friend VirtualBundle operator*(long n, const VirtualBundle& a) { return VirtualBundle(a.ch_ * Rational(n), a.integral_); }
  /// Tensor product (ch is a ring homomorphism).
  friend VirtualBundle tensor(const VirtualBundle& a, const VirtualBundle& b) {
    return VirtualBundle(mul(a.ch_, b.ch_), a.integral_ && b.integral_);
  }
  friend bool operator==(const VirtualBundle& a, const VirtualBundle& b) { return a.ch_ == b.ch_; }

 private:
  RationalClass ch_;
  Integer rank_;
  bool integral_;
};

/// Per-Chern-root power series defining a multiplicative characteristic class.
struct SeriesSpec {
  enum class Mode {
    Multiplicative,
    /// Constant term must be a unit of Z[1/p].
    InvertibleAtP,
  };
  std::vector<Rational> coeffs;
  Mode mode = Mode::Multiplicative;
  long p = 0;

  static SeriesSpec from(const PowerSeries& s, Mode mode = Mode::Multiplicative, long p = 0);
};

/// Power sums of the Chern roots: p_k = k! ch_k, k = 0 .. dim.
std::vector<RationalClass> power_sums(const VirtualBundle& e);

/// The multiplicative class prod_i f(x_i) over the Chern roots of e, extended
/// to virtual bundles. Computed as f(0)^rank * exp(sum_k b_k p_k) where
/// log(f / f(0)) = sum_k b_k t^k. Throws NonInvertibleSeries.
RationalClass multiplicative_class(const SeriesSpec& s, const VirtualBundle& e);

/// Total Chern class through Newton's identities on the power sums.
RationalClass chern(const VirtualBundle& e);
RationalClass theta_p(const VirtualBundle& e, long p);
RationalClass w_chp(const VirtualBundle& e, long p);
RationalClass todd(const VirtualBundle& e);

}  // namespace steenrod
