#include "helpers.hpp"

#include "steenrod/ktheory.hpp"
#include "steenrod/morphism.hpp"

using namespace testing;

namespace {

KClass tau(const VarietyHandle& x, const std::map<std::string, std::string>& coeffs, bool integral = true) {
  return KClass(x, rcls(x, coeffs).coeffs(), integral);
}

}  // namespace

TEST_CASE("canonical lift through phi") {
  const auto p2 = projective_space(2);
  CHECK(k0_from_chow_lift(cls(p2, {{"h^1", 1}})) == tau(p2, {{"h^1", "1"}, {"h^2", "1"}}));
  CHECK(k0_from_chow_lift(cls(p2, {})).is_zero());
  CHECK(k0_from_chow_lift(cls(p2, {{"h^2", 1}})) == tau(p2, {{"h^2", "1"}}));
}

TEST_CASE("phi_top") {
  const auto p2 = projective_space(2);
  CHECK(phi_top(tau(p2, {{"h^1", "1"}, {"h^2", "1"}})) == cls(p2, {{"h^1", 1}}));
  CHECK(phi_top(tau(p2, {{"h^2", "1"}})) == cls(p2, {{"h^2", 1}}));
  CHECK(phi_top(tau(p2, {{"h^2", "2"}})) == cls(p2, {{"h^2", 2}}));
  CHECK_ERROR(phi_top(tau(p2, {{"h^1", "1/2"}}, false)), ErrorKind::NonIntegralInput);
  CHECK_NOTHROW(require_integral(tau(p2, {{"h^1", "1"}})));
  CHECK_ERROR(require_integral(tau(p2, {{"h^2", "1/2"}}, false)), ErrorKind::NonIntegralInput);
}

TEST_CASE("filtration level") {
  const auto p2 = projective_space(2);
  CHECK(filtration_level(tau(p2, {{"h^1", "1"}, {"h^2", "1"}})) == 1);
  CHECK(filtration_level(k0_from_chow_lift(IntegralClass::unit(p2))) == 2);
  CHECK(filtration_level(tau(p2, {{"h^2", "1"}})) == 0);
  CHECK_ERROR(filtration_level(KClass::zero(p2)), ErrorKind::ZeroClass);
}

TEST_CASE("lattice membership") {
  const auto q3 = odd_quadric(3);
  const TauLattice lattice = TauLattice::of(q3);
  const Vector<Rational> c1 = lattice.column(1), c2 = lattice.column(2);
  CHECK(lattice_membership(lattice, c1));
  CHECK_FALSE(lattice_membership(lattice, c1 / Rational(2)));
  CHECK(lattice_membership(lattice, c1 + c2));
  CHECK(lattice.coordinates(c1 * Rational(3) - c2) == to_rational(Vector<Integer>((Vector<Integer>(4) << 0, 3, -1, 0).finished())));
}

TEST_CASE("line bundles lie in the K^0 lattice") {
  for (int n = 1; n <= 6; ++n) {
    const auto x = projective_space(n);
    const TauLattice k0 = TauLattice::vector_bundles(x);
    // O(0), ..., O(n) form a Z-basis of K^0(P^n).
    Matrix<Rational> coords(n + 1, n + 1);
    for (int i = 0; i <= n; ++i) {
      const auto ch = VirtualBundle::line_bundle(x, i).ch().coeffs();
      REQUIRE(k0.contains(ch));
      coords.col(i) = k0.coordinates(ch);
    }
    const Rational det = coords.determinant();
    CHECK((det == 1 || det == -1));
  }
  for (int d : {3, 5, 7}) {
    const auto x = odd_quadric(d);
    const TauLattice k0 = TauLattice::vector_bundles(x);
    for (int i = -3; i <= 3; ++i) CHECK(k0.contains(VirtualBundle::line_bundle(x, i).ch().coeffs()));
    CHECK(k0.contains(VirtualBundle::tangent(x).ch().coeffs()));
  }
}

TEST_CASE("adams_upper") {
  const auto p2 = projective_space(2);
  CHECK(adams_upper(VirtualBundle::line_bundle(p2, -1), 2) == VirtualBundle::line_bundle(p2, -2));
  CHECK(adams_upper(VirtualBundle::trivial(p2, 4), 3) == VirtualBundle::trivial(p2, 4));
  const auto p1 = projective_space(1);
  CHECK(adams_upper(VirtualBundle::tangent(p1), 3) == VirtualBundle::line_bundle(p1, 6));
}

TEST_CASE("adams_lower") {
  const auto p1 = projective_space(1);
  CHECK(adams_lower(k0_from_chow_lift(IntegralClass::unit(p1)), 2) == tau(p1, {{"h^0", "1/2"}, {"h^1", "1"}}));
  CHECK(adams_lower(tau(p1, {{"h^1", "1"}}), 2) == tau(p1, {{"h^1", "1"}}));
  CHECK(adams_lower(KClass::zero(p1), 2).is_zero());
  CHECK_ERROR(adams_lower(KClass::zero(p1), 4), ErrorKind::NotPrime);
}

TEST_CASE("adams_lower rescales tau by dimension") {
  for (const auto& x : {projective_space(5), odd_quadric(5), product(projective_space(2), projective_space(2))})
    for (long p : {2, 3, 5, 7})
      for (int i = 0; i < x->size(); ++i) {
        const KClass lift = k0_from_chow_lift(IntegralClass::basis(x, i));
        Vector<Rational> expected = lift.tau;
        for (int c = 0; c < x->size(); ++c) expected[c] *= power(Rational(p), -x->cell_dim(c));
        CHECK(adams_lower(lift, p).tau == expected);
      }
}

TEST_CASE("Euler characteristic") {
  CHECK(euler_char(k0_from_chow_lift(IntegralClass::unit(projective_space(1)))) == 1);
  for (int n = 0; n <= 6; ++n) CHECK(euler_char(k0_from_chow_lift(IntegralClass::unit(projective_space(n)))) == 1);
  for (int d : {3, 5, 7}) CHECK(euler_char(k0_from_chow_lift(IntegralClass::unit(odd_quadric(d)))) == 1);
  // chi(O(i)) on P^2 is (i+1)(i+2)/2
  const auto p2 = projective_space(2);
  for (long i = -3; i <= 3; ++i)
    CHECK(euler_char(to_kclass(VirtualBundle::line_bundle(p2, i))) == Rational((i + 1) * (i + 2) / 2));
}

TEST_CASE("K-theoretic push and pull") {
  const auto f = linear_embedding(1, 2);
  const KClass line = k0_from_chow_lift(IntegralClass::unit(f.source()));
  CHECK(k_pushforward(f, line) == k0_from_chow_lift(cls(f.target(), {{"h^1", 1}})));
  CHECK(k_pullback(f, k0_from_chow_lift(IntegralClass::unit(f.target()))) == line);
  const auto q = quadric_in_projective(3);
  const KClass oq = k0_from_chow_lift(IntegralClass::unit(q.source()));
  // O_Q = O - O(-2) on P^4
  const auto p4 = q.target();
  const KClass expected = to_kclass(VirtualBundle::trivial(p4, 1) - VirtualBundle::line_bundle(p4, -2));
  CHECK(k_pushforward(q, oq) == expected);
}

TEST_CASE("Bott decomposition") {
  const auto p1 = projective_space(1);
  const auto p2 = projective_space(2);
  {
    const auto dec = bott_decompose(VirtualBundle::trivial(p2, 3), 2);
    CHECK(dec.parts[0] == RationalClass::unit(p2));
    for (std::size_t k = 1; k < dec.parts.size(); ++k) CHECK(dec.parts[k].is_zero());
  }
  {
    const auto dec = bott_decompose(VirtualBundle::line_bundle(p1, 1), 2);
    REQUIRE(dec.parts.size() == 2);
    CHECK(codim_component(dec.parts[0], 0) == RationalClass::unit(p1));
    CHECK(ModPClass::reduce(to_integral(dec.parts[1]), 2) == mcls(p1, 2, {{"h^1", 1}}));
    CHECK(dec.parts[0] * Rational(2) + dec.parts[1] == theta_p(VirtualBundle::line_bundle(p1, 1), 2));
  }
  {
    const VirtualBundle e = -VirtualBundle::tangent(p2);
    const auto dec = bott_decompose(e, 2);
    RationalClass rebuilt(p2);
    for (std::size_t k = 0; k < dec.parts.size(); ++k) {
      rebuilt += dec.parts[k] * power(Rational(2), e.rank_long() - static_cast<long>(k));
      for (int i = 0; i < p2->size(); ++i)
        if (p2->cell_codim(i) < static_cast<int>(k)) CHECK(dec.parts[k][i] == 0);
    }
    CHECK(rebuilt == theta_p(e, 2));
  }
  CHECK_ERROR(bott_decompose(VirtualBundle(rcls(p2, {{"h^2", "1/2"}})), 2), ErrorKind::NonIntegralInput);
}
