#include "helpers.hpp"

using namespace testing;

TEST_CASE("rational parsing is exact and canonical") {
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK(parse_rational("123456789012345678901234567890") * 2 == parse_rational("246913578024691357802469135780"));
  CHECK_ERROR(parse_rational("1/0"), ErrorKind::InvalidInput);
  CHECK_ERROR(parse_rational("x"), ErrorKind::InvalidInput);
  CHECK_ERROR(to_integer(parse_rational("1/3")), ErrorKind::NonIntegralInput);
}

TEST_CASE("residues and primes") {
  CHECK(residue(Integer(-1), 5) == 4);
  CHECK(residue(parse_rational("1/2"), 3) == 2);
  CHECK_ERROR(residue(parse_rational("1/2"), 2), ErrorKind::IntegralityViolation);
  CHECK(valuation(parse_rational("12/5"), 2) == 2);
  CHECK(valuation(parse_rational("12/5"), 5) == -1);
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(9));
  CHECK_FALSE(is_prime(1));
  CHECK_ERROR(require_prime(4), ErrorKind::NotPrime);
  CHECK(floor_div(-1, 2) == -1);
  CHECK(floor_div(3, 2) == 1);
}

TEST_CASE("make_class") {
  const auto p2 = projective_space(2);
  const auto line = cls(p2, {{"h^1", 1}});
  CHECK(line[p2->index_of("h^1")] == 1);
  CHECK(cls(p2, {}).is_zero());
  CHECK(cls(p2, {{"1", 2}}) == cls(p2, {{"h^0", 2}}));
  const auto q3 = odd_quadric(3);
  const auto mixed = cls(q3, {{"l_1", 2}, {"h^1", 1}});
  CHECK_FALSE(is_homogeneous(mixed));
  CHECK_ERROR(cls(p2, {{"l_1", 1}}), ErrorKind::UnknownLabel);
}

TEST_CASE("multiplication") {
  const auto p2 = projective_space(2);
  const auto h = cls(p2, {{"h^1", 1}});
  CHECK(mul(h, h) == cls(p2, {{"h^2", 1}}));
  CHECK(mul(cls(p2, {{"h^2", 1}}), h).is_zero());
  const auto q3 = odd_quadric(3);
  CHECK(mul(cls(q3, {{"h^1", 1}}), cls(q3, {{"l_1", 1}})) == cls(q3, {{"l_0", 1}}));
  CHECK(mul(cls(q3, {{"h^1", 1}}), cls(q3, {{"h^1", 1}})) == cls(q3, {{"l_1", 2}}));
  CHECK_ERROR(mul(h, cls(q3, {{"h^1", 1}})), ErrorKind::VarietyMismatch);
}

TEST_CASE("mixing integral and rational classes promotes") {
  const auto p2 = projective_space(2);
  const RationalClass r = mul(cls(p2, {{"h^1", 1}}), rcls(p2, {{"h^1", "1/2"}}));
  CHECK(r == rcls(p2, {{"h^2", "1/2"}}));
}

TEST_CASE("degree") {
  const auto p2 = projective_space(2);
  CHECK(degree(cls(p2, {{"h^2", 1}})) == 1);
  CHECK(degree(cls(p2, {{"h^1", 5}, {"h^2", 3}})) == 3);
  const auto q3 = odd_quadric(3);
  CHECK(degree(cls(q3, {{"l_0", 1}})) == 1);
  // h^3 = h * h^2 = 2 h * l_1 = 2 l_0
  CHECK(degree(power(cls(q3, {{"h^1", 1}}), 3)) == 2);
  const auto xy = product(projective_space(1), projective_space(2));
  const auto pt = external_product(cls(projective_space(1), {{"h^1", 3}}), cls(projective_space(2), {{"h^2", 2}}), xy);
  CHECK(degree(pt) == 6);
}

TEST_CASE("grade_component") {
  const auto p2 = projective_space(2);
  const auto total = cls(p2, {{"h^0", 1}, {"h^1", 1}, {"h^2", 1}});
  CHECK(grade_component(total, 1) == cls(p2, {{"h^1", 1}}));
  CHECK(grade_component(cls(p2, {}), 0).is_zero());
  const auto curve_tau = RationalClass(p2, p2->tau_matrix().col(p2->index_of("h^1")));
  CHECK(curve_tau == rcls(p2, {{"h^1", "1"}, {"h^2", "1"}}));
  CHECK(grade_component(curve_tau, 0) == rcls(p2, {{"h^2", "1"}}));
}

namespace {

CellularVariety::Data line_data() {
  CellularVariety::Data d;
  d.name = "line";
  d.dim = 1;
  d.cells = {{"h^0", 1}, {"h^1", 0}};
  Matrix<Integer> unit = Matrix<Integer>::Identity(2, 2);
  Matrix<Integer> h = Matrix<Integer>::Zero(2, 2);
  h(1, 0) = 1;
  d.mult = {unit, h};
  d.degree = Vector<Integer>::Zero(2);
  d.degree[1] = 1;
  d.tangent_ch = Vector<Rational>::Zero(2);
  d.tangent_ch << Rational(1), Rational(2);
  d.tau = Matrix<Rational>::Identity(2, 2);
  d.tau(1, 0) = 1;
  d.representatives = {"P^1", "point"};
  return d;
}

}  // namespace

TEST_CASE("variety validation") {
  CHECK_NOTHROW(CellularVariety::create(line_data()));

  auto d = line_data();
  d.tau(0, 1) = 1;
  CHECK_ERROR(CellularVariety::create(d), ErrorKind::InvalidVariety);

  d = line_data();
  d.tau(1, 1) = 2;
  CHECK_ERROR(CellularVariety::create(d), ErrorKind::InvalidVariety);

  d = line_data();
  d.mult[1](1, 0) = 0;
  CHECK_ERROR(CellularVariety::create(d), ErrorKind::InvalidVariety);

  d = line_data();
  d.tangent_ch[0] = 2;
  CHECK_ERROR(CellularVariety::create(d), ErrorKind::InvalidVariety);

  d = line_data();
  d.cells[1].dim = 1;
  CHECK_ERROR(CellularVariety::create(d), ErrorKind::InvalidVariety);

  d = line_data();
  d.degree[0] = 1;
  CHECK_ERROR(CellularVariety::create(d), ErrorKind::InvalidVariety);

  d = line_data();
  d.cells[1].label = "1";
  CHECK_ERROR(CellularVariety::create(d), ErrorKind::InvalidVariety);
}

TEST_CASE("builders satisfy the ring axioms exhaustively") {
  for (const auto& x : {projective_space(4), odd_quadric(5), product(projective_space(2), odd_quadric(3))}) {
    const int n = x->size();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const auto ea = IntegralClass::basis(x, a), eb = IntegralClass::basis(x, b);
        CHECK(mul(ea, eb) == mul(eb, ea));
        for (int c = 0; c < n; ++c) {
          const auto ec = IntegralClass::basis(x, c);
          CHECK(mul(mul(ea, eb), ec) == mul(ea, mul(eb, ec)));
        }
      }
  }
}

TEST_CASE("mod p classes") {
  const auto p2 = projective_space(2);
  const ModPClass x = mcls(p2, 3, {{"h^1", -1}, {"h^2", 7}});
  CHECK(x[p2->index_of("h^1")] == 2);
  CHECK(x[p2->index_of("h^2")] == 1);
  CHECK(x.lift() == cls(p2, {{"h^1", 2}, {"h^2", 1}}));
  CHECK((x + x + x).is_zero());
  CHECK(mul(mcls(p2, 2, {{"h^1", 1}}), mcls(p2, 2, {{"h^1", 1}})) == mcls(p2, 2, {{"h^2", 1}}));
  CHECK(ModPClass::reduce(rcls(p2, {{"h^1", "1/2"}}), 3) == mcls(p2, 3, {{"h^1", 2}}));
  CHECK_ERROR(ModPClass::reduce(rcls(p2, {{"h^1", "1/2"}}), 2), ErrorKind::IntegralityViolation);
}

TEST_CASE("exp and inverse in the Chow ring") {
  const auto p3 = projective_space(3);
  const auto h = rcls(p3, {{"h^1", "1"}});
  const auto e = steenrod::exp(h);
  CHECK(e == rcls(p3, {{"h^0", "1"}, {"h^1", "1"}, {"h^2", "1/2"}, {"h^3", "1/6"}}));
  CHECK(mul(e, steenrod::exp(-h)) == RationalClass::unit(p3));
  const auto u = rcls(p3, {{"h^0", "2"}, {"h^1", "1"}});
  CHECK(mul(u, inverse(u)) == RationalClass::unit(p3));
}
