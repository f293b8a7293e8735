#include "helpers.hpp"

#include "steenrod/morphism.hpp"

using namespace testing;

namespace {

RationalClass exp_h(const VarietyHandle& x, long a) {
  if (x->dim() == 0) return RationalClass::unit(x);
  return steenrod::exp(hyperplane_class(x) * Rational(a));
}

RationalClass tau_column(const VarietyHandle& x, const std::string& label) {
  return RationalClass(x, x->tau_matrix().col(x->index_of(label)));
}

}  // namespace

TEST_CASE("projective space") {
  const auto p1 = projective_space(1);
  CHECK(tau_column(p1, "h^0") == rcls(p1, {{"h^0", "1"}, {"h^1", "1"}}));
  const auto p2 = projective_space(2);
  CHECK(p2->size() == 3);
  CHECK(tau_column(p2, "h^1") == rcls(p2, {{"h^1", "1"}, {"h^2", "1"}}));
  CHECK(tau_column(p2, "h^2") == rcls(p2, {{"h^2", "1"}}));
  CHECK(RationalClass(p2, p2->tangent_ch()) == rcls(p2, {{"h^0", "2"}, {"h^1", "3"}, {"h^2", "3/2"}}));
  for (int n = 0; n <= 6; ++n) {
    const auto x = projective_space(n);
    CHECK(x->cells_of_dim(0).size() == 1);
    CHECK(x->tangent_ch()[x->fundamental_index()] == n);
  }
}

TEST_CASE("products") {
  const auto p1 = projective_space(1);
  const auto xy = product(p1, p1);
  CHECK(xy->size() == 4);
  CHECK(xy->name() == "P^1xP^1");
  std::vector<std::string> labels;
  for (const auto& c : xy->cells()) labels.push_back(c.label);
  CHECK(labels == std::vector<std::string>{"h^0*h^0", "h^0*h^1", "h^1*h^0", "h^1*h^1"});
  const auto h1 = external_product(cls(p1, {{"h^1", 1}}), cls(p1, {{"h^0", 1}}), xy);
  CHECK(h1 == cls(xy, {{"h^1*h^0", 1}}));
  // tau of pt x P^1 is (h) (x) (1 + h)
  CHECK(tau_column(xy, "h^1*h^0") == rcls(xy, {{"h^1*h^0", "1"}, {"h^1*h^1", "1"}}));
  const auto tangent = RationalClass(xy, xy->tangent_ch());
  CHECK(tangent == external_product(RationalClass(p1, p1->tangent_ch()), RationalClass::unit(p1), xy) +
                       external_product(RationalClass::unit(p1), RationalClass(p1, p1->tangent_ch()), xy));
  const auto triple = product({p1, p1, projective_space(2)});
  CHECK(triple->dim() == 4);
  CHECK(triple->size() == 12);
}

TEST_CASE("odd quadrics") {
  const auto q3 = odd_quadric(3);
  std::vector<std::string> labels;
  for (const auto& c : q3->cells()) labels.push_back(c.label);
  CHECK(labels == std::vector<std::string>{"h^0", "h^1", "l_1", "l_0"});
  CHECK(q3->tangent_ch()[q3->fundamental_index()] == 3);
  CHECK(tau_column(q3, "l_1") == rcls(q3, {{"l_1", "1"}, {"l_0", "1"}}));
  CHECK_ERROR(odd_quadric(4), ErrorKind::EvenDimensionUnsupported);
  CHECK_ERROR(odd_quadric(-1), ErrorKind::InvalidInput);
  const auto q5 = odd_quadric(5);
  CHECK(mul(cls(q5, {{"l_2", 1}}), cls(q5, {{"l_2", 1}})).is_zero());
  CHECK(mul(cls(q5, {{"h^2", 1}}), cls(q5, {{"l_2", 1}})) == cls(q5, {{"l_0", 1}}));
  CHECK(mul(cls(q5, {{"h^1", 1}}), cls(q5, {{"h^2", 1}})) == cls(q5, {{"l_2", 2}}));
}

TEST_CASE("registered morphisms") {
  const auto le = linear_embedding(1, 2);
  const auto p1 = le.source();
  const auto p2 = le.target();
  CHECK(pushforward(le, cls(p1, {{"h^1", 1}})) == cls(p2, {{"h^2", 1}}));
  CHECK(pushforward(le, cls(p1, {{"h^0", 1}})) == cls(p2, {{"h^1", 1}}));
  CHECK(pullback(le, cls(p2, {{"h^1", 1}})) == cls(p1, {{"h^1", 1}}));

  const auto v = veronese(1, 2);
  CHECK(pullback(v, cls(v.target(), {{"h^1", 1}})) == cls(v.source(), {{"h^1", 2}}));
  const auto v3 = veronese(1, 3);
  CHECK(pullback(v3, cls(v3.target(), {{"h^1", 1}})) == cls(v3.source(), {{"h^1", 3}}));
  CHECK(pushforward(v3, cls(v3.source(), {{"h^0", 1}})) == cls(v3.target(), {{"h^2", 3}}));

  const auto q = quadric_in_projective(3);
  CHECK(pushforward(q, cls(q.source(), {{"h^1", 1}})) == cls(q.target(), {{"h^2", 2}}));
  CHECK(pushforward(q, cls(q.source(), {{"l_1", 1}})) == cls(q.target(), {{"h^3", 1}}));

  const auto s = pn_self_map(3);
  CHECK(s.degree() == 3);
  CHECK(pushforward(s, cls(s.source(), {{"h^1", 1}})) == cls(s.target(), {{"h^1", 1}}));
  CHECK(pullback(s, cls(s.target(), {{"h^1", 1}})) == cls(s.source(), {{"h^1", 3}}));

  CHECK_ERROR(linear_embedding(3, 2), ErrorKind::IncompatibleDimensions);
  CHECK_ERROR(linear_in_quadric(2, 3), ErrorKind::IncompatibleDimensions);
}

TEST_CASE("virtual tangent bundles match closed forms") {
  for (int n = 1; n <= 4; ++n)
    for (int m = 0; m < n; ++m) {
      const auto f = linear_embedding(m, n);
      CHECK(f.tangent()->ch() == exp_h(f.source(), 1) * Rational(-(n - m)));
    }
  for (int d : {3, 5}) {
    const auto f = quadric_in_projective(d);
    CHECK(f.tangent()->ch() == -exp_h(f.source(), 2));
  }
  for (int m : {1, 2, 5}) {
    const auto f = pn_self_map(m);
    CHECK(f.tangent()->ch() == exp_h(f.source(), 2) - exp_h(f.source(), 2 * m));
  }
  {
    const auto f = veronese(2, 2);
    CHECK(f.target()->dim() == 5);
    const auto src = f.source();
    const auto expected = exp_h(src, 1) * Rational(3) - exp_h(src, 2) * Rational(6);
    CHECK(f.tangent()->ch() == expected);
  }
  {
    const auto f = linear_in_quadric(1, 3);
    const auto src = f.source();
    CHECK(f.tangent()->ch() == exp_h(src, 1) * Rational(-3) + exp_h(src, 2));
  }
  {
    const auto p1 = projective_space(1), p2 = projective_space(2);
    const auto xy = product(p1, p2);
    const auto f = product_projection(xy, 0);
    CHECK(f.tangent()->ch() == external_product(RationalClass::unit(p1), RationalClass(p2, p2->tangent_ch()), xy));
    CHECK(f.flags().flat);
  }
}

TEST_CASE("morphism validation") {
  const auto p1 = projective_space(1);
  const auto p2 = projective_space(2);
  Morphism::Data d{"bad", p1, p2, Matrix<Integer>::Zero(3, 2), Matrix<Integer>::Zero(2, 3), {}};
  d.push(1, 0) = 1;
  d.push(2, 1) = 1;
  d.pull(0, 0) = 1;
  d.pull(1, 1) = 2;  // breaks the projection formula
  CHECK_ERROR(Morphism::create(d), ErrorKind::InvalidMorphism);
  d.pull(1, 1) = 1;
  d.flags.proper = false;
  const auto f = Morphism::create(d);
  CHECK_ERROR(pushforward(f, cls(p1, {{"h^1", 1}})), ErrorKind::FlagViolation);
  d.flags.proper = true;
  d.flags.lci = false;
  const auto g = Morphism::create(d);
  CHECK_ERROR(pullback(g, cls(p2, {{"h^1", 1}})), ErrorKind::FlagViolation);
  CHECK(pushforward(g, cls(p1, {{"h^1", 1}})) == cls(p2, {{"h^2", 1}}));
}
