#include "helpers.hpp"

#include "steenrod/serialization.hpp"
#include "steenrod/steenrod.hpp"

#include <cstdio>
#include <fstream>

using namespace testing;

TEST_CASE("classes round trip through JSON") {
  const auto q3 = odd_quadric(3);
  const auto x = cls(q3, {{"h^1", 0}, {"l_1", -3}, {"h^0", 1}});
  const json j = to_json(x);
  CHECK(j == json::parse(R"({"h^0":"1","l_1":"-3"})"));
  CHECK(integral_class_from_json(q3, j) == x);
  CHECK(integral_class_from_json(q3, json::parse(R"({"l_1": -3, "1": 1})")) == x);
  CHECK(integral_class_from_json(q3, json::parse("{}")).is_zero());
  CHECK_ERROR(integral_class_from_json(q3, json::parse(R"({"h^7":"1"})")), ErrorKind::UnknownLabel);
  CHECK_ERROR(integral_class_from_json(q3, json::parse(R"({"l_1":"1/2"})")), ErrorKind::InvalidInput);
  CHECK_ERROR(integral_class_from_json(q3, json::parse(R"(["l_1"])")), ErrorKind::InvalidInput);

  const auto r = rcls(q3, {{"l_0", "-7/3"}});
  CHECK(rational_class_from_json(q3, to_json(r)) == r);
  CHECK(to_json(mcls(q3, 3, {{"l_0", -1}})) == json::parse(R"({"l_0":"2"})"));
}

TEST_CASE("bundles and K-classes") {
  const auto p2 = projective_space(2);
  const VirtualBundle t = VirtualBundle::tangent(p2);
  CHECK(to_json(t) == json::parse(R"({"rank":"2","ch":{"h^0":"2","h^1":"3","h^2":"3/2"}})"));
  CHECK(bundle_from_json(p2, json::parse(R"({"rank":"2","ch":{"1":"2","h^1":"3","h^2":"3/2"}})")) == t);
  CHECK_ERROR(bundle_from_json(p2, json::parse(R"({"rank":"3","ch":{"1":"2"}})")), ErrorKind::InvalidInput);
  const KClass k = k0_from_chow_lift(cls(p2, {{"h^1", 1}}));
  CHECK(to_json(k) == json::parse(R"({"tau":{"h^1":"1","h^2":"1"},"integral":true})"));
  CHECK(kclass_from_json(p2, to_json(k)) == k);
  CHECK_ERROR(kclass_from_json(p2, json::parse(R"({"tau":{"h^2":"1/2"},"integral":true})")),
              ErrorKind::NonIntegralInput);
}

TEST_CASE("variety specs") {
  CHECK(variety_from_json(json::parse(R"({"type":"projective_space","n":3})"))->name() == "P^3");
  CHECK(variety_from_json(json::parse(R"({"type":"odd_quadric","dim":5})"))->name() == "Q_5");
  const auto xy = variety_from_json(
      json::parse(R"({"type":"product","factors":[{"type":"projective_space","n":1},{"type":"odd_quadric","dim":3}]})"));
  CHECK(xy->name() == "P^1xQ_3");
  CHECK(variety_spec(*xy) ==
        json::parse(R"({"type":"product","factors":[{"type":"projective_space","n":1},{"type":"odd_quadric","dim":3}]})"));
  const auto triple = parse_variety("P^1xP^2xQ_3");
  CHECK(triple->dim() == 6);
  CHECK(variety_spec(*triple)["factors"].size() == 3);
  CHECK(parse_variety("P^6")->dim() == 6);
  CHECK(parse_variety("Q_3")->name() == "Q_3");
  CHECK_ERROR(parse_variety("{\"type\":\"grassmannian\"}"), ErrorKind::InvalidVariety);
  CHECK_ERROR(parse_variety("{\"type\":\"projective_space\"}"), ErrorKind::InvalidInput);
  CHECK_ERROR(parse_variety("{bad"), ErrorKind::InvalidInput);
  CHECK_ERROR(parse_variety("G(2,4)"), ErrorKind::InvalidInput);
  CHECK_ERROR(parse_variety("Q_4"), ErrorKind::EvenDimensionUnsupported);

  const std::string path = "variety_spec_test.json";
  {
    std::ofstream out(path);
    out << R"({"type":"odd_quadric","dim":7})";
  }
  CHECK(parse_variety(path)->name() == "Q_7");
  std::remove(path.c_str());
}

TEST_CASE("morphism specs") {
  CHECK(morphism_from_json(json::parse(R"({"kind":"linear_embedding","m":1,"n":3})")).target()->name() == "P^3");
  CHECK(morphism_from_json(json::parse(R"({"kind":"veronese","n":2,"deg":2})")).target()->name() == "P^5");
  CHECK(morphism_from_json(json::parse(R"({"kind":"quadric_in_projective","d":3})")).source()->name() == "Q_3");
  CHECK(morphism_from_json(json::parse(R"({"kind":"linear_in_quadric","j":1,"d":3})")).source()->name() == "P^1");
  CHECK(morphism_from_json(json::parse(R"({"kind":"pn_self_map","m":3})")).degree() == 3);
  const auto proj = morphism_from_json(json::parse(
      R"({"kind":"product_projection","index":1,"variety":{"type":"product","factors":[{"type":"projective_space","n":1},{"type":"projective_space","n":2}]}})"));
  CHECK(proj.target()->name() == "P^2");
  CHECK(morphism_from_json(json::parse(R"({"kind":"identity","variety":{"type":"projective_space","n":2}})")).degree() == 1);
  CHECK_ERROR(morphism_from_json(json::parse(R"({"kind":"blowup"})")), ErrorKind::UnknownKind);
  CHECK_ERROR(morphism_from_json(json::parse(R"({"kind":"linear_embedding","m":3,"n":1})")),
              ErrorKind::IncompatibleDimensions);
}

TEST_CASE("operation result") {
  const auto p2 = projective_space(2);
  const auto input = cls(p2, {{"h^1", 1}});
  const auto ops = steenrod_cohomological(ModPClass::reduce(input, 2));
  const json j = operation_result(p2, 2, input, ops, Convention::Cohomological);
  CHECK(j["convention"] == "cohomological");
  CHECK(j["p"] == 2);
  CHECK(j["input"] == json::parse(R"({"h^1":"1"})"));
  CHECK(j["ops"]["S_0"] == json::parse(R"({"h^1":"1"})"));
  CHECK(j["ops"]["S_1"] == json::parse(R"({"h^2":"1"})"));
  CHECK(j["ops"]["S_2"] == json::object());
  CHECK(j.dump() == operation_result(p2, 2, input, ops, Convention::Cohomological).dump());
}
