#include "helpers.hpp"

#include "steenrod/verify.hpp"

using namespace testing;

namespace {

// P^2 whose fundamental column of tau is 1 + h + h^2 instead of
// 1 + (3/2)h + h^2; this changes the K-lattice.
VarietyHandle corrupted_plane() {
  const auto good = projective_space(2);
  CellularVariety::Data d;
  d.name = "corrupted P^2";
  d.dim = 2;
  d.cells = good->cells();
  for (int i = 0; i < good->size(); ++i) d.mult.push_back(good->left_multiplication<Integer>(i));
  d.degree = good->degree_vector();
  d.tangent_ch = good->tangent_ch();
  d.tau = good->tau_matrix();
  d.tau(1, 0) = 1;
  d.hyperplane = 1;
  d.representatives = {"plane", "line", "point"};
  return CellularVariety::create(d);
}

}  // namespace

TEST_CASE("every suite passes on the desk varieties") {
  for (std::uint64_t seed : {1u, 2u}) {
    SuiteOptions o;
    o.seed = seed;
    o.trials = 30;
    for (const auto& name : suite_names()) {
      CAPTURE(name);
      CAPTURE(seed);
      const SuiteReport r = run_suite(name, o);
      CHECK(r.passed);
      CHECK(r.checks > 0);
      CHECK_FALSE(r.counterexample.has_value());
    }
  }
}

TEST_CASE("suites are deterministic for a fixed seed") {
  SuiteOptions o;
  o.seed = 11;
  o.trials = 10;
  for (const std::string name : {"whitney", "lift-independence", "segre"})
    CHECK(run_suite(name, o).to_json().dump() == run_suite(name, o).to_json().dump());
}

TEST_CASE("suites restricted by variety and prime") {
  SuiteOptions o;
  o.variety = parse_variety("P^6");
  o.primes = {5};
  const auto r = run_suite("xp", o);
  CHECK(r.passed);
  CHECK(r.checks == 12);

  SuiteOptions s;
  s.primes = {2};
  s.k = 4;
  const auto segre = run_suite("segre", s);
  CHECK(segre.passed);
  CHECK(segre.values == json::parse(R"({"P^4@p=2":"70"})"));

  SuiteOptions bad;
  bad.primes = {6};
  CHECK_ERROR(run_suite("xp", bad), ErrorKind::NotPrime);
  CHECK_ERROR(run_suite("nonsense"), ErrorKind::InvalidInput);
}

TEST_CASE("suites detect a corrupted variety") {
  SuiteOptions o;
  o.variety = corrupted_plane();
  for (const std::string name : {"psipower", "xp"}) {
    CAPTURE(name);
    const auto r = run_suite(name, o);
    CHECK_FALSE(r.passed);
    REQUIRE(r.counterexample.has_value());
    CHECK((*r.counterexample)["variety"] == "corrupted P^2");
  }
  CHECK_ERROR(run_suite("bott", o), ErrorKind::DecompositionFailure);
}
