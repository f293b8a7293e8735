#pragma once

#include "steenrod/morphism.hpp"
#include "steenrod/serialization.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace steenrod {

struct SuiteOptions {
  std::uint64_t seed = 0;
  /// Restricts the primes a suite runs over; empty keeps the suite default.
  std::vector<long> primes;
  std::optional<int> n;
  std::optional<int> k;
  int trials = 100;
  /// Restricts variety-driven suites to one variety.
  VarietyHandle variety;
};

struct SuiteReport {
  std::string suite;
  bool passed = true;
  long checks = 0;
  /// First failing case, if any.
  std::optional<json> counterexample;
  /// Suite-specific values worth printing (e.g. characteristic numbers).
  json values = json::object();

  json to_json() const;
};

const std::vector<std::string>& suite_names();

/// Throws InvalidInput for an unknown suite. Internal extraction failures
/// propagate as exceptions.
SuiteReport run_suite(const std::string& name, const SuiteOptions& options = {});

/// P^1..P^6, P^a x P^b (1 <= a <= b, a + b <= 6), Q_3, Q_5, Q_7.
std::vector<VarietyHandle> desk_varieties();
/// P^a x P^b with 1 <= a <= b and a + b <= 6.
std::vector<VarietyHandle> desk_products();
/// Linear embeddings, Veronese maps, quadric embeddings, product
/// projections, self-maps of P^1 and an identity.
std::vector<Morphism> desk_morphisms();

/// Line bundles O(i) (or O(a, b) on products) with |i|, |a|, |b| <= bound.
std::vector<VirtualBundle> line_bundles(const VarietyHandle& x, int bound);

}  // namespace steenrod
