#pragma once

#include "steenrod/builders.hpp"
#include "steenrod/chow.hpp"
#include "steenrod/errors.hpp"

#include <doctest.h>

#include <map>
#include <optional>
#include <string>

namespace testing {

using namespace steenrod;

inline IntegralClass cls(const VarietyHandle& x, const std::map<std::string, long>& coeffs) {
  return make_class(x, coeffs);
}

inline RationalClass rcls(const VarietyHandle& x, const std::map<std::string, std::string>& coeffs) {
  std::map<std::string, Rational> parsed;
  for (const auto& [k, v] : coeffs) parsed[k] = parse_rational(v);
  return make_rational_class(x, parsed);
}

inline ModPClass mcls(const VarietyHandle& x, long p, const std::map<std::string, long>& coeffs) {
  return ModPClass::reduce(cls(x, coeffs), p);
}

template <typename F>
std::optional<ErrorKind> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace testing

#define CHECK_ERROR(expr, error_kind) CHECK(::testing::error_of([&] { (void)(expr); }) == (error_kind))
