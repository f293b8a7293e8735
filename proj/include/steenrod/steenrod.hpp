#pragma once

#include "steenrod/chow.hpp"
#include "steenrod/ktheory.hpp"
#include "steenrod/morphism.hpp"

#include <vector>

namespace steenrod {

/// psi_p(x) = sum_k p^{-d-k} x_k with x_k integral of filtration level at
/// most d - k(p-1), and x_0 = x modulo lower filtration.
struct AtiyahDecomposition {
  KClass input;
  /// Filtration level d of the input (-1 for the zero class).
  int level = -1;
  long p = 0;
  std::vector<KClass> parts;
};

/// Greedy p-adic extraction, top dimension down. Throws ExtractionFailure
/// if a divisibility fails.
AtiyahDecomposition atiyah_decompose(const KClass& x, long p);

/// Number of operations S_0 .. S_K on X, K = [dim X / (p-1)].
int operation_count(const CellularVariety& x, long p);

/// Homological operations computed from an arbitrary integral K-lift of a
/// homogeneous class of dimension d (the lift's filtration level must be d).
/// Entry k lies in dimension d - k(p-1).
std::vector<ModPClass> homological_from_lift(const KClass& lift, int d, long p);

/// Reduced Steenrod operations S^X_k; mixed-dimensional inputs are processed
/// componentwise. Entry k lowers dimension by k(p-1).
std::vector<ModPClass> steenrod_homological(const ModPClass& x);
/// S_X = w^{CH,p}(T_X) o S^X, split into components S_X^k.
std::vector<ModPClass> steenrod_cohomological(const ModPClass& x);

ModPClass total(const std::vector<ModPClass>& components);

/// Degree of w^{CH,p}_k(-T_X) for dim X = k(p-1). Throws DimensionMismatch,
/// and DecompositionFailure if the value is not divisible by p.
Integer segre_number(const VarietyHandle& x, long p);

/// Zero-cycle with p-local coefficients whose degree is
/// p^{[d/(p-1)]} deg(x), produced by the recursion through atiyah_decompose.
/// `lambda` is prime to p and lambda * cycle is an integral zero-cycle.
struct DegreeWitness {
  RationalClass cycle;
  Integer lambda = 1;
  int level = -1;
  int exponent = 0;
  Rational input_degree = 0;
};

DegreeWitness degree_formula_witness(const KClass& x, long p);

struct ChiDefectReport {
  Integer map_degree = 0;
  Rational chi_source = 0;
  Rational chi_target = 0;
  /// chi(O_X) - deg(f) chi(O_Y)
  Rational defect = 0;
  KClass delta;
  int exponent = 0;
  /// Zero-cycle on the target of degree p^exponent * defect.
  RationalClass cycle;
  Integer lambda = 1;
};

/// Throws FlagViolation, DimensionMismatch, LevelViolation.
ChiDefectReport chi_defect(const Morphism& f, long p);

}  // namespace steenrod
