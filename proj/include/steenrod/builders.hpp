#pragma once

#include "steenrod/chow.hpp"
#include "steenrod/variety.hpp"

#include <vector>

namespace steenrod {

/// P^n with cells h^0 .. h^n (h^i of codimension i).
VarietyHandle projective_space(int n);

/// Split quadric of odd dimension d = 2m + 1: cells h^0 .. h^m (linear
/// sections) and l_m .. l_0 (linear subspaces). Throws
/// EvenDimensionUnsupported for even d.
VarietyHandle odd_quadric(int d);

/// Kunneth product. Cells are labelled "a*b".
VarietyHandle product(const VarietyHandle& x, const VarietyHandle& y);
VarietyHandle product(const std::vector<VarietyHandle>& factors);

/// Index in x_times_y of the cell (i, j).
int product_cell(const CellularVariety& x_times_y, int i, int j);

template <typename Scalar>
ChowClass<Scalar> external_product(const ChowClass<Scalar>& x, const ChowClass<Scalar>& y,
                                   const VarietyHandle& x_times_y);
extern template IntegralClass external_product(const IntegralClass&, const IntegralClass&, const VarietyHandle&);
extern template RationalClass external_product(const RationalClass&, const RationalClass&, const VarietyHandle&);

ModPClass external_product(const ModPClass& x, const ModPClass& y, const VarietyHandle& x_times_y);

/// Class of the hyperplane section h; throws InvalidInput when the variety
/// has no distinguished hyperplane class.
RationalClass hyperplane_class(const VarietyHandle& x);

}  // namespace steenrod
