#pragma once

#include "steenrod/scalar.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

namespace steenrod {

struct Cell {
  std::string label;
  int dim = 0;
};

class CellularVariety;
using VarietyHandle = std::shared_ptr<const CellularVariety>;

/// Finite presentation of a split cellular variety: a graded basis of cell
/// closures, the multiplication table of the Chow ring, the degree on
/// zero-cycles, the Chern character of the tangent bundle, and the matrix of
/// Riemann-Roch images of the structure sheaves of the cell closures.
///
/// Cells are ordered by increasing codimension, so the tau matrix is unit
/// lower triangular. All invariants are checked exhaustively by create().
class CellularVariety {
 public:
  struct Data {
    std::string name;
    int dim = 0;
    std::vector<Cell> cells;
    /// mult[i](k, j) is the coefficient of cell k in cell_i * cell_j.
    std::vector<Matrix<Integer>> mult;
    Vector<Integer> degree;
    Vector<Rational> tangent_ch;
    /// Column j is tau[O_Z] for the closure Z of cell j.
    Matrix<Rational> tau;
    /// Smooth representative whose structure sheaf gives each tau column.
    std::vector<std::string> representatives;
    /// Index of the hyperplane class, when the variety has a distinguished one.
    std::optional<int> hyperplane;
    std::vector<VarietyHandle> factors;
    /// For product varieties: factor cell indices of each cell.
    std::vector<std::vector<int>> factor_cells;
  };

  /// Validates the data and freezes it. Throws InvalidVariety.
  static VarietyHandle create(Data data);

  const std::string& name() const { return data_.name; }
  int dim() const { return data_.dim; }
  int size() const { return static_cast<int>(data_.cells.size()); }
  const std::vector<Cell>& cells() const { return data_.cells; }
  const Cell& cell(int i) const { return data_.cells.at(static_cast<std::size_t>(i)); }
  int cell_dim(int i) const { return cell(i).dim; }
  int cell_codim(int i) const { return data_.dim - cell(i).dim; }
  int fundamental_index() const { return fundamental_; }
  /// Accepts "1" as an alias for the fundamental class. Throws UnknownLabel.
  int index_of(const std::string& label) const;
  bool has_label(const std::string& label) const;

  const Vector<Integer>& degree_vector() const { return data_.degree; }
  const Vector<Rational>& tangent_ch() const { return data_.tangent_ch; }
  const Matrix<Rational>& tau_matrix() const { return data_.tau; }
  const std::vector<std::string>& representatives() const { return data_.representatives; }
  std::optional<int> hyperplane() const { return data_.hyperplane; }
  const std::vector<VarietyHandle>& factors() const { return data_.factors; }
  const std::vector<std::vector<int>>& factor_cells() const { return data_.factor_cells; }

  const Integer& structure_constant(int i, int j, int k) const { return data_.mult[static_cast<std::size_t>(i)](k, j); }

  template <typename Scalar>
  const Matrix<Scalar>& left_multiplication(int i) const;

  /// Nonzero structure constants of cell_i * cell_j.
  struct Term {
    int cell;
    Integer integer;
    Rational rational;
  };
  const std::vector<Term>& terms(int i, int j) const { return terms_[static_cast<std::size_t>(i * size() + j)]; }

  template <typename Scalar>
  Vector<Scalar> multiply(const Vector<Scalar>& a, const Vector<Scalar>& b) const {
    Vector<Scalar> out = Vector<Scalar>::Zero(size());
    for (int i = 0; i < size(); ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; j < size(); ++j) {
        if (b[j] == 0) continue;
        const Scalar ab = a[i] * b[j];
        for (const Term& t : terms(i, j)) {
          if constexpr (std::is_same_v<Scalar, Integer>)
            out[t.cell] += t.integer == 1 ? ab : ab * t.integer;
          else
            out[t.cell] += t.integer == 1 ? ab : ab * t.rational;
        }
      }
    }
    return out;
  }

  Vector<Residue> multiply_mod(const Vector<Residue>& a, const Vector<Residue>& b, Residue p) const;

  /// Cells of the given dimension.
  std::vector<int> cells_of_dim(int d) const;

  template <typename Scalar>
  Vector<Scalar> basis_vector(int i) const {
    Vector<Scalar> v = Vector<Scalar>::Zero(size());
    v[i] = 1;
    return v;
  }

 private:
  explicit CellularVariety(Data data);
  void validate();

  Data data_;
  int fundamental_ = -1;
  std::vector<Matrix<Rational>> mult_rational_;
  std::vector<std::vector<Term>> terms_;
  std::map<std::string, int> index_;
};

template <>
inline const Matrix<Integer>& CellularVariety::left_multiplication<Integer>(int i) const {
  return data_.mult[static_cast<std::size_t>(i)];
}
template <>
inline const Matrix<Rational>& CellularVariety::left_multiplication<Rational>(int i) const {
  return mult_rational_[static_cast<std::size_t>(i)];
}

/// Same presentation; compares names, which encode the builder parameters.
bool same_variety(const CellularVariety& a, const CellularVariety& b);
void require_same_variety(const CellularVariety& a, const CellularVariety& b);

}  // namespace steenrod
