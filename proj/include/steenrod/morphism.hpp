#pragma once

#include "steenrod/char_classes.hpp"
#include "steenrod/chow.hpp"

#include <optional>
#include <string>

namespace steenrod {

struct MorphismFlags {
  bool proper = true;
  bool lci = true;
  bool flat = false;
  bool smooth_source = true;
  bool smooth_target = true;
};

/// A map between builder varieties, given as data: the push-forward matrix
/// CH(source) -> CH(target), the pull-back matrix CH(target) -> CH(source)
/// and the virtual tangent bundle T_f = T_source - f^* T_target.
class Morphism {
 public:
  struct Data {
    std::string kind;
    VarietyHandle source;
    VarietyHandle target;
    /// target.size() x source.size(), dimension preserving.
    Matrix<Integer> push;
    /// source.size() x target.size(), codimension preserving ring map.
    Matrix<Integer> pull;
    MorphismFlags flags;
  };

  /// Checks grading, multiplicativity of pull-back and the projection
  /// formula on all basis pairs, and the rank of T_f. Throws InvalidMorphism.
  static Morphism create(Data data);

  const std::string& kind() const { return data_.kind; }
  std::string name() const;
  const VarietyHandle& source() const { return data_.source; }
  const VarietyHandle& target() const { return data_.target; }
  const Matrix<Integer>& push_matrix() const { return data_.push; }
  const Matrix<Integer>& pull_matrix() const { return data_.pull; }
  const MorphismFlags& flags() const { return data_.flags; }
  /// Virtual tangent bundle; present when the morphism is lci.
  const std::optional<VirtualBundle>& tangent() const { return tangent_; }
  /// Degree on fundamental classes (zero when dimensions differ).
  Integer degree() const;

 private:
  explicit Morphism(Data data) : data_(std::move(data)) {}

  Data data_;
  std::optional<VirtualBundle> tangent_;
};

Morphism linear_embedding(int m, int n);
/// Veronese embedding of P^n of the given degree into P^N, N = C(n+deg, n) - 1.
Morphism veronese(int n, int deg);
Morphism quadric_in_projective(int d);
Morphism linear_in_quadric(int j, int d);
/// Projection of x_times_y onto factor `index` (0 or 1).
Morphism product_projection(const VarietyHandle& x_times_y, int index);
/// Self-map of P^1 of degree m.
Morphism pn_self_map(int m);
Morphism identity_morphism(const VarietyHandle& x);

/// Throws FlagViolation unless f is proper.
IntegralClass pushforward(const Morphism& f, const IntegralClass& x);
RationalClass pushforward(const Morphism& f, const RationalClass& x);
ModPClass pushforward(const Morphism& f, const ModPClass& x);
/// Throws FlagViolation unless f is lci or flat.
IntegralClass pullback(const Morphism& f, const IntegralClass& y);
RationalClass pullback(const Morphism& f, const RationalClass& y);
ModPClass pullback(const Morphism& f, const ModPClass& y);
VirtualBundle pullback(const Morphism& f, const VirtualBundle& e);

}  // namespace steenrod
