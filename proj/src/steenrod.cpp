#include "steenrod/steenrod.hpp"

#include "steenrod/errors.hpp"

#include <boost/integer/common_factor.hpp>

namespace steenrod {

AtiyahDecomposition atiyah_decompose(const KClass& x, long p) {
  require_prime(p);
  require_integral(x);
  AtiyahDecomposition out{x, -1, p, {}};
  if (x.is_zero()) return out;

  const auto& v = x.variety;
  const int d = filtration_level(x);
  const int step = static_cast<int>(p - 1);
  const int top_k = d / step;
  out.level = d;
  out.parts.assign(static_cast<std::size_t>(top_k + 1), KClass::zero(v));

  const Vector<Rational> psi = adams_lower(x, p).tau;
  Vector<Rational> residual = psi;
  for (int j = d; j >= 0; --j) {
    const int k = (d - j) / step;
    const Rational scale = power(Rational(p), d + k);
    IntegralClass m(v);
    for (int i : v->cells_of_dim(j)) {
      const Rational value = scale * residual[i];
      if (!is_integer(value))
        fail(ErrorKind::ExtractionFailure, v->name() + ", p=" + std::to_string(p) + ", level " + std::to_string(d) +
                                               ": p^" + std::to_string(d + k) + " * residual[" + v->cell(i).label +
                                               "] = " + value.str() + " is not an integer");
      m[i] = numerator_of(value);
    }
    if (m.is_zero()) continue;
    const KClass lift = k0_from_chow_lift(m);
    residual -= lift.tau / scale;
    out.parts[static_cast<std::size_t>(k)] += lift;
  }
  if (!is_zero(residual)) fail(ErrorKind::ExtractionFailure, "nonzero residual after extraction on " + v->name());

  Vector<Rational> rebuilt = Vector<Rational>::Zero(v->size());
  for (int k = 0; k <= top_k; ++k) {
    const auto& part = out.parts[static_cast<std::size_t>(k)];
    rebuilt += part.tau / power(Rational(p), d + k);
    if (!part.is_zero() && filtration_level(part) > d - k * step)
      fail(ErrorKind::ExtractionFailure, "part " + std::to_string(k) + " exceeds its filtration bound");
  }
  if (rebuilt != psi) fail(ErrorKind::ExtractionFailure, "parts do not reassemble psi_p(x)");
  if (grade_component(out.parts[0].tau_class(), d) != grade_component(x.tau_class(), d))
    fail(ErrorKind::ExtractionFailure, "x_0 differs from x in the top graded piece");
  return out;
}

int operation_count(const CellularVariety& x, long p) { return x.dim() / static_cast<int>(p - 1) + 1; }

std::vector<ModPClass> homological_from_lift(const KClass& lift, int d, long p) {
  const auto& v = lift.variety;
  std::vector<ModPClass> out(static_cast<std::size_t>(operation_count(*v, p)), ModPClass(v, p));
  if (lift.is_zero()) return out;
  if (filtration_level(lift) > d)
    fail(ErrorKind::LevelViolation, "lift has filtration level above " + std::to_string(d));
  const AtiyahDecomposition dec = atiyah_decompose(lift, p);
  // A lift of lower level represents zero in CH_d.
  if (dec.level != d) return out;
  const int step = static_cast<int>(p - 1);
  for (std::size_t k = 0; k < dec.parts.size(); ++k) {
    const RationalClass piece = grade_component(dec.parts[k].tau_class(), d - static_cast<int>(k) * step);
    out[k] = ModPClass::reduce(to_integral(piece), p);
  }
  return out;
}

std::vector<ModPClass> steenrod_homological(const ModPClass& x) {
  const auto& v = x.variety();
  const long p = x.p();
  std::vector<ModPClass> out(static_cast<std::size_t>(operation_count(*v, p)), ModPClass(v, p));
  for (int d = 0; d <= v->dim(); ++d) {
    const ModPClass piece = grade_component(x, d);
    if (piece.is_zero()) continue;
    const auto ops = homological_from_lift(k0_from_chow_lift(piece.lift()), d, p);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += ops[k];
  }
  return out;
}

std::vector<ModPClass> steenrod_cohomological(const ModPClass& x) {
  const auto& v = x.variety();
  const long p = x.p();
  const auto hom = steenrod_homological(x);
  const IntegralClass w = to_integral(w_chp(VirtualBundle::tangent(v), p));
  const int step = static_cast<int>(p - 1);
  std::vector<ModPClass> out(hom.size(), ModPClass(v, p));
  for (std::size_t i = 0; i < hom.size(); ++i) {
    const ModPClass wi = ModPClass::reduce(codim_component(w, static_cast<int>(i) * step), p);
    if (wi.is_zero()) continue;
    for (std::size_t j = 0; i + j < hom.size(); ++j) out[i + j] += mul(wi, hom[j]);
  }
  return out;
}

ModPClass total(const std::vector<ModPClass>& components) {
  if (components.empty()) fail(ErrorKind::InvalidInput, "total of no components");
  ModPClass out = components.front();
  for (std::size_t k = 1; k < components.size(); ++k) out += components[k];
  return out;
}

Integer segre_number(const VarietyHandle& x, long p) {
  require_prime(p);
  const int step = static_cast<int>(p - 1);
  if (x->dim() == 0 || x->dim() % step != 0)
    fail(ErrorKind::DimensionMismatch, x->name() + " does not have positive dimension divisible by " + std::to_string(step));
  const Rational value = degree(w_chp(-VirtualBundle::tangent(x), p));
  const Integer n = to_integer(value);
  if (n % p != 0)
    fail(ErrorKind::DecompositionFailure, "characteristic number " + n.str() + " of " + x->name() + " is not divisible by " +
                                              std::to_string(p));
  return n;
}

namespace {

DegreeWitness witness_rec(const KClass& x, long p) {
  const auto& v = x.variety;
  DegreeWitness out{RationalClass(v), 1, -1, 0, euler_char(x)};
  if (x.is_zero()) return out;
  const int e = filtration_level(x);
  out.level = e;
  if (e == 0) {
    out.cycle = to_rational(phi_top(x));
    return out;
  }
  const AtiyahDecomposition dec = atiyah_decompose(x, p);
  const int top_k = e / static_cast<int>(p - 1);
  out.exponent = top_k;
  const Integer unit = power(Integer(p), static_cast<unsigned long>(e)) - 1;
  Integer lambda = 1;
  RationalClass sum(v);
  auto absorb = [&](const KClass& y, int target_exponent) {
    if (y.is_zero()) return;
    const DegreeWitness w = witness_rec(y, p);
    sum += w.cycle * power(Rational(p), target_exponent - w.exponent);
    lambda = boost::integer::lcm(lambda, w.lambda);
  };
  absorb(dec.parts[0] - x, top_k);
  for (int k = 1; k <= top_k; ++k) absorb(dec.parts[static_cast<std::size_t>(k)], top_k - k);
  out.cycle = sum * (Rational(1) / Rational(unit));
  out.lambda = lambda * unit;
  return out;
}

void check_witness(const DegreeWitness& w, long p) {
  const Rational expected = power(Rational(p), w.exponent) * w.input_degree;
  if (degree(w.cycle) != expected)
    fail(ErrorKind::ExtractionFailure, "degree witness has degree " + degree(w.cycle).str() + ", expected " + expected.str());
  for (int i = 0; i < w.cycle.size(); ++i) {
    if (w.cycle.variety()->cell_dim(i) != 0 && w.cycle[i] != 0)
      fail(ErrorKind::ExtractionFailure, "degree witness is not a zero-cycle");
    if (denominator_of(w.cycle[i]) % p == 0) fail(ErrorKind::ExtractionFailure, "degree witness is not p-local");
  }
  if (w.lambda % p == 0) fail(ErrorKind::ExtractionFailure, "lambda is divisible by p");
  if (!is_integral((w.cycle * Rational(w.lambda)).coeffs()))
    fail(ErrorKind::ExtractionFailure, "lambda does not clear the denominators of the witness");
}

}  // namespace

DegreeWitness degree_formula_witness(const KClass& x, long p) {
  require_prime(p);
  require_integral(x);
  DegreeWitness w = witness_rec(x, p);
  check_witness(w, p);
  return w;
}

ChiDefectReport chi_defect(const Morphism& f, long p) {
  require_prime(p);
  if (!f.flags().proper) fail(ErrorKind::FlagViolation, f.name() + " is not proper");
  const auto& x = f.source();
  const auto& y = f.target();
  const int d = x->dim();
  if (y->dim() != d || d < 1)
    fail(ErrorKind::DimensionMismatch, "chi defect needs source and target of the same positive dimension");
  ChiDefectReport out{f.degree(), 0, 0, 0, KClass::zero(y), 0, RationalClass(y), 1};
  const KClass ox = k0_from_chow_lift(IntegralClass::unit(x));
  const KClass oy = k0_from_chow_lift(IntegralClass::unit(y));
  out.chi_source = euler_char(ox);
  out.chi_target = euler_char(oy);
  out.defect = out.chi_source - Rational(out.map_degree) * out.chi_target;
  out.delta = k_pushforward(f, ox) - Rational(out.map_degree) * oy;
  if (!out.delta.is_zero() && filtration_level(out.delta) > d - 1)
    fail(ErrorKind::LevelViolation, "f_*[O_X] - deg(f)[O_Y] does not drop filtration level");
  if (euler_char(out.delta) != out.defect)
    fail(ErrorKind::ExtractionFailure, "degree of delta differs from the chi defect");
  out.exponent = (d - 1) / static_cast<int>(p - 1);
  const DegreeWitness w = degree_formula_witness(out.delta, p);
  out.cycle = w.cycle * power(Rational(p), out.exponent - w.exponent);
  out.lambda = w.lambda;
  if (degree(out.cycle) != power(Rational(p), out.exponent) * out.defect)
    fail(ErrorKind::ExtractionFailure, "chi defect witness has the wrong degree");
  return out;
}

}  // namespace steenrod
