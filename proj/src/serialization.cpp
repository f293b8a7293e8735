#include "steenrod/serialization.hpp"

#include "steenrod/builders.hpp"
#include "steenrod/errors.hpp"

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

namespace steenrod {

namespace {

template <typename Class>
json coefficients_to_json(const Class& x) {
  json out = json::object();
  for (int i = 0; i < x.size(); ++i)
    if (x[i] != 0) out[x.variety()->cell(i).label] = to_string(x[i]);
  return out;
}

std::string scalar_text(const json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return value.dump();
  fail(ErrorKind::InvalidInput, "coefficient " + value.dump() + " is not a decimal string or integer");
}

void require_object(const json& j, const std::string& what) {
  if (!j.is_object()) fail(ErrorKind::InvalidInput, what + " must be a JSON object");
}

int int_field(const json& spec, const char* key) {
  if (!spec.contains(key) || !spec[key].is_number_integer())
    fail(ErrorKind::InvalidInput, std::string("missing integer field \"") + key + "\" in " + spec.dump());
  return spec[key].get<int>();
}

VarietyHandle shorthand_factor(const std::string& text) {
  static const std::regex pattern(R"(([PQ])[\^_]?(\d+))");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) fail(ErrorKind::InvalidInput, "cannot parse variety \"" + text + "\"");
  const int n = std::stoi(m[2]);
  return m[1] == "P" ? projective_space(n) : odd_quadric(n);
}

}  // namespace

json to_json(const IntegralClass& x) { return coefficients_to_json(x); }
json to_json(const RationalClass& x) { return coefficients_to_json(x); }

json to_json(const ModPClass& x) {
  json out = json::object();
  for (int i = 0; i < x.size(); ++i)
    if (x[i] != 0) out[x.variety()->cell(i).label] = std::to_string(x[i]);
  return out;
}

json to_json(const VirtualBundle& e) { return {{"rank", to_string(e.rank())}, {"ch", to_json(e.ch())}}; }

json to_json(const KClass& x) { return {{"tau", to_json(x.tau_class())}, {"integral", x.integral}}; }

IntegralClass integral_class_from_json(const VarietyHandle& x, const json& j) {
  require_object(j, "class");
  IntegralClass out(x);
  for (const auto& [label, value] : j.items()) out[x->index_of(label)] += parse_integer(scalar_text(value));
  return out;
}

RationalClass rational_class_from_json(const VarietyHandle& x, const json& j) {
  require_object(j, "class");
  RationalClass out(x);
  for (const auto& [label, value] : j.items()) out[x->index_of(label)] += parse_rational(scalar_text(value));
  return out;
}

VirtualBundle bundle_from_json(const VarietyHandle& x, const json& j) {
  require_object(j, "bundle");
  if (!j.contains("ch")) fail(ErrorKind::InvalidInput, "bundle needs a \"ch\" field");
  VirtualBundle e(rational_class_from_json(x, j["ch"]));
  if (j.contains("rank") && parse_rational(scalar_text(j["rank"])) != Rational(e.rank()))
    fail(ErrorKind::InvalidInput, "declared rank does not match ch_0");
  return e;
}

KClass kclass_from_json(const VarietyHandle& x, const json& j) {
  require_object(j, "K-class");
  if (!j.contains("tau")) fail(ErrorKind::InvalidInput, "K-class needs a \"tau\" field");
  const bool integral = j.value("integral", true);
  KClass out(x, rational_class_from_json(x, j["tau"]).coeffs(), integral);
  if (integral) require_integral(out);
  return out;
}

VarietyHandle variety_from_json(const json& spec) {
  require_object(spec, "variety spec");
  const std::string type = spec.value("type", "");
  if (type == "projective_space") return projective_space(int_field(spec, "n"));
  if (type == "odd_quadric") return odd_quadric(int_field(spec, "dim"));
  if (type == "product") {
    if (!spec.contains("factors") || !spec["factors"].is_array() || spec["factors"].size() < 2)
      fail(ErrorKind::InvalidInput, "product needs at least two factors");
    std::vector<VarietyHandle> factors;
    for (const auto& f : spec["factors"]) factors.push_back(variety_from_json(f));
    return product(factors);
  }
  fail(ErrorKind::InvalidVariety, "unknown variety type \"" + type + "\"");
}

json variety_spec(const CellularVariety& x) {
  if (!x.factors().empty()) {
    json factors = json::array();
    std::vector<const CellularVariety*> stack;
    // Products fold to the left; flatten back to the factor list.
    const CellularVariety* cur = &x;
    while (!cur->factors().empty()) {
      stack.push_back(cur->factors()[1].get());
      cur = cur->factors()[0].get();
    }
    factors.push_back(variety_spec(*cur));
    for (auto it = stack.rbegin(); it != stack.rend(); ++it) factors.push_back(variety_spec(**it));
    return {{"type", "product"}, {"factors", factors}};
  }
  if (x.name().rfind("Q_", 0) == 0) return {{"type", "odd_quadric"}, {"dim", x.dim()}};
  return {{"type", "projective_space"}, {"n", x.dim()}};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

VarietyHandle parse_variety(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') return variety_from_json(parse_json(text));
  std::error_code ec;
  if (std::filesystem::is_regular_file(text, ec)) {
    std::ifstream in(text);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return variety_from_json(parse_json(buffer.str()));
  }
  std::vector<VarietyHandle> factors;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find('x', start);
    factors.push_back(shorthand_factor(text.substr(start, pos - start)));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return factors.size() == 1 ? factors.front() : product(factors);
}

Morphism morphism_from_json(const json& spec) {
  require_object(spec, "morphism spec");
  const std::string kind = spec.value("kind", "");
  if (kind == "linear_embedding") return linear_embedding(int_field(spec, "m"), int_field(spec, "n"));
  if (kind == "veronese") return veronese(int_field(spec, "n"), int_field(spec, "deg"));
  if (kind == "quadric_in_projective") return quadric_in_projective(int_field(spec, "d"));
  if (kind == "linear_in_quadric") return linear_in_quadric(int_field(spec, "j"), int_field(spec, "d"));
  if (kind == "pn_self_map") return pn_self_map(int_field(spec, "m"));
  if (kind == "product_projection" || kind == "identity") {
    if (!spec.contains("variety")) fail(ErrorKind::InvalidInput, kind + " needs a \"variety\" field");
    const auto x = variety_from_json(spec["variety"]);
    if (kind == "identity") return identity_morphism(x);
    return product_projection(x, int_field(spec, "index"));
  }
  fail(ErrorKind::UnknownKind, "unknown morphism kind \"" + kind + "\"");
}

std::string to_string(Convention c) { return c == Convention::Cohomological ? "cohomological" : "homological"; }

json operation_result(const VarietyHandle& x, long p, const IntegralClass& input, const std::vector<ModPClass>& ops,
                      Convention convention) {
  json out_ops = json::object();
  for (std::size_t k = 0; k < ops.size(); ++k) out_ops["S_" + std::to_string(k)] = to_json(ops[k]);
  return {{"variety", variety_spec(*x)},
          {"p", p},
          {"input", to_json(input)},
          {"ops", out_ops},
          {"convention", to_string(convention)}};
}

}  // namespace steenrod
