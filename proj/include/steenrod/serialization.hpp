#pragma once

#include "steenrod/char_classes.hpp"
#include "steenrod/chow.hpp"
#include "steenrod/ktheory.hpp"
#include "steenrod/morphism.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace steenrod {

using json = nlohmann::json;

/// Nonzero coefficients only, as {"label": "decimal"}.
json to_json(const IntegralClass& x);
json to_json(const RationalClass& x);
json to_json(const ModPClass& x);
json to_json(const VirtualBundle& e);
json to_json(const KClass& x);

/// Values may be decimal strings or JSON integers; "1" names the fundamental class.
IntegralClass integral_class_from_json(const VarietyHandle& x, const json& j);
RationalClass rational_class_from_json(const VarietyHandle& x, const json& j);
VirtualBundle bundle_from_json(const VarietyHandle& x, const json& j);
KClass kclass_from_json(const VarietyHandle& x, const json& j);

/// {"type":"projective_space","n":3} | {"type":"product","factors":[...]} |
/// {"type":"odd_quadric","dim":5}
VarietyHandle variety_from_json(const json& spec);
json variety_spec(const CellularVariety& x);

/// JSON text, a path to a JSON file, or shorthand such as "P^3", "Q_5", "P^1xP^2".
VarietyHandle parse_variety(const std::string& text);

/// {"kind":"linear_embedding","m":1,"n":2}, {"kind":"veronese","n":1,"deg":2},
/// {"kind":"quadric_in_projective","d":3}, {"kind":"linear_in_quadric","j":1,"d":3},
/// {"kind":"product_projection","variety":{...},"index":0}, {"kind":"pn_self_map","m":3},
/// {"kind":"identity","variety":{...}}
Morphism morphism_from_json(const json& spec);

enum class Convention { Cohomological, Homological };

std::string to_string(Convention c);

json operation_result(const VarietyHandle& x, long p, const IntegralClass& input, const std::vector<ModPClass>& ops,
                      Convention convention);

/// Parses JSON text, throwing InvalidInput with the parser message.
json parse_json(const std::string& text);

}  // namespace steenrod
