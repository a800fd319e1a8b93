#ifndef LEIBNIZ_LAW_IO_HPP
#define LEIBNIZ_LAW_IO_HPP

#include <string>

#include <json.hpp>

#include "leibniz/algebra.hpp"
#include "leibniz/iso.hpp"

namespace leibniz {

using Json = nlohmann::json;

/// Law JSON: {"dim": n, "basis": [names], "products": [{"left": name,
/// "right": name, "value": {name: "scalar"}}]}; order-insensitive, zero
/// products omitted.
Json law_to_json(const AlgebraLaw& law);
AlgebraLaw law_from_json(const Json& j);  // throws std::invalid_argument

/// Witness JSON: {"matrix": [["scalar", ...], ...]}.
Json witness_to_json(const BasisChange& p);
BasisChange witness_from_json(const Json& j);

Json invariants_to_json(const InvariantVector& v);

}  // namespace leibniz

#endif
