#pragma once

#include "nncirc/anchors.hpp"
#include "nncirc/circuit.hpp"
#include "nncirc/verify.hpp"

#include <nlohmann/json.hpp>

#include <variant>

namespace nncirc {

using Json = nlohmann::ordered_json;

// Either artifact parses from the same circuit schema; the "top" field
// distinguishes a symmetric profile from a decision list.
using CircuitDoc = std::variant<Depth2Circuit, DecisionList>;

Json circuit_to_json(const Depth2Circuit& c);
Json circuit_to_json(const DecisionList& l);
CircuitDoc circuit_from_json(const Json& j);

Json anchors_to_json(const AnchorSet& a);
AnchorSet anchors_from_json(const Json& j);
std::string anchors_to_csv(const AnchorSet& a);

Json report_to_json(const VerificationReport& r);

Oracle make_oracle(const CircuitDoc& doc);

}  // namespace nncirc
