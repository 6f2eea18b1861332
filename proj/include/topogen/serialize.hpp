#pragma once

#include <json.hpp>

#include "topogen/core.hpp"
#include "topogen/invariants.hpp"
#include "topogen/oracle.hpp"

namespace topogen {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "topogen/1";

GroupSpec group_from_json(const Json& j);
Json to_json(const GroupSpec& g);

// {"kind": "unipotent", "partition": [...]} or with "decoration": [{"V": 2}, {"W": 2, "mult": 2}];
// {"kind": "semisimple", "mult_one": a, "mult_minus_one": b, "pairs": [{"label": "lam", "mult": c}], ...}.
ClassDescriptor class_from_json(const Json& j);
Json to_json(const ClassDescriptor& c);

Json to_json(const EigenProfile& p);
Json to_json(const Verdict& v);

}  // namespace topogen
