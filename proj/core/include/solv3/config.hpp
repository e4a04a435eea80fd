#pragma once

#include <string>

#include <json.hpp>

#include "solv3/controllability.hpp"
#include "solv3/system.hpp"

namespace solv3 {

// Builds a system from its JSON description:
//   {"group": {"class": "...", "lambda": ..., "n": ...},
//    "derivation": {"dstar": [[a,b],[c,d]], "xi": [x,y]},
//    "controls": [[a, w1, w2], ...]}
// Unknown keys are rejected (ParseError); structurally valid input that
// violates a model constraint raises SemanticError.
LinearSystem parse_system(const nlohmann::json& j);
LinearSystem parse_system_text(const std::string& text);

nlohmann::json serialize_system(const LinearSystem& sys);

// JSON form of a decision, with the spectrum as [re, im] pairs sorted
// lexicographically.
nlohmann::json verdict_record(const Verdict& v);

}  // namespace solv3
