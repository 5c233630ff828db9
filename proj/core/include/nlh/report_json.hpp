#pragma once

#include <nlohmann/json.hpp>

#include "nlh/alphabet.hpp"
#include "nlh/hnn.hpp"
#include "nlh/rewrite.hpp"

namespace nlh {

// Structured forms of the reports. Keys are emitted in a fixed order and
// rationals as strings so that equal inputs give byte-identical documents.

nlohmann::ordered_json to_json(const CheckReport& report);
nlohmann::ordered_json to_json(const GsbReport& report, const RelationSet& s,
                               const Alphabet& alphabet);
nlohmann::ordered_json to_json(const HnnPresentation& pres);
nlohmann::ordered_json to_json(const EmbeddingReport& report, const Alphabet& alphabet);
nlohmann::ordered_json to_json(const FreeSubalgebraReport& report, const Alphabet& alphabet);

}  // namespace nlh
