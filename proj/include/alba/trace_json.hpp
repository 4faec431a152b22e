// JSON rendering of runs and classifications.
#pragma once

#include <json.hpp>

#include "alba/engine.hpp"

namespace alba {

nlohmann::json to_json(const Step& s, Notation n = Notation::Ascii);
nlohmann::json to_json(const AlbaResult& r, Notation n = Notation::Ascii);
/// {sahlqvist, variables, order_types}
nlohmann::json classification_json(const Inequality& ineq);

}  // namespace alba
