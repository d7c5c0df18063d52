#pragma once

// Line-delimited JSON records for forms and predictions.

#include <json.hpp>
#include <string>

#include "psg/oracles.hpp"
#include "psg/outcome.hpp"

namespace psg {

/// {"preperiod": "PNLN", "period": "L", "class": "SD-Left"}
nlohmann::json form_to_json(const EventualForm& form);
EventualForm form_from_json(const nlohmann::json& j);

/// Form record plus {"theorem", "applicable", "reason"} and the payload.
nlohmann::json prediction_to_json(const oracles::Prediction& p);

/// One compact JSON document per line.
std::string to_line(const nlohmann::json& j);

}  // namespace psg
