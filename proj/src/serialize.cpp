#include "psg/serialize.hpp"

#include "psg/error.hpp"

namespace psg {

nlohmann::json form_to_json(const EventualForm& form) {
  return {{"preperiod", to_string(form.preperiod)},
          {"period", to_string(form.period)},
          {"class", to_string(form.sequence_class())}};
}

EventualForm form_from_json(const nlohmann::json& j) {
  try {
    EventualForm f{parse_word(j.at("preperiod").get<std::string>()),
                   parse_word(j.at("period").get<std::string>())};
    if (f.period.empty()) {
      throw Error(ErrorCode::ParseError, "empty period in form record");
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

nlohmann::json prediction_to_json(const oracles::Prediction& p) {
  nlohmann::json j;
  j["theorem"] = p.theorem;
  j["applicable"] = p.applicable;
  j["reason"] = p.applicable ? std::string() : p.reason;
  j["kind"] = oracles::to_string(p.kind);
  if (!p.failed.empty()) j["failed"] = p.failed;
  if (p.rules) j["rules"] = p.rules->to_string();
  if (p.form) {
    j["preperiod"] = to_string(p.form->preperiod);
    j["period"] = to_string(p.form->period);
  }
  if (p.residue_period) j["residue_period"] = to_string(*p.residue_period);
  if (p.sequence_class) j["class"] = to_string(*p.sequence_class);
  if (p.preperiod_bound) j["preperiod_bound"] = *p.preperiod_bound;
  if (p.family) {
    j["family"] = {
        {"stride", p.family->stride},
        {"property", p.family->property ==
                             oracles::PositionFamily::Property::OutcomeR
                         ? "R"
                         : "left-first-loses"}};
  }
  if (!p.values.empty()) j["values"] = p.values;
  return j;
}

std::string to_line(const nlohmann::json& j) { return j.dump() + "\n"; }

}  // namespace psg
