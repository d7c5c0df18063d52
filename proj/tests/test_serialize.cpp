#include <doctest.h>

#include "psg/engine.hpp"
#include "psg/oracles.hpp"
#include "psg/serialize.hpp"

using namespace psg;

TEST_CASE("form round trip") {
  const EventualForm f = detect_eventual_form(Ruleset::parse("1,2/1,3"));
  const auto j = form_to_json(f);
  CHECK(j["preperiod"] == "PNLN");
  CHECK(j["period"] == "L");
  CHECK(j["class"] == "SD-Left");
  CHECK(form_from_json(j) == f);
  CHECK(to_line(j) == "{\"class\":\"SD-Left\",\"period\":\"L\",\"preperiod\":\"PNLN\"}\n");
}

TEST_CASE("prediction records") {
  const auto j = prediction_to_json(oracles::two_vs_one(1, 3, 1));
  CHECK(j["applicable"] == true);
  CHECK(j["rules"] == "1,3/1");
  CHECK(j["residue_period"] == "PN");
  CHECK(j["values"]["g"] == 2);
  const auto rejected = prediction_to_json(oracles::full_sequence_far(2, 3, 9));
  CHECK(rejected["applicable"] == false);
  CHECK(rejected["failed"] == "b>=2a");
}
