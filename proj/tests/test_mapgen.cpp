#include <doctest.h>

#include "psg/engine.hpp"
#include "psg/error.hpp"
#include "psg/geometry.hpp"
#include "psg/mapgen.hpp"

using namespace psg;
using namespace psg::mapgen;

TEST_CASE("cells match direct classification") {
  const auto map = domination_map(2, 5, {6, 20}, {6, 25}, kDefaultCellCap, 3);
  CHECK(map.width() == 15);
  CHECK(map.height() == 20);
  CHECK(map.cells.size() == 300);
  for (Move d = 6; d <= 25; ++d) {
    for (Move c = 6; c <= 20; ++c) {
      CHECK(map.at(c, d) == classify(cell_rules(2, 5, c, d)));
    }
  }
  CHECK(cell_rules(2, 5, 7, 7).to_string() == "2,5/7");
  CHECK(cell_rules(2, 5, 7, 9).to_string() == "2,5/7,9");
  CHECK(cell_rules(2, 5, 9, 7).to_string() == "2,5/7,9");
}

TEST_CASE("thread count does not change the map") {
  const auto one = domination_map(3, 4, {5, 40}, {5, 40}, kDefaultCellCap, 1);
  const auto many = domination_map(3, 4, {5, 40}, {5, 40}, kDefaultCellCap, 4);
  CHECK(one.cells == many.cells);
  CHECK(render_map(one, Format::Ppm) == render_map(many, Format::Ppm));
  CHECK(render_map(one, Format::Csv) == render_map(many, Format::Csv));
}

TEST_CASE("ppm layout") {
  const auto map = domination_map(1, 2, {3, 5}, {3, 4}, kDefaultCellCap, 1);
  const std::string ppm = render_map(map, Format::Ppm);
  const std::string header = "P6\n3 2\n255\n";
  REQUIRE(ppm.size() == header.size() + 3 * 6);
  CHECK(ppm.substr(0, header.size()) == header);
  // First pixel row is d = 4, leftmost pixel c = 3.
  const Rgb first = color(map.at(3, 4));
  CHECK(static_cast<std::uint8_t>(ppm[header.size()]) == first.r);
  CHECK(static_cast<std::uint8_t>(ppm[header.size() + 1]) == first.g);
  CHECK(static_cast<std::uint8_t>(ppm[header.size() + 2]) == first.b);
  CHECK(color(SequenceClass::StrongLeft) == Rgb{0, 0, 255});
  CHECK(color(SequenceClass::StrongRight) == Rgb{255, 0, 0});
  CHECK(color(SequenceClass::Fair) == Rgb{0, 255, 0});
  CHECK(color(std::nullopt) == Rgb{0, 0, 0});
}

TEST_CASE("csv layout and summary") {
  const auto map = domination_map(1, 2, {3, 4}, {3, 4}, kDefaultCellCap, 1);
  const std::string csv = render_map(map, Format::Csv);
  CHECK(csv.rfind("c,d,class\n3,3,", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  const auto j = summary_json(map);
  CHECK(j["cells"] == 4);
  CHECK(j["unresolved"] == 0);
}

TEST_CASE("unresolved cells") {
  // A cap this small cannot settle ({2,3},{1,30}); the cell becomes
  // unresolved instead of aborting the map.
  const auto map = domination_map(2, 3, {1, 1}, {30, 30}, 61, 1);
  CHECK(!map.at(1, 30).has_value());
  CHECK(render_map(map, Format::Csv).find("Unresolved") != std::string::npos);
}

TEST_CASE("condition violations on a grid where the condition holds") {
  const auto map = domination_map(2, 3, {50, 52}, {2000, 2002}, kDefaultCellCap, 1);
  std::size_t holds = 0;
  for (Move d = 2000; d <= 2002; ++d) {
    for (Move c = 50; c <= 52; ++c) holds += geometry::two_vs_two_condition(2, 3, c, d).holds;
  }
  CHECK(holds > 0);
  CHECK(condition_violations(map).empty());
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(domination_map(3, 3, {5, 6}, {5, 6}), Error);
  CHECK_THROWS_AS(domination_map(1, 2, {6, 5}, {5, 6}), Error);
  CHECK_THROWS_AS(parse_format("gif"), Error);
  CHECK(parse_format("ppm") == Format::Ppm);
  CHECK(default_range(11).lo == 12);
  CHECK(default_range(11).hi == 131);
}
