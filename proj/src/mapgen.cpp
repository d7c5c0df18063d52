#include "psg/mapgen.hpp"

#include <map>

#include "psg/engine.hpp"
#include "psg/error.hpp"
#include "psg/geometry.hpp"
#include "psg/parallel.hpp"

namespace psg::mapgen {

Range default_range(Move b) { return {b + 1, b + 120}; }

const Cell& DominationMap::at(Move c, Move d) const {
  if (c < c_range.lo || c > c_range.hi || d < d_range.lo || d > d_range.hi) {
    throw Error(ErrorCode::InvalidArgument, "cell outside the map");
  }
  return cells[static_cast<std::size_t>((d - d_range.lo) * width() +
                                        (c - c_range.lo))];
}

Ruleset cell_rules(Move a, Move b, Move c, Move d) {
  if (c == d) return Ruleset::make({a, b}, {c});
  return Ruleset::make({a, b}, {c, d});
}

DominationMap domination_map(Move a, Move b, Range c_range, Range d_range,
                             Heap cap, unsigned threads) {
  if (a <= 0 || a >= b) {
    throw Error(ErrorCode::InvalidArgument, "map needs 0 < a < b");
  }
  for (const Range& r : {c_range, d_range}) {
    if (r.lo <= 0 || r.hi < r.lo) {
      throw Error(ErrorCode::InvalidArgument,
                  "range [" + std::to_string(r.lo) + ", " +
                      std::to_string(r.hi) + "] is empty or not positive");
    }
  }
  DominationMap map{a, b, c_range, d_range, cap, {}};
  map.cells.resize(static_cast<std::size_t>(map.width() * map.height()));
  parallel_for(map.cells.size(), threads, [&](std::size_t idx) {
    const Move c = c_range.lo + static_cast<Move>(idx) % map.width();
    const Move d = d_range.lo + static_cast<Move>(idx) / map.width();
    try {
      map.cells[idx] = classify(cell_rules(a, b, c, d), cap);
    } catch (const PeriodNotFound&) {
      map.cells[idx] = std::nullopt;
    }
  });
  return map;
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::Csv;
  if (name == "ppm") return Format::Ppm;
  throw Error(ErrorCode::UnknownFormat,
              "unknown map format '" + std::string(name) + "'");
}

Rgb color(const Cell& cell) {
  if (!cell) return {0, 0, 0};
  switch (*cell) {
    case SequenceClass::StrongLeft: return {0, 0, 255};
    case SequenceClass::StrongRight: return {255, 0, 0};
    default: return {0, 255, 0};
  }
}

namespace {

std::string_view cell_name(const Cell& cell) {
  return cell ? to_string(*cell) : std::string_view("Unresolved");
}

}  // namespace

std::string render_map(const DominationMap& map, Format format) {
  std::string out;
  if (format == Format::Csv) {
    out = "c,d,class\n";
    for (Move d = map.d_range.lo; d <= map.d_range.hi; ++d) {
      for (Move c = map.c_range.lo; c <= map.c_range.hi; ++c) {
        out += std::to_string(c) + "," + std::to_string(d) + "," +
               std::string(cell_name(map.at(c, d))) + "\n";
      }
    }
    return out;
  }
  out = "P6\n" + std::to_string(map.width()) + " " +
        std::to_string(map.height()) + "\n255\n";
  out.reserve(out.size() + static_cast<std::size_t>(3 * map.width() * map.height()));
  for (Move d = map.d_range.hi; d >= map.d_range.lo; --d) {
    for (Move c = map.c_range.lo; c <= map.c_range.hi; ++c) {
      const Rgb px = color(map.at(c, d));
      out += static_cast<char>(px.r);
      out += static_cast<char>(px.g);
      out += static_cast<char>(px.b);
    }
  }
  return out;
}

nlohmann::json summary_json(const DominationMap& map) {
  std::map<std::string, std::int64_t> counts;
  std::int64_t unresolved = 0;
  for (const Cell& cell : map.cells) {
    if (cell) {
      ++counts[std::string(to_string(*cell))];
    } else {
      ++unresolved;
    }
  }
  return {{"a", map.a},
          {"b", map.b},
          {"c_range", {map.c_range.lo, map.c_range.hi}},
          {"d_range", {map.d_range.lo, map.d_range.hi}},
          {"cap", map.cap},
          {"cells", map.cells.size()},
          {"counts", counts},
          {"unresolved", unresolved}};
}

std::vector<std::pair<Move, Move>> condition_violations(
    const DominationMap& map) {
  std::vector<std::pair<Move, Move>> out;
  for (Move d = map.d_range.lo; d <= map.d_range.hi; ++d) {
    for (Move c = map.c_range.lo; c <= map.c_range.hi; ++c) {
      if (!geometry::two_vs_two_condition(map.a, map.b, c, d).holds) continue;
      const Cell& cell = map.at(c, d);
      if (!cell || *cell != SequenceClass::StrongLeft) out.emplace_back(c, d);
    }
  }
  return out;
}

}  // namespace psg::mapgen
