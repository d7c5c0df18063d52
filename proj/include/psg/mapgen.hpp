#pragma once

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "psg/outcome.hpp"
#include "psg/ruleset.hpp"

namespace psg::mapgen {

/// Inclusive integer range.
struct Range {
  Move lo = 1;
  Move hi = 1;
  Move size() const { return hi - lo + 1; }
};

inline constexpr Heap kDefaultCellCap = 20000;

/// c, d in [b + 1, b + 120].
Range default_range(Move b);

/// nullopt marks a cell whose period was not found within the cap.
using Cell = std::optional<SequenceClass>;

/// Classes of ({a, b}, {c, d}) over a (c, d) grid. Cells are stored
/// row-major by d, then c, both ascending.
struct DominationMap {
  Move a = 0, b = 0;
  Range c_range, d_range;
  Heap cap = kDefaultCellCap;
  std::vector<Cell> cells;

  Move width() const { return c_range.size(); }
  Move height() const { return d_range.size(); }
  const Cell& at(Move c, Move d) const;
};

/// Right's set for cell (c, d): {c, d}, or {c} on the diagonal.
Ruleset cell_rules(Move a, Move b, Move c, Move d);

/// Throws Error(InvalidArgument) unless 0 < a < b and both ranges are
/// non-empty and positive. Per-cell PeriodNotFound becomes an unresolved cell.
DominationMap domination_map(Move a, Move b, Range c_range, Range d_range,
                             Heap cap = kDefaultCellCap, unsigned threads = 0);

enum class Format : std::uint8_t { Csv, Ppm };

/// "csv" or "ppm"; throws Error(UnknownFormat).
Format parse_format(std::string_view name);

struct Rgb {
  std::uint8_t r = 0, g = 0, b = 0;
  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// SD-Left blue, SD-Right red, other classes green, unresolved black.
Rgb color(const Cell& cell);

/// csv: "c,d,class" header then one line per cell in storage order.
/// ppm: binary P6, one pixel per cell, d increasing upward.
std::string render_map(const DominationMap& map, Format format);

/// {"a", "b", "c_range", "d_range", "cap", "cells", "counts", "unresolved"}
nlohmann::json summary_json(const DominationMap& map);

/// Cells where the two-vs-two dominance condition holds but the cell is not
/// SD-Left.
std::vector<std::pair<Move, Move>> condition_violations(const DominationMap& map);

}  // namespace psg::mapgen
