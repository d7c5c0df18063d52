#pragma once

// Closed-form predictions for special families of rulesets, plus the
// constructive ruleset builders. Every prediction carries the ruleset it talks
// about and can be checked against the engine with verify().

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psg/engine.hpp"
#include "psg/outcome.hpp"
#include "psg/ruleset.hpp"

namespace psg::oracles {

enum class PredictionKind : std::uint8_t {
  FullSequence,    // `form` is the exact sequence from heap 0
  EventualForm,    // `form` (minimized) or `residue_period`
  ClassOnly,       // only `sequence_class` (and maybe `preperiod_bound`)
  PositionFamily,  // `family`
};

std::string_view to_string(PredictionKind kind);

/// A property of the positions k * stride, k >= 1.
struct PositionFamily {
  enum class Property : std::uint8_t { OutcomeR, LeftFirstLoses };
  Heap stride = 0;
  Property property = Property::OutcomeR;
};

struct Prediction {
  std::string theorem;
  PredictionKind kind = PredictionKind::ClassOnly;
  bool applicable = false;
  std::string failed;  // machine-readable failed hypothesis, empty if applicable
  std::string reason;

  std::optional<Ruleset> rules;
  std::optional<SequenceClass> sequence_class;
  std::optional<EventualForm> form;
  // Large heaps n have label residue_period[n mod residue_period.size()].
  std::optional<Word> residue_period;
  // Upper bound on the preperiod length.
  std::optional<Heap> preperiod_bound;
  std::optional<PositionFamily> family;
  // Derived quantities (gcd, measured preperiod, chosen moves, ...).
  std::map<std::string, std::int64_t> values;
};

struct Verdict {
  bool ok = false;
  std::string detail;
};

/// Compares an applicable prediction with the engine. FullSequence is checked
/// letterwise on heaps 0..cap and as a minimized form; families on k <= 10.
Verdict verify(const Prediction& prediction, Heap cap);

// ({a}, {b}), 0 < a < b: purely periodic P^a L^(b-a) N^a.
Prediction one_vs_one(Move a, Move b);

// ({a, b}, {c}) with g = gcd(a + c, b + c): SD-Left if g <= c, otherwise a
// period anchored at multiples of g.
Prediction two_vs_one(Move a, Move b, Move c);

// ({a, b}, {c}) with c > b >= 2a:       P^a L^(c-a) N^a L...
// ({a, b}, {c, d}) also with d > c + b: P^a L^(c-a) N^a L^(d-c-a) N^a L...
Prediction full_sequence_far(Move a, Move b, Move c,
                             std::optional<Move> d = std::nullopt);

// ({1..k}, right) with |right| = k. Throws Error(SizeMismatch).
Prediction ones_to_k(Move k, const std::vector<Move>& right);

// Adding a large move d to Right in an eventually-L game keeps it eventually
// L. The base preperiod is measured with the engine.
Prediction stability_check(const Ruleset& base, Move d,
                           std::optional<Heap> cap = std::nullopt);

/// (S_L, S_L + {p}) with p the period of the impartial game on S_L.
Ruleset construct_right_dominator(const std::vector<Move>& left,
                                  std::optional<Heap> cap = std::nullopt);
Prediction right_dominator(const std::vector<Move>& left,
                           std::optional<Heap> cap = std::nullopt);

struct Construction {
  Ruleset rules;
  Heap stride;
};

/// Smallest n with {n - m : m in S_L} positive and disjoint from S_L; Right
/// gets that set plus n. Heaps k n are R.
Construction construct_right_fair(const std::vector<Move>& left);
Prediction right_fair(const std::vector<Move>& left);

/// Smallest n0 > max(S_L) with n0 - S_L disjoint from S_L; Right gets
/// n0 - S_L. Left moving first loses from every k n0.
Construction construct_left_spoiler(const std::vector<Move>& left);
Prediction left_spoiler(const std::vector<Move>& left);

// Interval system for ({a, b}, {c, d}).
struct Interval {
  Heap lo = 0;
  Heap hi = 0;  // exclusive
  bool empty() const { return hi <= lo; }
  bool contains(Heap n) const { return lo <= n && n < hi; }
  friend bool operator==(const Interval& x, const Interval& y) {
    return (x.empty() && y.empty()) || (x.lo == y.lo && x.hi == y.hi);
  }
};

struct IndexedInterval {
  std::int64_t i = 0;
  std::int64_t j = 0;
  Interval span;
};

struct IntervalSystem {
  Move a = 0, b = 0, c = 0, d = 0;
  std::int64_t big_a = 0;  // ceil(a / (b - a)) + 1
  // P intervals [alpha_ij, alpha_ij + a - (i+j)(b-a)) and
  // N intervals [alpha_ij - b, alpha_ij - b + a - (i+j-1)(b-a)) with
  // alpha_ij = i (d + b) + j (c + b), for all i, j >= 0 with i + j <= A + 1.
  std::vector<IndexedInterval> p;
  std::vector<IndexedInterval> n;

  const Interval& p_at(std::int64_t i, std::int64_t j) const;
  const Interval& n_at(std::int64_t i, std::int64_t j) const;
  Label label(Heap heap) const;
  /// One past the last heap covered by a non-empty interval.
  Heap end() const;
};

IntervalSystem interval_system(Move a, Move b, Move c, Move d);

struct IntervalProperties {
  bool disjoint = false;          // (i) non-empty intervals pairwise disjoint
  bool clear_before_n = false;    // (ii) b heaps before each I^N are uncovered
  bool shift_c = false;           // (iii) I^P_ij + c = I^N_i,j+1
  bool shift_d = false;           // (iv) I^P_ij + d = I^N_i+1,j
  bool intersection = false;      // (v) (I^N_ij + a) & (I^N_ij + b) = I^P_ij
  bool all() const {
    return disjoint && clear_before_n && shift_c && shift_d && intersection;
  }
};

IntervalProperties check_interval_properties(const IntervalSystem& system);

// Full sequence of ({a, b}, {c, d}), a < b < c < d, when the geometric
// dominance condition holds: P on I^P, N on I^N, L elsewhere.
Prediction interval_prediction(Move a, Move b, Move c, Move d);

}  // namespace psg::oracles
