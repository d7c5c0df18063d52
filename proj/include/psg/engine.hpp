#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psg/kernels.hpp"
#include "psg/outcome.hpp"
#include "psg/ruleset.hpp"

namespace psg {

/// Outcomes of heaps 0..size()-1 for one ruleset, filled by the recurrence
///   o_L(n) = L  iff  some s in S_L, s <= n, has o_R(n - s) = L
///   o_R(n) = R  iff  some t in S_R, t <= n, has o_L(n - t) = R
/// and stored as two bit planes (see kernels.hpp).
class OutcomeSequence {
 public:
  explicit OutcomeSequence(Ruleset rules);
  OutcomeSequence(Ruleset rules, Heap n_max);

  const Ruleset& rules() const { return rules_; }

  /// Number of positions computed (heaps 0..size()-1).
  Heap size() const { return size_; }

  /// Computes positions up to and including n_max.
  void extend_to(Heap n_max);

  Outcome outcome(Heap n) const;
  Label label(Heap n) const { return outcome(n).label(); }
  Label operator[](Heap n) const { return label(n); }

  Word labels(Heap from, Heap count) const;
  std::string to_string() const;

  kernels::PlanesView planes() const {
    return {left_.data(), right_.data(), static_cast<std::size_t>(size_)};
  }

 private:
  void push_next();
  bool bit(const std::vector<std::uint64_t>& plane, Heap n) const {
    return (plane[static_cast<std::size_t>(n >> 6)] >> (n & 63)) & 1U;
  }

  Ruleset rules_;
  std::vector<std::uint64_t> left_;   // bit n: Left moving first wins
  std::vector<std::uint64_t> right_;  // bit n: Right moving first wins
  Heap size_ = 0;
};

Outcome outcome(const Ruleset& rules, Heap n);
OutcomeSequence outcome_sequence(const Ruleset& rules, Heap n_max);

/// max(10 m^2, 10000) with m the largest move.
Heap default_cap(const Ruleset& rules);

/// Minimal eventual form, found by sliding a window of the last m outcomes
/// (m = largest move) until a window repeats. Positions 0..cap are examined.
/// Throws PeriodNotFound when no window repeats, Error(InvalidArgument) when
/// cap < 2m.
EventualForm detect_eventual_form(const Ruleset& rules,
                                  std::optional<Heap> cap = std::nullopt);

/// Same, reusing (and extending) an existing sequence.
EventualForm detect_eventual_form(OutcomeSequence& seq, Heap cap);

SequenceClass classify(const Ruleset& rules,
                       std::optional<Heap> cap = std::nullopt);

/// Moves of `player` from heap n that leave the opponent, now moving first,
/// in a lost position. Ascending.
std::vector<Move> winning_moves(const Ruleset& rules, Heap n, Player player);

/// Game-tree minimax with call-local memoization. Shares nothing with
/// OutcomeSequence; used as an independent oracle for small heaps.
Outcome brute_force_outcome(const Ruleset& rules, Heap n);

}  // namespace psg
