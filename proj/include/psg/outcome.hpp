#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "psg/ruleset.hpp"

namespace psg {

// Outcome classes. The numeric values are the bit-plane encoding used by the
// engine: bit 0 = "Left wins moving first", bit 1 = "Right wins moving first".
enum class Label : std::uint8_t { P = 0, L = 1, R = 2, N = 3 };

struct Outcome {
  Player left_first = Player::Right;   // winner when Left moves first (o_L)
  Player right_first = Player::Left;   // winner when Right moves first (o_R)

  static constexpr Outcome from_label(Label label) {
    auto bits = static_cast<std::uint8_t>(label);
    return {(bits & 1) ? Player::Left : Player::Right,
            (bits & 2) ? Player::Right : Player::Left};
  }

  constexpr Label label() const {
    std::uint8_t bits = (left_first == Player::Left ? 1 : 0) |
                        (right_first == Player::Right ? 2 : 0);
    return static_cast<Label>(bits);
  }

  friend constexpr bool operator==(Outcome, Outcome) = default;
};

char to_char(Label label);
std::optional<Label> label_from_char(char c);

/// Left/right mirror: L <-> R, P and N fixed.
constexpr Label mirror(Label label) {
  switch (label) {
    case Label::L: return Label::R;
    case Label::R: return Label::L;
    default: return label;
  }
}

using Word = std::vector<Label>;

std::string to_string(std::span<const Label> word);
/// Parses a word over "PNLR". Throws Error(ParseError) on other characters.
Word parse_word(std::string_view text);
Word mirror(std::span<const Label> word);

enum class SequenceClass : std::uint8_t {
  StrongLeft,
  StrongRight,
  WeakLeft,
  WeakRight,
  Fair,
  UltimatelyImpartial,
};

/// "SD-Left", "SD-Right", "WD-Left", "WD-Right", "Fair", "UI".
std::string_view to_string(SequenceClass cls);
std::optional<SequenceClass> sequence_class_from_string(std::string_view name);
SequenceClass mirror(SequenceClass cls);

struct LabelCounts {
  std::size_t p = 0, n = 0, l = 0, r = 0;
  friend bool operator==(const LabelCounts&, const LabelCounts&) = default;
};

/// Class of a game from the letter content of its minimal period.
SequenceClass classify_counts(const LabelCounts& counts);
SequenceClass classify_period(std::span<const Label> period);

/// Ultimately periodic outcome sequence: `preperiod` then `period` forever.
struct EventualForm {
  Word preperiod;
  Word period;

  Label at(Heap n) const;
  SequenceClass sequence_class() const { return classify_period(period); }
  /// Letterwise L <-> R.
  EventualForm mirrored() const;

  friend bool operator==(const EventualForm&, const EventualForm&) = default;
};

/// Minimal equivalent form: shortest period, then shortest preperiod.
EventualForm minimize(EventualForm form);

}  // namespace psg
