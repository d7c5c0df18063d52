#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace psg {

// Heap sizes and move sizes share one signed integer type.
using Heap = std::int64_t;
using Move = std::int64_t;

enum class Player : std::uint8_t { Left, Right };

constexpr Player opponent(Player p) {
  return p == Player::Left ? Player::Right : Player::Left;
}

/// A partizan subtraction ruleset: the move sizes available to Left and to
/// Right. Both sets are non-empty, strictly positive, duplicate-free and
/// stored in ascending order. Instances are immutable.
class Ruleset {
 public:
  /// Validates and sorts. Throws Error with EmptySet, NonPositiveMove or
  /// DuplicateMove.
  static Ruleset make(std::vector<Move> left, std::vector<Move> right);

  /// Parses the textual form "1,2/1,3".
  static Ruleset parse(std::string_view text);

  std::span<const Move> left() const { return left_; }
  std::span<const Move> right() const { return right_; }
  std::span<const Move> moves(Player p) const {
    return p == Player::Left ? left() : right();
  }

  /// Largest move of either player; the DP window length.
  Move max_move() const;

  bool impartial() const { return left_ == right_; }

  /// Left and right swapped.
  Ruleset conjugate() const;

  std::string to_string() const;

  friend bool operator==(const Ruleset&, const Ruleset&) = default;

 private:
  Ruleset(std::vector<Move> left, std::vector<Move> right)
      : left_(std::move(left)), right_(std::move(right)) {}

  std::vector<Move> left_;
  std::vector<Move> right_;
};

/// Validated ascending move set; shared by Ruleset and the coin routines.
std::vector<Move> make_move_set(std::vector<Move> values);

/// "1,2,3" -> {1,2,3}. Does not validate positivity.
std::vector<Move> parse_move_list(std::string_view text);

std::string format_move_list(std::span<const Move> values);

}  // namespace psg
