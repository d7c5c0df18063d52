#include "psg/ruleset.hpp"

#include <algorithm>
#include <charconv>

#include "psg/error.hpp"

namespace psg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NonPositiveMove: return "NonPositiveMove";
    case ErrorCode::DuplicateMove: return "DuplicateMove";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::PeriodNotFound: return "PeriodNotFound";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::ContainsOne: return "ContainsOne";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::OutOfQuadrant: return "OutOfQuadrant";
    case ErrorCode::DegenerateSlope: return "DegenerateSlope";
    case ErrorCode::UnknownFormat: return "UnknownFormat";
  }
  return "Unknown";
}

std::vector<Move> make_move_set(std::vector<Move> values) {
  if (values.empty()) throw Error(ErrorCode::EmptySet, "move set is empty");
  for (Move v : values) {
    if (v <= 0) {
      throw Error(ErrorCode::NonPositiveMove,
                  "move " + std::to_string(v) + " is not positive");
    }
  }
  std::sort(values.begin(), values.end());
  if (auto dup = std::adjacent_find(values.begin(), values.end());
      dup != values.end()) {
    throw Error(ErrorCode::DuplicateMove,
                "move " + std::to_string(*dup) + " listed twice");
  }
  return values;
}

Ruleset Ruleset::make(std::vector<Move> left, std::vector<Move> right) {
  return Ruleset(make_move_set(std::move(left)),
                 make_move_set(std::move(right)));
}

Move Ruleset::max_move() const {
  return std::max(left_.back(), right_.back());
}

Ruleset Ruleset::conjugate() const { return Ruleset(right_, left_); }

std::string Ruleset::to_string() const {
  return format_move_list(left_) + "/" + format_move_list(right_);
}

std::vector<Move> parse_move_list(std::string_view text) {
  std::vector<Move> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos
                                             : comma - pos);
    Move value = 0;
    auto [end, ec] =
        std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() ||
        end != item.data() + item.size()) {
      throw Error(ErrorCode::ParseError,
                  "bad integer '" + std::string(item) + "' in '" +
                      std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string format_move_list(std::span<const Move> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

Ruleset Ruleset::parse(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos ||
      text.find('/', slash + 1) != std::string_view::npos) {
    throw Error(ErrorCode::ParseError,
                "ruleset must look like 'a,b/c,d', got '" + std::string(text) +
                    "'");
  }
  return make(parse_move_list(text.substr(0, slash)),
              parse_move_list(text.substr(slash + 1)));
}

}  // namespace psg
