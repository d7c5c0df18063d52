#include "psg/engine.hpp"

#include <algorithm>
#include <unordered_map>

#include "psg/error.hpp"

namespace psg {

OutcomeSequence::OutcomeSequence(Ruleset rules) : rules_(std::move(rules)) {
  left_.assign(kernels::kPlanePadWords + 1, 0);
  right_.assign(kernels::kPlanePadWords + 1, 0);
}

OutcomeSequence::OutcomeSequence(Ruleset rules, Heap n_max)
    : OutcomeSequence(std::move(rules)) {
  extend_to(n_max);
}

void OutcomeSequence::extend_to(Heap n_max) {
  if (n_max < size_) return;
  const auto words =
      static_cast<std::size_t>(n_max / 64 + 1) + kernels::kPlanePadWords;
  if (words > left_.size()) {
    const std::size_t grown = std::max(words, left_.size() * 2);
    left_.resize(grown, 0);
    right_.resize(grown, 0);
  }
  while (size_ <= n_max) push_next();
}

void OutcomeSequence::push_next() {
  const Heap n = size_;
  bool left_wins = false;
  for (Move s : rules_.left()) {
    if (s > n) break;
    if (!bit(right_, n - s)) {
      left_wins = true;
      break;
    }
  }
  bool right_wins = false;
  for (Move t : rules_.right()) {
    if (t > n) break;
    if (!bit(left_, n - t)) {
      right_wins = true;
      break;
    }
  }
  const auto word = static_cast<std::size_t>(n >> 6);
  const std::uint64_t mask = std::uint64_t{1} << (n & 63);
  if (left_wins) left_[word] |= mask;
  if (right_wins) right_[word] |= mask;
  ++size_;
}

Outcome OutcomeSequence::outcome(Heap n) const {
  if (n < 0 || n >= size_) {
    throw Error(ErrorCode::InvalidArgument,
                "heap " + std::to_string(n) + " outside computed range");
  }
  return {bit(left_, n) ? Player::Left : Player::Right,
          bit(right_, n) ? Player::Right : Player::Left};
}

Word OutcomeSequence::labels(Heap from, Heap count) const {
  Word out;
  out.reserve(static_cast<std::size_t>(count));
  for (Heap n = from; n < from + count; ++n) out.push_back(label(n));
  return out;
}

std::string OutcomeSequence::to_string() const {
  return psg::to_string(labels(0, size_));
}

Outcome outcome(const Ruleset& rules, Heap n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative heap");
  return OutcomeSequence(rules, n).outcome(n);
}

OutcomeSequence outcome_sequence(const Ruleset& rules, Heap n_max) {
  if (n_max < 0) throw Error(ErrorCode::InvalidArgument, "negative n_max");
  return OutcomeSequence(rules, n_max);
}

Heap default_cap(const Ruleset& rules) {
  const Heap m = rules.max_move();
  return std::max<Heap>(10 * m * m, 10000);
}

namespace {

constexpr std::uint64_t kHashBase = 0x9E3779B97F4A7C15ULL;

std::uint64_t symbol(const OutcomeSequence& seq, Heap n) {
  return static_cast<std::uint64_t>(seq.label(n)) + 1;
}

}  // namespace

EventualForm detect_eventual_form(OutcomeSequence& seq, Heap cap) {
  const Heap m = seq.rules().max_move();
  if (cap < 2 * m) {
    throw Error(ErrorCode::InvalidArgument,
                "cap " + std::to_string(cap) + " below twice the largest move");
  }
  std::uint64_t drop_weight = 1;  // kHashBase^m
  for (Heap i = 0; i < m; ++i) drop_weight *= kHashBase;

  // Window starting at `start` covers heaps start..start+m-1; equal windows
  // force equal continuations, so the first repeat fixes a (non-minimal)
  // preperiod and period.
  std::unordered_multimap<std::uint64_t, Heap> seen;
  seen.reserve(static_cast<std::size_t>(std::min<Heap>(cap, 1 << 16)));
  std::uint64_t hash = 0;
  Heap first = -1, second = -1;
  for (Heap n = 0; n <= cap && first < 0; ++n) {
    seq.extend_to(n);
    hash = hash * kHashBase + symbol(seq, n);
    if (n >= m) hash -= symbol(seq, n - m) * drop_weight;
    if (n < m - 1) continue;
    const Heap start = n - m + 1;
    auto [lo, hi] = seen.equal_range(hash);
    for (auto it = lo; it != hi; ++it) {
      const auto v = seq.planes();
      if (kernels::first_mismatch(v, static_cast<std::size_t>(it->second), v,
                                  static_cast<std::size_t>(start),
                                  static_cast<std::size_t>(m)) ==
          kernels::kNoMismatch) {
        first = it->second;
        second = start;
        break;
      }
    }
    seen.emplace(hash, start);
  }
  if (first < 0) throw PeriodNotFound(cap);

  const auto v = seq.planes();
  const auto base = static_cast<std::size_t>(first);
  auto period = static_cast<std::size_t>(second - first);
  // Every period of the tail is a multiple of the minimal one.
  for (std::size_t d = 1; d < period; ++d) {
    if (period % d != 0) continue;
    if (kernels::first_mismatch(v, base, v, base + d, period - d) ==
        kernels::kNoMismatch) {
      period = d;
      break;
    }
  }
  const std::size_t last_bad = kernels::last_mismatch(v, 0, v, period, base);
  const std::size_t pre = last_bad == kernels::kNoMismatch ? 0 : last_bad + 1;

  EventualForm form;
  form.preperiod = seq.labels(0, static_cast<Heap>(pre));
  form.period = seq.labels(static_cast<Heap>(pre), static_cast<Heap>(period));
  return form;
}

EventualForm detect_eventual_form(const Ruleset& rules, std::optional<Heap> cap) {
  OutcomeSequence seq(rules);
  return detect_eventual_form(seq, cap.value_or(default_cap(rules)));
}

SequenceClass classify(const Ruleset& rules, std::optional<Heap> cap) {
  return detect_eventual_form(rules, cap).sequence_class();
}

std::vector<Move> winning_moves(const Ruleset& rules, Heap n, Player player) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative heap");
  const OutcomeSequence seq(rules, n);
  std::vector<Move> out;
  for (Move s : rules.moves(player)) {
    if (s > n) break;
    const Outcome after = seq.outcome(n - s);
    // After the move the opponent moves first.
    const Player winner =
        player == Player::Left ? after.right_first : after.left_first;
    if (winner == player) out.push_back(s);
  }
  return out;
}

namespace {

class Minimax {
 public:
  explicit Minimax(const Ruleset& rules) : rules_(rules) {}

  bool mover_wins(Heap n, Player mover) {
    auto& memo = memo_[mover == Player::Left ? 0 : 1];
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    bool wins = false;
    for (Move s : rules_.moves(mover)) {
      if (s <= n && !mover_wins(n - s, opponent(mover))) {
        wins = true;
        break;
      }
    }
    memo.emplace(n, wins);
    return wins;
  }

 private:
  const Ruleset& rules_;
  std::unordered_map<Heap, bool> memo_[2];
};

}  // namespace

Outcome brute_force_outcome(const Ruleset& rules, Heap n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative heap");
  Minimax game(rules);
  return {game.mover_wins(n, Player::Left) ? Player::Left : Player::Right,
          game.mover_wins(n, Player::Right) ? Player::Right : Player::Left};
}

}  // namespace psg
