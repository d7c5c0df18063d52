#include <doctest.h>

#include <random>
#include <set>

#include "psg/engine.hpp"
#include "psg/error.hpp"

using namespace psg;

namespace {

std::vector<Move> random_set(std::mt19937_64& rng, Move hi) {
  std::set<Move> s;
  const std::size_t size = 1 + rng() % 4;
  while (s.size() < size) s.insert(1 + static_cast<Move>(rng() % hi));
  return {s.begin(), s.end()};
}

// Independent oracle: recurrence evaluated directly over a plain vector.
std::vector<Label> naive_sequence(const Ruleset& rules, Heap n_max) {
  std::vector<bool> left_wins, right_wins;
  std::vector<Label> out;
  for (Heap n = 0; n <= n_max; ++n) {
    bool lw = false, rw = false;
    for (Move s : rules.left()) lw = lw || (s <= n && !right_wins[n - s]);
    for (Move t : rules.right()) rw = rw || (t <= n && !left_wins[n - t]);
    left_wins.push_back(lw);
    right_wins.push_back(rw);
    out.push_back(Outcome{lw ? Player::Left : Player::Right,
                          rw ? Player::Right : Player::Left}.label());
  }
  return out;
}

}  // namespace

TEST_CASE("worked examples") {
  CHECK(outcome_sequence(Ruleset::parse("1,2/1,3"), 7).to_string() == "PNLNLLLL");
  CHECK(outcome_sequence(Ruleset::parse("2,3/1,6"), 7).to_string() == "PRNLPNNN");
  CHECK(outcome_sequence(Ruleset::parse("3/5"), 7).to_string() == "PPPLLNNN");
  const EventualForm f = detect_eventual_form(Ruleset::parse("1,2/1,3"));
  CHECK(to_string(f.preperiod) == "PNLN");
  CHECK(to_string(f.period) == "L");
  CHECK(classify(Ruleset::parse("2,3/1,6")) == SequenceClass::Fair);
  CHECK(outcome(Ruleset::parse("1/2,4"), 8).left_first == Player::Right);
  CHECK(outcome(Ruleset::parse("1/2,4"), 7).left_first == Player::Left);
}

TEST_CASE("DP matches the naive recurrence and minimax") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 200; ++round) {
    const Ruleset rules = Ruleset::make(random_set(rng, 9), random_set(rng, 9));
    const auto naive = naive_sequence(rules, 300);
    const OutcomeSequence seq(rules, 300);
    for (Heap n = 0; n <= 300; ++n) REQUIRE(seq.label(n) == naive[n]);
    for (Heap n = 0; n <= 25; ++n) CHECK(brute_force_outcome(rules, n) == seq.outcome(n));
  }
}

TEST_CASE("eventual forms are minimal and reproduce the sequence") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 300; ++round) {
    const Ruleset rules = Ruleset::make(random_set(rng, 12), random_set(rng, 12));
    CAPTURE(rules.to_string());
    const EventualForm f = detect_eventual_form(rules);
    CHECK(minimize(f) == f);
    const Heap span = static_cast<Heap>(f.preperiod.size() + 3 * f.period.size()) + 50;
    const OutcomeSequence seq(rules, span);
    for (Heap n = 0; n <= span; ++n) REQUIRE(f.at(n) == seq.label(n));
  }
}

TEST_CASE("conjugation mirrors the sequence and form") {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 100; ++round) {
    const Ruleset rules = Ruleset::make(random_set(rng, 10), random_set(rng, 10));
    const EventualForm f = detect_eventual_form(rules);
    const EventualForm g = detect_eventual_form(rules.conjugate());
    CHECK(g == f.mirrored());
    CHECK(g.sequence_class() == mirror(f.sequence_class()));
  }
}

TEST_CASE("extension is deterministic and windowed queries agree") {
  const Ruleset rules = Ruleset::parse("2,7/3,5,11");
  OutcomeSequence grown(rules, 10);
  grown.extend_to(77);
  grown.extend_to(500);
  const OutcomeSequence direct(rules, 500);
  CHECK(grown.to_string() == direct.to_string());
  const Word window = direct.labels(123, 40);
  for (Heap i = 0; i < 40; ++i) CHECK(window[i] == direct.label(123 + i));
  CHECK_THROWS_AS(direct.outcome(501), Error);
}

TEST_CASE("forms do not depend on the kernel variant") {
  const kernels::Isa before = kernels::active().isa;
  std::mt19937_64 rng(3);
  std::vector<Ruleset> games;
  for (int i = 0; i < 60; ++i) {
    games.push_back(Ruleset::make(random_set(rng, 15), random_set(rng, 15)));
  }
  std::vector<EventualForm> reference;
  kernels::force(kernels::Isa::Scalar);
  for (const auto& g : games) reference.push_back(detect_eventual_form(g));
  for (kernels::Isa isa : kernels::available()) {
    kernels::force(isa);
    for (std::size_t i = 0; i < games.size(); ++i) {
      CHECK(detect_eventual_form(games[i]) == reference[i]);
    }
  }
  kernels::force(before);
}

TEST_CASE("cap handling") {
  const Ruleset rules = Ruleset::parse("2,3/1,30");
  CHECK(default_cap(rules) == 10000);
  CHECK(default_cap(Ruleset::parse("1/100")) == 100000);
  try {
    detect_eventual_form(rules, 59);
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidArgument);
  }
  // The stable window starts late, so a cap just above 2m cannot find it.
  CHECK_THROWS_AS(detect_eventual_form(rules, 61), PeriodNotFound);
  CHECK_NOTHROW(detect_eventual_form(rules));
}

TEST_CASE("winning moves") {
  const Ruleset rules = Ruleset::parse("1,2/1,3");
  // Heap 2 is L: Left moving first wins by taking 2 (to 0, P) and not by 1
  // (to 1, N).
  CHECK(winning_moves(rules, 2, Player::Left) == std::vector<Move>{2});
  CHECK(winning_moves(rules, 2, Player::Right).empty());
  CHECK(winning_moves(rules, 0, Player::Left).empty());
  const OutcomeSequence seq(rules, 60);
  for (Heap n = 0; n <= 60; ++n) {
    CHECK(winning_moves(rules, n, Player::Left).empty() ==
          (seq.outcome(n).left_first == Player::Right));
    CHECK(winning_moves(rules, n, Player::Right).empty() ==
          (seq.outcome(n).right_first == Player::Left));
  }
}
