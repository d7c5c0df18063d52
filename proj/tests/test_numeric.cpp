#include <doctest.h>

#include <random>
#include <set>

#include "psg/engine.hpp"
#include "psg/error.hpp"
#include "psg/numeric.hpp"

using namespace psg;

namespace {

// Independent oracle: enumerate sums c1 x1 + ... up to a limit.
std::vector<bool> enumerate_sums(const std::vector<std::int64_t>& coins, std::int64_t limit) {
  std::vector<bool> hit(static_cast<std::size_t>(limit + 1), false);
  std::vector<std::int64_t> frontier = {0};
  hit[0] = true;
  while (!frontier.empty()) {
    const auto v = frontier.back();
    frontier.pop_back();
    for (auto c : coins) {
      if (v + c <= limit && !hit[v + c]) {
        hit[v + c] = true;
        frontier.push_back(v + c);
      }
    }
  }
  return hit;
}

}  // namespace

TEST_CASE("frobenius known values") {
  CHECK(frobenius(CoinSet::make({3, 5})) == 7);
  CHECK(frobenius(CoinSet::make({2, 3})) == 1);
  CHECK(frobenius(CoinSet::make({6, 9, 20})) == 43);
  CHECK(frobenius(CoinSet::make({3, 4})) == 5);
  for (std::int64_t c = 2; c <= 10; ++c) {
    CHECK(frobenius(CoinSet::make({c, c + 1})) == c * (c + 1) - c - (c + 1));
  }
}

TEST_CASE("frobenius errors") {
  try {
    frobenius(CoinSet::make({4, 6}));
    FAIL("expected GcdNotOne");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GcdNotOne);
  }
  try {
    frobenius(CoinSet::make({1, 5}));
    FAIL("expected ContainsOne");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ContainsOne);
  }
  CHECK_THROWS_AS(CoinSet::make({}), Error);
  CHECK_THROWS_AS(CoinSet::make({0, 3}), Error);
  CHECK_THROWS_AS(CoinSet::make({3, 3}), Error);
}

TEST_CASE("frobenius and representability agree with enumeration") {
  std::mt19937_64 rng(17);
  int tested = 0;
  while (tested < 150) {
    std::set<std::int64_t> s;
    const std::size_t size = 1 + rng() % 4;
    while (s.size() < size) s.insert(2 + static_cast<std::int64_t>(rng() % 14));
    const std::vector<std::int64_t> coins(s.begin(), s.end());
    const CoinSet set = CoinSet::make(coins);
    const auto table = enumerate_sums(coins, 400);
    const auto dp = representable_table(set, 400);
    for (std::int64_t n = 0; n <= 400; ++n) {
      REQUIRE(dp[n] == table[n]);
      REQUIRE(representable(set, n) == table[n]);
    }
    if (set.gcd() != 1) continue;
    ++tested;
    const auto f = frobenius(set);
    CHECK(!table[f]);
    for (std::int64_t n = f + 1; n <= 400; ++n) CHECK(table[n]);
  }
}

TEST_CASE("knapsack reduction") {
  const CoinSet coins = CoinSet::make({3, 5});
  const auto game = knapsack_to_game(coins, 8);
  CHECK(game.rules.to_string() == "1/2,4");
  CHECK(game.heap == 8);
  const OutcomeSequence seq(game.rules, 60);
  for (Heap n = 0; n <= 60; ++n) {
    CHECK((seq.outcome(n).left_first == Player::Right) == representable(coins, n));
  }
  CHECK_THROWS_AS(knapsack_to_game(CoinSet::make({1, 3}), 4), Error);
}
