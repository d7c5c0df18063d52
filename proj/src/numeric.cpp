#include "psg/numeric.hpp"

#include <algorithm>
#include <numeric>

#include "psg/error.hpp"

namespace psg {

CoinSet::CoinSet(std::vector<std::int64_t> values)
    : values_(std::move(values)), gcd_(0) {
  for (auto v : values_) gcd_ = std::gcd(gcd_, v);
}

CoinSet CoinSet::make(std::vector<std::int64_t> values) {
  return CoinSet(make_move_set(std::move(values)));
}

bool CoinSet::contains(std::int64_t v) const {
  return std::binary_search(values_.begin(), values_.end(), v);
}

std::vector<bool> representable_table(const CoinSet& coins,
                                      std::int64_t limit) {
  if (limit < 0) return {};
  std::vector<bool> ok(static_cast<std::size_t>(limit) + 1, false);
  ok[0] = true;
  for (std::int64_t n = 1; n <= limit; ++n) {
    for (auto x : coins.values()) {
      if (x > n) break;
      if (ok[static_cast<std::size_t>(n - x)]) {
        ok[static_cast<std::size_t>(n)] = true;
        break;
      }
    }
  }
  return ok;
}

bool representable(const CoinSet& coins, std::int64_t n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative amount");
  if (n % coins.gcd() != 0) return false;
  return representable_table(coins, n).back();
}

std::int64_t frobenius(const CoinSet& coins) {
  if (coins.contains(1)) {
    throw Error(ErrorCode::ContainsOne, "coin set contains 1");
  }
  if (coins.gcd() != 1) {
    throw Error(ErrorCode::GcdNotOne,
                "gcd of coins is " + std::to_string(coins.gcd()));
  }
  auto v = coins.values();
  if (v.size() == 2) return v[0] * v[1] - v[0] - v[1];
  // The Frobenius number is below min * max.
  const std::int64_t limit = coins.min() * coins.max();
  const auto table = representable_table(coins, limit);
  for (std::int64_t n = limit; n >= 0; --n) {
    if (!table[static_cast<std::size_t>(n)]) return n;
  }
  return -1;
}

ReducedGame knapsack_to_game(const CoinSet& coins, std::int64_t n) {
  if (coins.contains(1)) {
    throw Error(ErrorCode::ContainsOne, "coin set contains 1");
  }
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative amount");
  std::vector<Move> right;
  for (auto x : coins.values()) right.push_back(x - 1);
  return {Ruleset::make({1}, std::move(right)), n};
}

}  // namespace psg
