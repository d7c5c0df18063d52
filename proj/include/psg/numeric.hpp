#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "psg/ruleset.hpp"

namespace psg {

/// Coin denominations: distinct positive integers, ascending.
class CoinSet {
 public:
  /// Throws Error with EmptySet, NonPositiveMove or DuplicateMove.
  static CoinSet make(std::vector<std::int64_t> values);

  std::span<const std::int64_t> values() const { return values_; }
  std::int64_t gcd() const { return gcd_; }
  std::int64_t min() const { return values_.front(); }
  std::int64_t max() const { return values_.back(); }
  bool contains(std::int64_t v) const;

 private:
  explicit CoinSet(std::vector<std::int64_t> values);

  std::vector<std::int64_t> values_;
  std::int64_t gcd_;
};

/// Flags 0..limit: entry n is true iff n is a non-negative integer
/// combination of the coins.
std::vector<bool> representable_table(const CoinSet& coins, std::int64_t limit);

bool representable(const CoinSet& coins, std::int64_t n);

/// Largest non-representable integer. Requires gcd 1 (GcdNotOne) and no coin
/// equal to 1 (ContainsOne).
std::int64_t frobenius(const CoinSet& coins);

struct ReducedGame {
  Ruleset rules;
  Heap heap;
};

/// Left may take 1, Right may take x - 1 for each coin x. Left moving first
/// from `n` loses exactly when n is representable. Throws ContainsOne.
ReducedGame knapsack_to_game(const CoinSet& coins, std::int64_t n);

}  // namespace psg
