#pragma once

#include <cstdint>
#include <vector>

namespace psg::geometry {

/// Exact threshold num/den >= 1.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  static Rational integer(std::int64_t v) { return {v, 1}; }
  std::int64_t floor() const { return num / den; }
  friend bool operator==(const Rational&, const Rational&) = default;
};

/// The exceptional set T_{shift, alpha}: integer points (x, y) such that
/// (x + shift, y + shift) has gcd >= max / alpha.
struct TSetParams {
  std::int64_t shift = 0;
  Rational alpha;
};

/// Integer points {(k v, k u) : k >= 0} of the line x u - y v = 0.
struct PrimitiveLine {
  std::int64_t u = 1;
  std::int64_t v = 1;
  friend auto operator<=>(const PrimitiveLine&, const PrimitiveLine&) = default;
};

/// Throws Error(OutOfQuadrant) when the shifted point is not strictly
/// positive, Error(InvalidArgument) for alpha < 1.
bool t_membership(std::int64_t x, std::int64_t y, const TSetParams& p);

/// Coprime (u, v) with 1 <= u, v <= floor(alpha), ordered by (u, v).
std::vector<PrimitiveLine> t_lines(Rational alpha);

/// 1-norm distance from the shifted point to the union of t_lines(alpha).
/// The origin counts as a point of every line.
std::int64_t t_distance(std::int64_t x, std::int64_t y, const TSetParams& p);

struct TwoVsTwoCondition {
  bool holds = false;
  std::int64_t big_a = 0;      // ceil(a / (b - a)) + 1
  std::int64_t threshold = 0;  // 2 A (a + 2b)
  std::int64_t distance = 0;   // dist((c, d), T_{b, A})
};

/// Dominance condition for ({a, b}, {c, d}). The distance is measured to the
/// set shifted by b. Throws Error(DegenerateSlope) when b == a and
/// Error(InvalidArgument) when b < a.
TwoVsTwoCondition two_vs_two_condition(std::int64_t a, std::int64_t b,
                                       std::int64_t c, std::int64_t d);

}  // namespace psg::geometry
