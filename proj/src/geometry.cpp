#include "psg/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#include "psg/error.hpp"

namespace psg::geometry {
namespace {

void check_alpha(Rational alpha) {
  if (alpha.den <= 0 || alpha.num < alpha.den) {
    throw Error(ErrorCode::InvalidArgument,
                "alpha must be >= 1, got " + std::to_string(alpha.num) + "/" +
                    std::to_string(alpha.den));
  }
}

void check_quadrant(std::int64_t x, std::int64_t y, const TSetParams& p) {
  if (x + p.shift <= 0 || y + p.shift <= 0) {
    throw Error(ErrorCode::OutOfQuadrant,
                "shifted point (" + std::to_string(x + p.shift) + ", " +
                    std::to_string(y + p.shift) + ") not positive");
  }
}

}  // namespace

bool t_membership(std::int64_t x, std::int64_t y, const TSetParams& p) {
  check_alpha(p.alpha);
  check_quadrant(x, y, p);
  const std::int64_t sx = x + p.shift, sy = y + p.shift;
  // gcd >= max / alpha  <=>  gcd * num >= max * den
  return std::gcd(sx, sy) * p.alpha.num >= std::max(sx, sy) * p.alpha.den;
}

std::vector<PrimitiveLine> t_lines(Rational alpha) {
  check_alpha(alpha);
  const std::int64_t top = alpha.floor();
  std::vector<PrimitiveLine> lines;
  for (std::int64_t u = 1; u <= top; ++u) {
    for (std::int64_t v = 1; v <= top; ++v) {
      if (std::gcd(u, v) == 1) lines.push_back({u, v});
    }
  }
  return lines;
}

std::int64_t t_distance(std::int64_t x, std::int64_t y, const TSetParams& p) {
  check_alpha(p.alpha);
  check_quadrant(x, y, p);
  const std::int64_t sx = x + p.shift, sy = y + p.shift;
  std::int64_t best = sx + sy;  // origin
  for (const auto& line : t_lines(p.alpha)) {
    // |sx - k v| + |sy - k u| is convex and piecewise linear in k with
    // breakpoints sx / v and sy / u.
    const std::int64_t centers[] = {sx / line.v,
                                    sy / line.u};
    for (std::int64_t c : centers) {
      for (std::int64_t k = std::max<std::int64_t>(0, c - 2); k <= c + 3; ++k) {
        best = std::min<std::int64_t>(best, std::llabs(sx - k * line.v) +
                                  std::llabs(sy - k * line.u));
      }
    }
  }
  return best;
}

TwoVsTwoCondition two_vs_two_condition(std::int64_t a, std::int64_t b,
                                       std::int64_t c, std::int64_t d) {
  if (b == a) {
    throw Error(ErrorCode::DegenerateSlope, "b equals a");
  }
  if (b < a || a <= 0) {
    throw Error(ErrorCode::InvalidArgument, "need 0 < a < b");
  }
  const std::int64_t k = b - a;
  TwoVsTwoCondition out;
  out.big_a = (a + k - 1) / k + 1;
  out.threshold = 2 * out.big_a * (a + 2 * b);
  out.distance =
      t_distance(c, d, TSetParams{b, Rational::integer(out.big_a)});
  out.holds = out.distance >= out.threshold;
  return out;
}

}  // namespace psg::geometry
