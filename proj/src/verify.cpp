#include "psg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "psg/engine.hpp"
#include "psg/error.hpp"
#include "psg/geometry.hpp"
#include "psg/mapgen.hpp"
#include "psg/numeric.hpp"
#include "psg/oracles.hpp"
#include "psg/parallel.hpp"

namespace psg::verify {

void FormLog::record(const Ruleset& rules, const EventualForm& form) {
  const SequenceClass cls = form.sequence_class();
  const auto& period = form.period;
  const bool has_p = std::find(period.begin(), period.end(), Label::P) != period.end();
  const bool has_n = std::find(period.begin(), period.end(), Label::N) != period.end();
  std::lock_guard lock(mutex_);
  ++games_;
  if (cls == SequenceClass::UltimatelyImpartial) return;
  ++checked_;
  if (has_p && !has_n) {
    if (violations_++ == 0) {
      first_violation_ = rules.to_string() + " period " + to_string(period);
    }
  }
}

std::size_t FormLog::games() const {
  std::lock_guard lock(mutex_);
  return games_;
}
std::size_t FormLog::checked() const {
  std::lock_guard lock(mutex_);
  return checked_;
}
std::size_t FormLog::violations() const {
  std::lock_guard lock(mutex_);
  return violations_;
}
std::string FormLog::first_violation() const {
  std::lock_guard lock(mutex_);
  return first_violation_;
}

namespace {

using Rng = std::mt19937_64;

std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::vector<Move> random_set(Rng& rng, std::size_t size, Move lo, Move hi) {
  std::set<Move> s;
  while (s.size() < size) s.insert(uniform(rng, lo, hi));
  return {s.begin(), s.end()};
}

// Counts checks and keeps the first few failure messages.
class Checker {
 public:
  void expect(bool ok, const std::function<std::string()>& what) {
    std::lock_guard lock(mutex_);
    ++checks_;
    if (ok) return;
    if (failures_++ < 3) {
      if (!detail_.empty()) detail_ += "; ";
      detail_ += what();
    }
  }

  SuiteResult finish(std::string summary) const {
    SuiteResult r;
    r.passed = failures_ == 0;
    r.checks = checks_;
    r.detail = failures_ == 0 ? std::move(summary)
                              : std::to_string(failures_) + " failed: " + detail_;
    return r;
  }

 private:
  std::mutex mutex_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string detail_;
};

struct Context {
  const Options& options;
  FormLog& log;
  Rng rng;

  EventualForm form(const Ruleset& rules, std::optional<Heap> cap = {}) {
    EventualForm f = detect_eventual_form(rules, cap);
    log.record(rules, f);
    return f;
  }
  // Checks a prediction and logs the engine form behind it.
  oracles::Verdict check(const oracles::Prediction& p, Heap cap) {
    if (p.applicable && p.rules &&
        p.kind != oracles::PredictionKind::PositionFamily) {
      form(*p.rules);
    }
    return oracles::verify(p, cap);
  }
};

std::string word_of(Label l, Heap count) {
  return std::string(static_cast<std::size_t>(count), to_char(l));
}

SuiteResult example(Context& ctx) {
  Checker ck;
  const Ruleset rules = Ruleset::make({1, 2}, {1, 3});
  const std::string seq = outcome_sequence(rules, 7).to_string();
  ck.expect(seq == "PNLNLLLL", [&] { return "sequence " + seq; });
  const EventualForm f = ctx.form(rules);
  ck.expect(to_string(f.preperiod) == "PNLN" && to_string(f.period) == "L",
            [&] { return "form " + to_string(f.preperiod) + "|" + to_string(f.period); });
  ck.expect(f.sequence_class() == SequenceClass::StrongLeft,
            [&] { return std::string(to_string(f.sequence_class())); });
  return ck.finish("({1,2},{1,3}) = PNLN (L)*, SD-Left");
}

SuiteResult one_vs_one(Context& ctx) {
  Checker ck;
  for (Move b = 2; b <= 25; ++b) {
    for (Move a = 1; a < b; ++a) {
      const Ruleset rules = Ruleset::make({a}, {b});
      const EventualForm f = ctx.form(rules);
      const std::string want =
          word_of(Label::P, a) + word_of(Label::L, b - a) + word_of(Label::N, a);
      ck.expect(f.preperiod.empty() && to_string(f.period) == want &&
                    f.sequence_class() == SequenceClass::WeakLeft,
                [&] { return rules.to_string() + " period " + to_string(f.period); });
      const auto v = oracles::verify(oracles::one_vs_one(a, b), 0);
      ck.expect(v.ok, [&] { return rules.to_string() + ": " + v.detail; });
    }
  }
  return ck.finish("1 <= a < b <= 25 purely periodic P^a L^(b-a) N^a, WD-Left");
}

SuiteResult two_vs_one(Context& ctx) {
  Checker ck;
  std::size_t cases[4] = {0, 0, 0, 0};
  for (Move b = 2; b <= 20; ++b) {
    for (Move a = 1; a < b; ++a) {
      for (Move c = 1; c <= 20; ++c) {
        const auto p = oracles::two_vs_one(a, b, c);
        const Move g = p.values.at("g");
        ++cases[g <= c ? 0 : g < 2 * c ? 1 : g == 2 * c ? 2 : 3];
        const auto v = ctx.check(p, 0);
        ck.expect(v.ok, [&] { return p.rules->to_string() + ": " + v.detail; });
      }
    }
  }
  return ck.finish("cases g<=c:" + std::to_string(cases[0]) +
                   " c<g<2c:" + std::to_string(cases[1]) +
                   " g=2c:" + std::to_string(cases[2]) +
                   " g>2c:" + std::to_string(cases[3]));
}

SuiteResult far_regime(Context& ctx) {
  Checker ck;
  constexpr Heap kCap = 2000;
  std::size_t with_d = 0;
  for (int sample = 0; sample < 200; ++sample) {
    const Move a = uniform(ctx.rng, 1, 10);
    const Move b = uniform(ctx.rng, 2 * a, 2 * a + 15);
    const Move c = uniform(ctx.rng, b + 1, b + 40);
    std::optional<Move> d;
    if (uniform(ctx.rng, 0, 1) == 1) {
      d = uniform(ctx.rng, c + b + 1, c + b + 60);
      ++with_d;
    }
    const auto p = oracles::full_sequence_far(a, b, c, d);
    ck.expect(p.applicable, [&] { return "sampler produced " + p.failed; });
    const auto v = ctx.check(p, kCap);
    ck.expect(v.ok, [&] { return p.rules->to_string() + ": " + v.detail; });
  }
  return ck.finish("200 samples (" + std::to_string(with_d) +
                   " with d) letterwise equal up to heap 2000");
}

SuiteResult ones_to_k(Context& ctx) {
  Checker ck;
  for (Move k = 1; k <= 6; ++k) {
    for (Move c = 0; c <= 10; ++c) {
      std::vector<Move> right(static_cast<std::size_t>(k));
      std::iota(right.begin(), right.end(), c + 1);
      const auto p = oracles::ones_to_k(k, right);
      const EventualForm f = ctx.form(*p.rules);
      const std::string want =
          "P" + word_of(Label::L, c) + word_of(Label::N, k);
      ck.expect(f.preperiod.empty() && to_string(f.period) == want,
                [&] { return p.rules->to_string() + " period " + to_string(f.period); });
      const auto v = oracles::verify(p, 0);
      ck.expect(v.ok, [&] { return p.rules->to_string() + ": " + v.detail; });
    }
  }
  int sampled = 0;
  while (sampled < 100) {
    const Move k = uniform(ctx.rng, 2, 6);
    auto right = random_set(ctx.rng, static_cast<std::size_t>(k), 1, 20);
    if (right.back() - right.front() == k - 1) continue;
    ++sampled;
    const auto p = oracles::ones_to_k(k, right);
    const EventualForm f = ctx.form(*p.rules);
    ck.expect(f.sequence_class() == SequenceClass::StrongLeft, [&] {
      return p.rules->to_string() + " is " +
             std::string(to_string(f.sequence_class()));
    });
  }
  return ck.finish("k<=6, c<=10 periods P L^c N^k; 100 non-interval sets SD-Left");
}

SuiteResult frobenius_preperiod(Context& ctx) {
  Checker ck;
  std::vector<std::vector<Move>> sets = {{2, 3}};
  for (Move c = 3; c <= 7; ++c) sets.push_back({c, c + 1});
  std::set<std::vector<Move>> seen(sets.begin(), sets.end());
  while (sets.size() < 30) {
    auto s = random_set(ctx.rng, static_cast<std::size_t>(uniform(ctx.rng, 2, 4)), 1, 12);
    Move g = 0;
    for (Move x : s) g = std::gcd(g, x + 1);
    if (g != 1 || !seen.insert(s).second) continue;
    sets.push_back(s);
  }
  std::string typo_note;
  for (const auto& s : sets) {
    const Ruleset rules = Ruleset::make(s, {1});
    std::vector<std::int64_t> shifted;
    for (Move x : s) shifted.push_back(x + 1);
    const std::int64_t frob = frobenius(CoinSet::make(shifted));
    const EventualForm f = ctx.form(rules);
    const auto last_exception = static_cast<std::int64_t>(f.preperiod.size()) - 1;
    ck.expect(f.sequence_class() == SequenceClass::StrongLeft &&
                  last_exception == frob,
              [&] {
                return rules.to_string() + ": last non-L " +
                       std::to_string(last_exception) + ", frobenius " +
                       std::to_string(frob);
              });
    if (s.size() == 2 && s[1] == s[0] + 1) {
      const Move c = s[0];
      ck.expect(last_exception == c * (c + 1) - 1, [&] {
        return "c=" + std::to_string(c) + " measured " + std::to_string(last_exception);
      });
      if (c == 2) {
        typo_note = "c=2: measured " + std::to_string(last_exception) +
                    " = c(c+1)-1, not c^2+2c-1 = " + std::to_string(c * c + 2 * c - 1);
      }
    }
  }
  return ck.finish("30 sets, last non-L index = frobenius(S_L+1); " + typo_note);
}

SuiteResult knapsack(Context& ctx) {
  Checker ck;
  std::size_t yes = 0;
  for (int sample = 0; sample < 200; ++sample) {
    const auto s = random_set(ctx.rng, static_cast<std::size_t>(uniform(ctx.rng, 1, 4)), 2, 12);
    const std::int64_t n = uniform(ctx.rng, 0, 200);
    const CoinSet coins = CoinSet::make(s);
    const auto game = knapsack_to_game(coins, n);
    const bool left_loses =
        outcome(game.rules, game.heap).left_first == Player::Right;
    const bool rep = representable(coins, n);
    yes += rep;
    ck.expect(left_loses == rep, [&] {
      return game.rules.to_string() + " at " + std::to_string(n);
    });
  }
  return ck.finish("200 instances, " + std::to_string(yes) + " representable");
}

SuiteResult stability(Context& ctx) {
  Checker ck;
  const Ruleset base = Ruleset::make({2, 3}, {1});
  for (Move d = 7; d <= 40; ++d) {
    const Ruleset rules = Ruleset::make({2, 3}, {1, d});
    const EventualForm f = ctx.form(rules);
    const Heap bound = (d + 3) * (d + 3);
    ck.expect(f.sequence_class() == SequenceClass::StrongLeft &&
                  static_cast<Heap>(f.preperiod.size()) <= bound,
              [&] {
                return rules.to_string() + " " +
                       std::string(to_string(f.sequence_class())) + " preperiod " +
                       std::to_string(f.preperiod.size());
              });
    const auto p = oracles::stability_check(base, d);
    ck.expect(p.applicable && p.preperiod_bound == bound, [&] {
      return "prediction for d=" + std::to_string(d) + ": " + p.failed;
    });
    if (p.applicable) {
      const auto v = oracles::verify(p, 0);
      ck.expect(v.ok, [&] { return v.detail; });
    }
  }
  const Ruleset fair = Ruleset::make({2, 3}, {1, 6});
  const EventualForm f6 = ctx.form(fair);
  ck.expect(f6.sequence_class() == SequenceClass::Fair, [&] {
    return "d=6 is " + std::string(to_string(f6.sequence_class()));
  });
  ck.expect(!oracles::stability_check(base, 6).applicable,
            [] { return std::string("d=6 accepted by the hypothesis"); });
  return ck.finish("d in [7,40] SD-Left within (d+3)^2; d=6 Fair (period " +
                   to_string(f6.period) + ")");
}

SuiteResult constructions(Context& ctx) {
  Checker ck;
  std::vector<std::vector<Move>> sets;
  for (unsigned mask = 1; mask < (1u << 8); ++mask) {
    if (std::popcount(mask) > 3) continue;
    std::vector<Move> s;
    for (Move x = 1; x <= 8; ++x) {
      if (mask & (1u << (x - 1))) s.push_back(x);
    }
    sets.push_back(std::move(s));
  }
  for (const auto& s : sets) {
    const auto dom = oracles::right_dominator(s);
    const auto v1 = ctx.check(dom, 0);
    ck.expect(v1.ok, [&] { return dom.rules->to_string() + ": " + v1.detail; });

    const auto fair = oracles::right_fair(s);
    const auto v2 = oracles::verify(fair, 0);
    ck.expect(v2.ok, [&] { return fair.rules->to_string() + ": " + v2.detail; });

    const auto spoil = oracles::left_spoiler(s);
    const auto v3 = oracles::verify(spoil, 0);
    ck.expect(v3.ok, [&] { return spoil.rules->to_string() + ": " + v3.detail; });
    const EventualForm f = ctx.form(*spoil.rules);
    ck.expect(f.sequence_class() != SequenceClass::StrongLeft,
              [&] { return spoil.rules->to_string() + " is SD-Left"; });
  }
  return ck.finish(std::to_string(sets.size()) +
                   " sets: dominator SD-Right, o(kn)=R, o_L(k n0)=R for k<=10");
}

SuiteResult geometry_suite(Context& ctx) {
  using namespace geometry;
  Checker ck;
  const Rational alphas[] = {{1, 1}, {3, 2}, {2, 1}, {5, 2}, {3, 1},
                             {4, 1}, {13, 3}, {5, 1}, {6, 1}, {13, 2}};
  for (const Rational& alpha : alphas) {
    const auto lines = t_lines(alpha);
    const TSetParams params{0, alpha};
    std::size_t bad = 0;
    for (std::int64_t x = 1; x <= 200; ++x) {
      for (std::int64_t y = 1; y <= 200; ++y) {
        const bool member = t_membership(x, y, params);
        bool on_line = false;
        for (const auto& l : lines) {
          if (x * l.u == y * l.v) {
            on_line = true;
            break;
          }
        }
        const bool zero = t_distance(x, y, params) == 0;
        if (member != on_line || member != zero) ++bad;
      }
    }
    ck.expect(bad == 0, [&] {
      return "alpha " + std::to_string(alpha.num) + "/" +
             std::to_string(alpha.den) + ": " + std::to_string(bad) + " points";
    });
  }
  for (int sample = 0; sample < 500; ++sample) {
    const std::int64_t u = uniform(ctx.rng, 1, 8);
    const std::int64_t v = uniform(ctx.rng, 1, 8);
    const std::int64_t x = uniform(ctx.rng, 1, 500);
    // y closest to x u / v, nudged by a small offset.
    const std::int64_t y = std::max<std::int64_t>(
        1, (x * u + v / 2) / v + uniform(ctx.rng, -2, 2));
    const std::int64_t a = std::max<std::int64_t>(1, std::llabs(x * u - y * v));
    const std::int64_t dist =
        t_distance(x, y, TSetParams{0, Rational::integer(std::max(u, v))});
    ck.expect(dist <= a * (u + v), [&] {
      return "(" + std::to_string(x) + "," + std::to_string(y) + ") u=" +
             std::to_string(u) + " v=" + std::to_string(v) + " dist " +
             std::to_string(dist);
    });
  }
  return ck.finish("line/gcd/zero-distance agree on [1,200]^2 for 10 alphas; "
                   "500 distance-bound samples");
}

SuiteResult interval(Context& ctx) {
  Checker ck;
  int accepted = 0;
  std::size_t attempts = 0;
  // Property (ii) counterexamples, split by whether b < c < a + b, where
  // I^P_00 = [0, a) lies among the b heaps preceding I^N_01 = [c, c + a).
  std::size_t preceding_small_c = 0, preceding_other = 0;
  std::string first_preceding;
  std::size_t label_ok = 0;
  while (accepted < 100 && attempts < 2000000) {
    ++attempts;
    const Move a = uniform(ctx.rng, 1, 8);
    const Move b = a + uniform(ctx.rng, 1, 8);
    const Move c = uniform(ctx.rng, b + 1, b + 600);
    const Move d = uniform(ctx.rng, c + 1, c + 600);
    if (!geometry::two_vs_two_condition(a, b, c, d).holds) continue;
    ++accepted;
    const auto system = oracles::interval_system(a, b, c, d);
    const auto props = oracles::check_interval_properties(system);
    const std::string name = "{" + std::to_string(a) + "," + std::to_string(b) +
                             "}/{" + std::to_string(c) + "," + std::to_string(d) + "}";
    if (!props.clear_before_n) {
      ++(c < a + b ? preceding_small_c : preceding_other);
      if (first_preceding.empty()) first_preceding = name;
    }
    ck.expect(props.disjoint && props.shift_c && props.shift_d && props.intersection,
              [&] {
                return name + " properties (i),(iii)-(v) " +
                       std::to_string(props.disjoint) + std::to_string(props.shift_c) +
                       std::to_string(props.shift_d) + std::to_string(props.intersection);
              });
    const auto p = oracles::interval_prediction(a, b, c, d);
    const auto v = ctx.check(p, std::max<Heap>(2000, 2 * system.end()));
    label_ok += v.ok;
    ck.expect(v.ok, [&] { return name + ": " + v.detail; });
  }
  ck.expect(accepted == 100, [&] {
    return "only " + std::to_string(accepted) + " samples passed the condition";
  });
  const std::size_t preceding = preceding_small_c + preceding_other;
  ck.expect(preceding == 0, [&] {
    return "property (ii) fails for " + std::to_string(preceding) + " of " +
           std::to_string(accepted) + " games (" + std::to_string(preceding_small_c) +
           " with b < c < a+b, e.g. " + first_preceding +
           ": I^P_00 = [0,a) meets the b heaps before I^N_01 = [c,c+a)); "
           "labels and SD-Left still matched in " + std::to_string(label_ok) + " games";
  });
  return ck.finish(std::to_string(accepted) + " games passing the condition (" +
                   std::to_string(attempts) + " draws): properties (i)-(v), "
                   "labels and SD-Left");
}

SuiteResult figure1(Context& ctx) {
  Checker ck;
  std::string summary;
  for (auto [a, b] : {std::pair<Move, Move>{4, 11}, {7, 9}}) {
    const auto range = mapgen::default_range(b);
    const auto map = mapgen::domination_map(a, b, range, range,
                                            mapgen::kDefaultCellCap,
                                            ctx.options.threads);
    for (Move d = range.lo; d <= range.hi; ++d) {
      for (Move c = range.lo; c <= range.hi; ++c) {
        const auto& cell = map.at(c, d);
        if (!cell) continue;
        // Log the forms of cells whose period may contain P.
        if (*cell != SequenceClass::StrongLeft &&
            *cell != SequenceClass::StrongRight) {
          ctx.form(mapgen::cell_rules(a, b, c, d), map.cap);
        }
      }
    }
    const auto violations = mapgen::condition_violations(map);
    ck.expect(violations.empty(), [&] {
      return "(" + std::to_string(a) + "," + std::to_string(b) + ") " +
             std::to_string(violations.size()) + " cells violate condition => blue";
    });
    const std::string ppm = mapgen::render_map(map, mapgen::Format::Ppm);
    const std::string csv = mapgen::render_map(map, mapgen::Format::Csv);
    ck.expect(ppm == mapgen::render_map(map, mapgen::Format::Ppm) &&
                  csv == mapgen::render_map(map, mapgen::Format::Csv),
              [] { return std::string("render not deterministic"); });
    // An independently computed strip must reproduce the same cells.
    const mapgen::Range strip{range.lo, range.lo + 9};
    const auto again = mapgen::domination_map(a, b, range, strip,
                                              mapgen::kDefaultCellCap, 1);
    bool same = true;
    for (Move d = strip.lo; d <= strip.hi; ++d) {
      for (Move c = range.lo; c <= range.hi; ++c) {
        same = same && again.at(c, d) == map.at(c, d);
      }
    }
    ck.expect(same, [] { return std::string("recomputed cells differ"); });

    const auto counts = mapgen::summary_json(map)["counts"];
    std::size_t condition_cells = 0;
    for (Move d = range.lo; d <= range.hi; ++d) {
      for (Move c = range.lo; c <= range.hi; ++c) {
        condition_cells += geometry::two_vs_two_condition(a, b, c, d).holds;
      }
    }
    if (!summary.empty()) summary += "; ";
    summary += "(" + std::to_string(a) + "," + std::to_string(b) + ") " +
               counts.dump() + " unresolved=" +
               mapgen::summary_json(map)["unresolved"].dump() +
               " condition-cells=" + std::to_string(condition_cells);
  }
  return ck.finish(summary);
}

SuiteResult engine_consistency(Context& ctx) {
  Checker ck;
  std::vector<std::vector<Move>> subsets;
  for (unsigned mask = 1; mask < 64; ++mask) {
    std::vector<Move> s;
    for (Move x = 1; x <= 6; ++x) {
      if (mask & (1u << (x - 1))) s.push_back(x);
    }
    subsets.push_back(std::move(s));
  }
  parallel_for(subsets.size(), ctx.options.threads, [&](std::size_t li) {
    for (const auto& right : subsets) {
      const Ruleset rules = Ruleset::make(subsets[li], right);
      const OutcomeSequence seq(rules, 40);
      std::size_t bad = 0;
      for (Heap n = 0; n <= 40; ++n) {
        if (seq.outcome(n) != brute_force_outcome(rules, n)) ++bad;
      }
      ck.expect(bad == 0, [&] { return rules.to_string() + " differs from minimax"; });
    }
  });
  for (int sample = 0; sample < 200; ++sample) {
    const Ruleset rules = Ruleset::make(
        random_set(ctx.rng, static_cast<std::size_t>(uniform(ctx.rng, 1, 4)), 1, 15),
        random_set(ctx.rng, static_cast<std::size_t>(uniform(ctx.rng, 1, 4)), 1, 15));
    const Ruleset conj = rules.conjugate();
    const EventualForm f = ctx.form(rules);
    const EventualForm g = ctx.form(conj);
    const OutcomeSequence s1(rules, 200), s2(conj, 200);
    bool seq_ok = true;
    for (Heap n = 0; n <= 200; ++n) seq_ok = seq_ok && s2.label(n) == mirror(s1.label(n));
    ck.expect(seq_ok && g == f.mirrored(),
              [&] { return rules.to_string() + " conjugate mismatch"; });
  }
  return ck.finish("3969 rulesets x heaps 0..40 match minimax; 200 conjugate pairs mirror");
}

SuiteResult forbidden_period(Context& ctx, const Options& options) {
  if (ctx.log.games() == 0) {
    for (const auto& s : suites()) {
      if (s.criterion <= 12) run_suite(s.name, options, ctx.log);
    }
  }
  Checker ck;
  ck.expect(ctx.log.violations() == 0, [&] {
    return std::to_string(ctx.log.violations()) + " periods with P but no N, e.g. " +
           ctx.log.first_violation();
  });
  return ck.finish(std::to_string(ctx.log.checked()) + " non-UI forms of " +
                   std::to_string(ctx.log.games()) + " logged: P in period implies N");
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> all = {
      {1, "example", "outcome sequence of ({1,2},{1,3})"},
      {2, "one-vs-one", "({a},{b}) periods"},
      {3, "two-vs-one", "({a,b},{c}) four-case classification"},
      {4, "far-regime", "full sequences for c > b >= 2a (and d > c + b)"},
      {5, "ones-to-k", "({1..k}, S_R) with |S_R| = k"},
      {6, "frobenius-preperiod", "preperiod of (S_L,{1}) is a Frobenius number"},
      {7, "knapsack", "knapsack reduction soundness"},
      {8, "stability", "adding a large Right move keeps dominance"},
      {9, "constructions", "Right-favourable set constructions"},
      {10, "geometry", "T-set lines, membership and distance"},
      {11, "interval", "two-vs-two interval system"},
      {12, "figure1", "domination maps (4,11) and (7,9)"},
      {13, "forbidden-period", "P in a non-UI period implies N"},
      {14, "engine-consistency", "DP vs minimax, conjugation symmetry"},
  };
  return all;
}

SuiteResult run_suite(std::string_view name, const Options& options,
                      FormLog& log) {
  const auto& all = suites();
  auto it = std::find_if(all.begin(), all.end(),
                         [&](const SuiteInfo& s) { return s.name == name; });
  if (it == all.end()) {
    throw Error(ErrorCode::InvalidArgument,
                "unknown verify suite '" + std::string(name) + "'");
  }
  // One independent random stream per suite.
  Context ctx{options, log,
              Rng(options.seed * 1000003ULL + static_cast<std::uint64_t>(it->criterion))};
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r;
  try {
    switch (it->criterion) {
      case 1: r = example(ctx); break;
      case 2: r = one_vs_one(ctx); break;
      case 3: r = two_vs_one(ctx); break;
      case 4: r = far_regime(ctx); break;
      case 5: r = ones_to_k(ctx); break;
      case 6: r = frobenius_preperiod(ctx); break;
      case 7: r = knapsack(ctx); break;
      case 8: r = stability(ctx); break;
      case 9: r = constructions(ctx); break;
      case 10: r = geometry_suite(ctx); break;
      case 11: r = interval(ctx); break;
      case 12: r = figure1(ctx); break;
      case 13: r = forbidden_period(ctx, options); break;
      case 14: r = engine_consistency(ctx); break;
    }
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.criterion = it->criterion;
  r.name = std::string(it->name);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<SuiteResult> run(std::string_view which, const Options& options) {
  FormLog log;
  std::vector<SuiteResult> out;
  if (which == "all") {
    for (const auto& s : suites()) out.push_back(run_suite(s.name, options, log));
  } else {
    out.push_back(run_suite(which, options, log));
  }
  return out;
}

std::string format_result(const SuiteResult& r) {
  return std::string(r.passed ? "PASS" : "FAIL") + " " +
         std::to_string(r.criterion) + " " + r.name + " [" +
         std::to_string(r.checks) + " checks]: " + r.detail;
}

}  // namespace psg::verify
