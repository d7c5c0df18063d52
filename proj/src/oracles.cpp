#include "psg/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "psg/error.hpp"
#include "psg/geometry.hpp"

namespace psg::oracles {
namespace {

Word repeat(Label label, Heap count) {
  return Word(static_cast<std::size_t>(std::max<Heap>(count, 0)), label);
}

Word concat(std::initializer_list<Word> parts) {
  Word out;
  for (const auto& w : parts) out.insert(out.end(), w.begin(), w.end());
  return out;
}

Prediction rejected(std::string theorem, PredictionKind kind,
                    std::string failed, std::string reason) {
  Prediction p;
  p.theorem = std::move(theorem);
  p.kind = kind;
  p.applicable = false;
  p.failed = std::move(failed);
  p.reason = std::move(reason);
  return p;
}

Prediction accepted(std::string theorem, PredictionKind kind, Ruleset rules) {
  Prediction p;
  p.theorem = std::move(theorem);
  p.kind = kind;
  p.applicable = true;
  p.rules = std::move(rules);
  return p;
}

std::string describe(const EventualForm& f) {
  return "preperiod=" + to_string(f.preperiod) + " period=" + to_string(f.period);
}

}  // namespace

std::string_view to_string(PredictionKind kind) {
  switch (kind) {
    case PredictionKind::FullSequence: return "FullSequence";
    case PredictionKind::EventualForm: return "EventualForm";
    case PredictionKind::ClassOnly: return "ClassOnly";
    case PredictionKind::PositionFamily: return "PositionFamily";
  }
  return "?";
}

Verdict verify(const Prediction& pred, Heap cap) {
  if (!pred.applicable || !pred.rules) {
    return {false, "prediction not applicable: " + pred.failed};
  }
  const Ruleset& rules = *pred.rules;

  if (pred.kind == PredictionKind::PositionFamily) {
    const auto& fam = *pred.family;
    const OutcomeSequence seq(rules, 10 * fam.stride);
    for (Heap k = 1; k <= 10; ++k) {
      const Outcome o = seq.outcome(k * fam.stride);
      const bool ok = fam.property == PositionFamily::Property::OutcomeR
                          ? o.label() == Label::R
                          : o.left_first == Player::Right;
      if (!ok) {
        return {false, "heap " + std::to_string(k * fam.stride) + " has " +
                           std::string(1, to_char(o.label()))};
      }
    }
    return {true, ""};
  }

  OutcomeSequence seq(rules);
  if (pred.kind == PredictionKind::FullSequence) {
    seq.extend_to(cap);
    for (Heap n = 0; n <= cap; ++n) {
      if (seq.label(n) != pred.form->at(n)) {
        return {false, "heap " + std::to_string(n) + ": engine " +
                           std::string(1, to_char(seq.label(n))) +
                           ", predicted " +
                           std::string(1, to_char(pred.form->at(n)))};
      }
    }
  }
  const EventualForm engine =
      detect_eventual_form(seq, std::max(cap, default_cap(rules)));

  if (pred.sequence_class && engine.sequence_class() != *pred.sequence_class) {
    return {false, "class " + std::string(to_string(engine.sequence_class())) +
                       ", predicted " +
                       std::string(to_string(*pred.sequence_class))};
  }
  if (pred.form && minimize(*pred.form) != engine) {
    return {false, "engine " + describe(engine) + ", predicted " +
                       describe(minimize(*pred.form))};
  }
  if (pred.residue_period) {
    const Word& w = *pred.residue_period;
    const auto p = static_cast<Heap>(w.size());
    if (static_cast<Heap>(engine.period.size()) != p) {
      return {false, "engine period " + to_string(engine.period) +
                         ", predicted residues " + to_string(w)};
    }
    const auto pre = static_cast<Heap>(engine.preperiod.size());
    for (Heap n = pre; n < pre + p; ++n) {
      if (engine.at(n) != w[static_cast<std::size_t>(n % p)]) {
        return {false, "engine " + describe(engine) + ", predicted residues " +
                           to_string(w)};
      }
    }
  }
  if (pred.preperiod_bound &&
      static_cast<Heap>(engine.preperiod.size()) > *pred.preperiod_bound) {
    return {false, "preperiod " + std::to_string(engine.preperiod.size()) +
                       " exceeds bound " +
                       std::to_string(*pred.preperiod_bound)};
  }
  return {true, ""};
}

Prediction one_vs_one(Move a, Move b) {
  const std::string name = "one-vs-one";
  if (a <= 0 || a >= b) {
    return rejected(name, PredictionKind::EventualForm, "0<a<b",
                    "needs 0 < a < b, got a=" + std::to_string(a) +
                        " b=" + std::to_string(b));
  }
  auto p = accepted(name, PredictionKind::EventualForm,
                    Ruleset::make({a}, {b}));
  p.form = EventualForm{
      {}, concat({repeat(Label::P, a), repeat(Label::L, b - a),
                  repeat(Label::N, a)})};
  p.sequence_class = SequenceClass::WeakLeft;
  return p;
}

Prediction two_vs_one(Move a, Move b, Move c) {
  const std::string name = "two-vs-one";
  if (a <= 0 || a >= b) {
    return rejected(name, PredictionKind::EventualForm, "0<a<b",
                    "needs 0 < a < b");
  }
  if (c <= 0) {
    return rejected(name, PredictionKind::EventualForm, "c>0", "needs c > 0");
  }
  const Move g = std::gcd(a + c, b + c);
  Ruleset rules = Ruleset::make({a, b}, {c});
  if (g <= c) {
    auto p = accepted(name, PredictionKind::ClassOnly, std::move(rules));
    p.sequence_class = SequenceClass::StrongLeft;
    p.values["g"] = g;
    return p;
  }
  auto p = accepted(name, PredictionKind::EventualForm, std::move(rules));
  p.values["g"] = g;
  if (g < 2 * c) {
    p.residue_period = concat({repeat(Label::P, g - c),
                               repeat(Label::L, 2 * c - g),
                               repeat(Label::N, g - c)});
    p.sequence_class = SequenceClass::WeakLeft;
  } else if (g == 2 * c) {
    p.residue_period = concat({repeat(Label::P, c), repeat(Label::N, c)});
    p.sequence_class = SequenceClass::UltimatelyImpartial;
  } else {
    p.residue_period = concat({repeat(Label::P, c), repeat(Label::R, g - 2 * c),
                               repeat(Label::N, c)});
    p.sequence_class = SequenceClass::WeakRight;
  }
  return p;
}

Prediction full_sequence_far(Move a, Move b, Move c, std::optional<Move> d) {
  const std::string name = d ? "far-two-vs-two" : "far-two-vs-one";
  if (a <= 0 || a >= b) {
    return rejected(name, PredictionKind::FullSequence, "0<a<b",
                    "needs 0 < a < b");
  }
  if (b < 2 * a) {
    return rejected(name, PredictionKind::FullSequence, "b>=2a",
                    "needs b >= 2a");
  }
  if (c <= b) {
    return rejected(name, PredictionKind::FullSequence, "c>b", "needs c > b");
  }
  if (d && *d <= c + b) {
    return rejected(name, PredictionKind::FullSequence, "d>c+b",
                    "needs d > c + b, got d=" + std::to_string(*d) +
                        " c+b=" + std::to_string(c + b));
  }
  Word pre = concat({repeat(Label::P, a), repeat(Label::L, c - a),
                     repeat(Label::N, a)});
  if (d) {
    pre = concat({pre, repeat(Label::L, *d - c - a), repeat(Label::N, a)});
  }
  auto p = accepted(name, PredictionKind::FullSequence,
                    d ? Ruleset::make({a, b}, {c, *d})
                      : Ruleset::make({a, b}, {c}));
  p.form = EventualForm{std::move(pre), {Label::L}};
  p.sequence_class = SequenceClass::StrongLeft;
  return p;
}

Prediction ones_to_k(Move k, const std::vector<Move>& right) {
  const std::string name = "ones-to-k";
  if (k <= 0) throw Error(ErrorCode::InvalidArgument, "k must be positive");
  if (static_cast<Move>(right.size()) != k) {
    throw Error(ErrorCode::SizeMismatch,
                "right set has " + std::to_string(right.size()) +
                    " moves, expected " + std::to_string(k));
  }
  std::vector<Move> left(static_cast<std::size_t>(k));
  std::iota(left.begin(), left.end(), Move{1});
  Ruleset rules = Ruleset::make(std::move(left), right);
  const auto r = rules.right();
  const bool consecutive = r.back() - r.front() == k - 1;
  if (!consecutive) {
    auto p = accepted(name, PredictionKind::ClassOnly, std::move(rules));
    p.sequence_class = SequenceClass::StrongLeft;
    return p;
  }
  const Move c = r.front() - 1;
  auto p = accepted(name, PredictionKind::EventualForm, std::move(rules));
  p.values["c"] = c;
  p.form = EventualForm{
      {}, concat({{Label::P}, repeat(Label::L, c), repeat(Label::N, k)})};
  p.sequence_class =
      c > 0 ? SequenceClass::WeakLeft : SequenceClass::UltimatelyImpartial;
  return p;
}

Prediction stability_check(const Ruleset& base, Move d,
                           std::optional<Heap> cap) {
  const std::string name = "stability";
  const auto left = base.left();
  if (left.size() < 2) {
    return rejected(name, PredictionKind::ClassOnly, "|S_L|>=2",
                    "Left needs at least two moves");
  }
  const EventualForm form = detect_eventual_form(base, cap);
  if (form.sequence_class() != SequenceClass::StrongLeft) {
    return rejected(name, PredictionKind::ClassOnly, "base-eventually-L",
                    "base game is " +
                        std::string(to_string(form.sequence_class())));
  }
  // Index of the last non-L heap; every heap above it is L.
  const Heap last_exception = static_cast<Heap>(form.preperiod.size()) - 1;
  const Move max_right = base.right().back();

  std::optional<Heap> best_bound;
  Move best_x1 = 0, best_x2 = 0;
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = i + 1; j < left.size(); ++j) {
      const Move x1 = left[i], x2 = left[j], gap = x2 - x1;
      if (d <= last_exception + std::max(max_right, gap)) continue;
      const Heap span = d + x2;
      const Heap bound = span * ((span + gap - 1) / gap);
      if (!best_bound || bound < *best_bound) {
        best_bound = bound;
        best_x1 = x1;
        best_x2 = x2;
      }
    }
  }
  if (!best_bound) {
    auto p = rejected(name, PredictionKind::ClassOnly, "d>p+max(S_R,x2-x1)",
                      "d=" + std::to_string(d) +
                          " is too small for measured preperiod index " +
                          std::to_string(last_exception));
    p.values["p"] = last_exception;
    return p;
  }
  std::vector<Move> right(base.right().begin(), base.right().end());
  right.push_back(d);
  auto p = accepted(name, PredictionKind::ClassOnly,
                    Ruleset::make({left.begin(), left.end()}, std::move(right)));
  p.sequence_class = SequenceClass::StrongLeft;
  p.preperiod_bound = *best_bound;
  p.values["p"] = last_exception;
  p.values["x1"] = best_x1;
  p.values["x2"] = best_x2;
  return p;
}

Ruleset construct_right_dominator(const std::vector<Move>& left,
                                  std::optional<Heap> cap) {
  Ruleset impartial = Ruleset::make(left, left);
  const EventualForm form = detect_eventual_form(impartial, cap);
  std::vector<Move> right(impartial.left().begin(), impartial.left().end());
  right.push_back(static_cast<Move>(form.period.size()));
  return Ruleset::make(left, std::move(right));
}

Prediction right_dominator(const std::vector<Move>& left,
                           std::optional<Heap> cap) {
  auto p = accepted("right-dominator", PredictionKind::ClassOnly,
                    construct_right_dominator(left, cap));
  p.sequence_class = SequenceClass::StrongRight;
  return p;
}

Construction construct_right_fair(const std::vector<Move>& left) {
  const auto sl = make_move_set(left);
  const std::set<Move> own(sl.begin(), sl.end());
  for (Move n = sl.back() + 1;; ++n) {
    std::vector<Move> right;
    bool ok = true;
    for (Move m : sl) {
      if (own.count(n - m)) {
        ok = false;
        break;
      }
      right.push_back(n - m);
    }
    if (!ok) continue;
    right.push_back(n);
    return {Ruleset::make(sl, std::move(right)), n};
  }
}

Prediction right_fair(const std::vector<Move>& left) {
  auto built = construct_right_fair(left);
  auto p = accepted("right-fair", PredictionKind::PositionFamily,
                    std::move(built.rules));
  p.family = PositionFamily{built.stride, PositionFamily::Property::OutcomeR};
  return p;
}

Construction construct_left_spoiler(const std::vector<Move>& left) {
  const auto sl = make_move_set(left);
  const std::set<Move> own(sl.begin(), sl.end());
  for (Move n0 = sl.back() + 1;; ++n0) {
    std::vector<Move> right;
    bool ok = true;
    for (Move m : sl) {
      if (own.count(n0 - m)) {
        ok = false;
        break;
      }
      right.push_back(n0 - m);
    }
    if (ok) return {Ruleset::make(sl, std::move(right)), n0};
  }
}

Prediction left_spoiler(const std::vector<Move>& left) {
  auto built = construct_left_spoiler(left);
  auto p = accepted("left-spoiler", PredictionKind::PositionFamily,
                    std::move(built.rules));
  p.family =
      PositionFamily{built.stride, PositionFamily::Property::LeftFirstLoses};
  return p;
}

namespace {

const Interval kEmpty{0, 0};

const Interval& find_at(const std::vector<IndexedInterval>& list,
                        std::int64_t i, std::int64_t j) {
  for (const auto& e : list) {
    if (e.i == i && e.j == j) return e.span;
  }
  return kEmpty;
}

Interval shifted(const Interval& x, Heap by) {
  if (x.empty()) return kEmpty;
  return {x.lo + by, x.hi + by};
}

Interval intersect(const Interval& x, const Interval& y) {
  if (x.empty() || y.empty()) return kEmpty;
  Interval out{std::max(x.lo, y.lo), std::min(x.hi, y.hi)};
  return out.empty() ? kEmpty : out;
}

bool overlaps(const Interval& x, const Interval& y) {
  return !intersect(x, y).empty();
}

}  // namespace

const Interval& IntervalSystem::p_at(std::int64_t i, std::int64_t j) const {
  return find_at(p, i, j);
}

const Interval& IntervalSystem::n_at(std::int64_t i, std::int64_t j) const {
  return find_at(n, i, j);
}

Label IntervalSystem::label(Heap heap) const {
  for (const auto& e : p) {
    if (e.span.contains(heap)) return Label::P;
  }
  for (const auto& e : n) {
    if (e.span.contains(heap)) return Label::N;
  }
  return Label::L;
}

Heap IntervalSystem::end() const {
  Heap out = 0;
  for (const auto* list : {&p, &n}) {
    for (const auto& e : *list) {
      if (!e.span.empty()) out = std::max(out, e.span.hi);
    }
  }
  return out;
}

IntervalSystem interval_system(Move a, Move b, Move c, Move d) {
  if (a <= 0 || a >= b) {
    throw Error(ErrorCode::InvalidArgument, "interval system needs 0 < a < b");
  }
  IntervalSystem s{a, b, c, d, 0, {}, {}};
  const Move k = b - a;
  s.big_a = (a + k - 1) / k + 1;
  const std::int64_t top = s.big_a + 1;
  for (std::int64_t i = 0; i <= top; ++i) {
    for (std::int64_t j = 0; i + j <= top; ++j) {
      const Heap alpha = i * (d + b) + j * (c + b);
      const Heap beta = alpha - b;
      Interval ip{alpha, alpha + a - (i + j) * k};
      Interval in{beta, beta + a - (i + j - 1) * k};
      s.p.push_back({i, j, ip.empty() ? kEmpty : ip});
      s.n.push_back({i, j, in.empty() ? kEmpty : in});
    }
  }
  return s;
}

IntervalProperties check_interval_properties(const IntervalSystem& s) {
  IntervalProperties out;
  std::vector<Interval> all;
  for (const auto* list : {&s.p, &s.n}) {
    for (const auto& e : *list) {
      if (!e.span.empty()) all.push_back(e.span);
    }
  }

  out.disjoint = true;
  for (std::size_t x = 0; x < all.size() && out.disjoint; ++x) {
    for (std::size_t y = x + 1; y < all.size(); ++y) {
      if (overlaps(all[x], all[y])) {
        out.disjoint = false;
        break;
      }
    }
  }

  out.clear_before_n = true;
  for (const auto& e : s.n) {
    if (e.span.empty()) continue;
    const Interval before{e.span.lo - s.b, e.span.lo};
    for (const auto& other : all) {
      if (overlaps(before, other)) out.clear_before_n = false;
    }
  }

  out.shift_c = out.shift_d = out.intersection = true;
  for (const auto& e : s.p) {
    // Only index pairs whose neighbours were generated.
    if (e.i + e.j + 1 > s.big_a + 1) continue;
    if (!(shifted(e.span, s.c) == s.n_at(e.i, e.j + 1))) out.shift_c = false;
    if (!(shifted(e.span, s.d) == s.n_at(e.i + 1, e.j))) out.shift_d = false;
  }
  for (const auto& e : s.n) {
    const Interval both =
        intersect(shifted(e.span, s.a), shifted(e.span, s.b));
    if (!(both == s.p_at(e.i, e.j))) out.intersection = false;
  }
  return out;
}

Prediction interval_prediction(Move a, Move b, Move c, Move d) {
  const std::string name = "two-vs-two";
  if (!(0 < a && a < b && b < c && c < d)) {
    return rejected(name, PredictionKind::FullSequence, "a<b<c<d",
                    "needs 0 < a < b < c < d");
  }
  const auto cond = geometry::two_vs_two_condition(a, b, c, d);
  if (!cond.holds) {
    auto p = rejected(name, PredictionKind::FullSequence, "dist>=2A(a+2b)",
                      "distance " + std::to_string(cond.distance) +
                          " below threshold " + std::to_string(cond.threshold));
    p.values["distance"] = cond.distance;
    p.values["threshold"] = cond.threshold;
    return p;
  }
  const IntervalSystem system = interval_system(a, b, c, d);
  Word pre;
  for (Heap n = 0; n < system.end(); ++n) pre.push_back(system.label(n));
  auto p = accepted(name, PredictionKind::FullSequence,
                    Ruleset::make({a, b}, {c, d}));
  p.form = EventualForm{std::move(pre), {Label::L}};
  p.sequence_class = SequenceClass::StrongLeft;
  p.values["A"] = cond.big_a;
  p.values["distance"] = cond.distance;
  p.values["threshold"] = cond.threshold;
  return p;
}

}  // namespace psg::oracles
