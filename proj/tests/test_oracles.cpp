#include <doctest.h>

#include "psg/engine.hpp"
#include "psg/error.hpp"
#include "psg/oracles.hpp"

using namespace psg;
using namespace psg::oracles;

TEST_CASE("one-vs-one") {
  const auto p = one_vs_one(2, 5);
  REQUIRE(p.applicable);
  CHECK(to_string(p.form->period) == "PPLLLNN");
  CHECK(verify(p, 200).ok);
  CHECK(!one_vs_one(5, 2).applicable);
}

TEST_CASE("two-vs-one cases") {
  // g = gcd(a + c, b + c).
  const auto sd = two_vs_one(1, 2, 1);  // g = 1 <= c
  CHECK(sd.sequence_class == SequenceClass::StrongLeft);
  const auto ui = two_vs_one(1, 3, 1);  // g = 2 = 2c
  CHECK(ui.sequence_class == SequenceClass::UltimatelyImpartial);
  CHECK(to_string(*ui.residue_period) == "PN");
  const auto wd = two_vs_one(2, 5, 1);  // g = 3 > 2c
  CHECK(to_string(*wd.residue_period) == "PRN");
  const auto mid = two_vs_one(1, 6, 2);  // g = 1
  CHECK(mid.values.at("g") == 1);
  const auto mixed = two_vs_one(2, 8, 4);  // g = gcd(6, 12) = 6, 4 < 6 < 8
  CHECK(to_string(*mixed.residue_period) == "PPLLNN");
  for (const auto* p : {&sd, &ui, &wd, &mid, &mixed}) CHECK(verify(*p, 0).ok);
}

TEST_CASE("far-regime full sequences") {
  const auto p = full_sequence_far(1, 2, 5);
  REQUIRE(p.applicable);
  CHECK(to_string(p.form->preperiod).rfind("PLLLLN", 0) == 0);
  CHECK(verify(p, 500).ok);
  const auto q = full_sequence_far(1, 2, 5, 9);
  REQUIRE(q.applicable);
  CHECK(verify(q, 500).ok);
  CHECK(full_sequence_far(2, 3, 9).failed == "b>=2a");
  CHECK(full_sequence_far(1, 3, 3).failed == "c>b");
  CHECK(full_sequence_far(1, 3, 5, 7).failed == "d>c+b");
}

TEST_CASE("ones-to-k") {
  const auto p = ones_to_k(3, {5, 6, 7});
  CHECK(to_string(p.form->period) == "PLLLLNNN");
  CHECK(verify(p, 0).ok);
  CHECK(ones_to_k(2, {1, 5}).sequence_class == SequenceClass::StrongLeft);
  CHECK_THROWS_AS(ones_to_k(2, {1, 2, 3}), Error);
}

TEST_CASE("stability") {
  const Ruleset base = Ruleset::parse("2,3/1");
  const auto p = stability_check(base, 7);
  REQUIRE(p.applicable);
  CHECK(p.values.at("p") == 5);
  CHECK(*p.preperiod_bound == 100);
  CHECK(verify(p, 0).ok);
  CHECK(stability_check(base, 6).failed == "d>p+max(S_R,x2-x1)");
  CHECK(stability_check(Ruleset::parse("2/1"), 9).failed == "|S_L|>=2");
}

TEST_CASE("constructions") {
  const Ruleset dom = construct_right_dominator({1, 2});
  CHECK(classify(dom) == SequenceClass::StrongRight);
  const auto fair = construct_right_fair({1, 3});
  const OutcomeSequence seq(fair.rules, 10 * fair.stride);
  for (Heap k = 1; k <= 10; ++k) CHECK(seq.label(k * fair.stride) == Label::R);
  const auto spoil = construct_left_spoiler({3});
  CHECK(spoil.stride == 4);
  CHECK(spoil.rules.to_string() == "3/1");
  CHECK(verify(left_spoiler({3}), 0).ok);
}

TEST_CASE("interval system identities") {
  const auto s = interval_system(2, 3, 50, 2000);
  CHECK(s.big_a == 3);
  CHECK(s.p_at(0, 0) == Interval{0, 2});
  CHECK(s.n_at(0, 1) == Interval{50, 52});
  CHECK(s.p_at(0, 1) == Interval{53, 54});
  const auto props = check_interval_properties(s);
  CHECK(props.all());
  const auto p = interval_prediction(2, 3, 50, 2000);
  REQUIRE(p.applicable);
  CHECK(verify(p, 5000).ok);
  CHECK(interval_prediction(2, 3, 50, 60).failed == "dist>=2A(a+2b)");
  CHECK(interval_prediction(3, 2, 50, 60).failed == "a<b<c<d");
}

TEST_CASE("property (ii) counterexample with c < a + b") {
  // I^P_00 = [0, 6) lies among the 12 heaps before I^N_01 = [16, 22), yet the
  // predicted labels are still exact.
  const auto s = interval_system(6, 12, 16, 586);
  const auto props = check_interval_properties(s);
  CHECK(!props.clear_before_n);
  CHECK(props.disjoint);
  CHECK(props.shift_c);
  CHECK(props.shift_d);
  CHECK(props.intersection);
  const auto p = interval_prediction(6, 12, 16, 586);
  REQUIRE(p.applicable);
  CHECK(verify(p, 3000).ok);
}
