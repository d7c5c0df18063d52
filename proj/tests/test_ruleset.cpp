#include <doctest.h>

#include "psg/error.hpp"
#include "psg/outcome.hpp"
#include "psg/ruleset.hpp"

using namespace psg;

namespace {
ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}
}  // namespace

TEST_CASE("ruleset parse round-trips and sorts") {
  const Ruleset r = Ruleset::parse("3,1,2/6,1");
  CHECK(r.to_string() == "1,2,3/1,6");
  CHECK(Ruleset::parse(r.to_string()) == r);
  CHECK(r.max_move() == 6);
  CHECK(!r.impartial());
  CHECK(r.conjugate().to_string() == "1,6/1,2,3");
  CHECK(Ruleset::parse("2,5/2,5").impartial());
}

TEST_CASE("ruleset validation") {
  CHECK(code_of([] { Ruleset::make({}, {1}); }) == ErrorCode::EmptySet);
  CHECK(code_of([] { Ruleset::make({0, 1}, {1}); }) == ErrorCode::NonPositiveMove);
  CHECK(code_of([] { Ruleset::make({-2}, {1}); }) == ErrorCode::NonPositiveMove);
  CHECK(code_of([] { Ruleset::make({2, 2}, {1}); }) == ErrorCode::DuplicateMove);
  CHECK(code_of([] { Ruleset::parse("1,2"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { Ruleset::parse("1,x/2"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { Ruleset::parse("1,/2"); }) == ErrorCode::ParseError);
}

TEST_CASE("labels and outcomes") {
  for (Label l : {Label::P, Label::L, Label::R, Label::N}) {
    CHECK(Outcome::from_label(l).label() == l);
    CHECK(label_from_char(to_char(l)) == l);
    CHECK(mirror(mirror(l)) == l);
  }
  CHECK(Outcome::from_label(Label::P).left_first == Player::Right);
  CHECK(Outcome::from_label(Label::P).right_first == Player::Left);
  CHECK(Outcome::from_label(Label::N).left_first == Player::Left);
  CHECK(Outcome::from_label(Label::N).right_first == Player::Right);
  CHECK(to_string(parse_word("PNLR")) == "PNLR");
  CHECK(to_string(mirror(parse_word("PNLR"))) == "PNRL");
  CHECK_THROWS_AS(parse_word("PX"), Error);
}

TEST_CASE("classes from periods") {
  CHECK(classify_period(parse_word("L")) == SequenceClass::StrongLeft);
  CHECK(classify_period(parse_word("RR")) == SequenceClass::StrongRight);
  CHECK(classify_period(parse_word("PLN")) == SequenceClass::WeakLeft);
  CHECK(classify_period(parse_word("PRN")) == SequenceClass::WeakRight);
  CHECK(classify_period(parse_word("PRNL")) == SequenceClass::Fair);
  CHECK(classify_period(parse_word("PN")) == SequenceClass::UltimatelyImpartial);
  for (auto c : {SequenceClass::StrongLeft, SequenceClass::StrongRight, SequenceClass::WeakLeft,
                 SequenceClass::WeakRight, SequenceClass::Fair,
                 SequenceClass::UltimatelyImpartial}) {
    CHECK(sequence_class_from_string(to_string(c)) == c);
    CHECK(mirror(mirror(c)) == c);
  }
}

TEST_CASE("minimize finds the shortest form") {
  const EventualForm f = minimize({parse_word("PNLNPN"), parse_word("LLLL")});
  CHECK(to_string(f.preperiod) == "PNLNPN");
  CHECK(to_string(f.period) == "L");
  const EventualForm g = minimize({parse_word("PRN"), parse_word("PRNPRN")});
  CHECK(g.preperiod.empty());
  CHECK(to_string(g.period) == "PRN");
  const EventualForm h = minimize({parse_word("NLP"), parse_word("NLP")});
  CHECK(h.preperiod.empty());
  CHECK(to_string(h.period) == "NLP");
  for (Heap n = 0; n < 30; ++n) CHECK(h.at(n) == EventualForm{{}, parse_word("NLP")}.at(n));
}
