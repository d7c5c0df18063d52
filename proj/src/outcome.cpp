#include "psg/outcome.hpp"

#include "psg/error.hpp"

namespace psg {

char to_char(Label label) {
  switch (label) {
    case Label::P: return 'P';
    case Label::N: return 'N';
    case Label::L: return 'L';
    case Label::R: return 'R';
  }
  return '?';
}

std::optional<Label> label_from_char(char c) {
  switch (c) {
    case 'P': return Label::P;
    case 'N': return Label::N;
    case 'L': return Label::L;
    case 'R': return Label::R;
    default: return std::nullopt;
  }
}

std::string to_string(std::span<const Label> word) {
  std::string out;
  out.reserve(word.size());
  for (Label l : word) out += to_char(l);
  return out;
}

Word parse_word(std::string_view text) {
  Word out;
  out.reserve(text.size());
  for (char c : text) {
    auto label = label_from_char(c);
    if (!label) {
      throw Error(ErrorCode::ParseError,
                  "bad outcome letter '" + std::string(1, c) + "'");
    }
    out.push_back(*label);
  }
  return out;
}

Word mirror(std::span<const Label> word) {
  Word out(word.begin(), word.end());
  for (Label& l : out) l = mirror(l);
  return out;
}

std::string_view to_string(SequenceClass cls) {
  switch (cls) {
    case SequenceClass::StrongLeft: return "SD-Left";
    case SequenceClass::StrongRight: return "SD-Right";
    case SequenceClass::WeakLeft: return "WD-Left";
    case SequenceClass::WeakRight: return "WD-Right";
    case SequenceClass::Fair: return "Fair";
    case SequenceClass::UltimatelyImpartial: return "UI";
  }
  return "?";
}

std::optional<SequenceClass> sequence_class_from_string(std::string_view name) {
  for (auto cls : {SequenceClass::StrongLeft, SequenceClass::StrongRight,
                   SequenceClass::WeakLeft, SequenceClass::WeakRight,
                   SequenceClass::Fair, SequenceClass::UltimatelyImpartial}) {
    if (to_string(cls) == name) return cls;
  }
  return std::nullopt;
}

SequenceClass mirror(SequenceClass cls) {
  switch (cls) {
    case SequenceClass::StrongLeft: return SequenceClass::StrongRight;
    case SequenceClass::StrongRight: return SequenceClass::StrongLeft;
    case SequenceClass::WeakLeft: return SequenceClass::WeakRight;
    case SequenceClass::WeakRight: return SequenceClass::WeakLeft;
    default: return cls;
  }
}

SequenceClass classify_counts(const LabelCounts& c) {
  const std::size_t total = c.p + c.n + c.l + c.r;
  if (c.l > 0 && c.r > 0) return SequenceClass::Fair;
  if (c.l == 0 && c.r == 0) return SequenceClass::UltimatelyImpartial;
  if (c.l > 0) {
    return c.l == total ? SequenceClass::StrongLeft : SequenceClass::WeakLeft;
  }
  return c.r == total ? SequenceClass::StrongRight : SequenceClass::WeakRight;
}

SequenceClass classify_period(std::span<const Label> period) {
  LabelCounts c;
  for (Label l : period) {
    switch (l) {
      case Label::P: ++c.p; break;
      case Label::N: ++c.n; break;
      case Label::L: ++c.l; break;
      case Label::R: ++c.r; break;
    }
  }
  return classify_counts(c);
}

Label EventualForm::at(Heap n) const {
  const auto pre = static_cast<Heap>(preperiod.size());
  if (n < pre) return preperiod[static_cast<std::size_t>(n)];
  return period[static_cast<std::size_t>((n - pre) %
                                         static_cast<Heap>(period.size()))];
}

EventualForm EventualForm::mirrored() const {
  return {mirror(preperiod), mirror(period)};
}

EventualForm minimize(EventualForm form) {
  if (form.period.empty()) {
    throw Error(ErrorCode::InvalidArgument, "period word is empty");
  }
  const std::size_t p = form.period.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool ok = true;
    for (std::size_t t = 0; t + d < p && ok; ++t) {
      ok = form.period[t] == form.period[t + d];
    }
    if (ok) {
      form.period.resize(d);
      break;
    }
  }
  // Shrink the preperiod while its last letter equals the last period letter;
  // each step rotates the period right by one.
  while (!form.preperiod.empty() &&
         form.preperiod.back() == form.period.back()) {
    form.preperiod.pop_back();
    Label last = form.period.back();
    form.period.pop_back();
    form.period.insert(form.period.begin(), last);
  }
  return form;
}

}  // namespace psg
