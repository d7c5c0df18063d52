#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "psg/engine.hpp"
#include "psg/error.hpp"
#include "psg/geometry.hpp"
#include "psg/kernels.hpp"
#include "psg/mapgen.hpp"
#include "psg/numeric.hpp"
#include "psg/serialize.hpp"
#include "psg/verify.hpp"

namespace psg::cli {
namespace {

using nlohmann::json;

struct Args {
  bool json = false;
  std::string isa;

  std::string rules;
  std::string set;
  Heap n = 0;
  std::optional<Heap> cap;

  std::string alpha = "1";
  std::int64_t shift = 0;
  std::int64_t x = 0, y = 0;
  std::int64_t a = 0, b = 0, c = 0, d = 0;

  std::string c_range, d_range;
  std::string format = "csv";
  std::string out_path;
  unsigned threads = 0;

  std::string suite = "all";
  std::uint64_t seed = 7;
};

geometry::Rational parse_alpha(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const auto v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return geometry::Rational::integer(v);
    }
    const auto num = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument(text);
    const auto den_text = text.substr(slash + 1);
    const auto den = std::stoll(den_text, &used);
    if (used != den_text.size()) throw std::invalid_argument(text);
    return {num, den};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "bad alpha '" + text + "', expected N or P/Q");
  }
}

mapgen::Range parse_range(const std::string& text, mapgen::Range fallback) {
  if (text.empty()) return fallback;
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const auto lo = std::stoll(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    const auto hi_text = text.substr(colon + 1);
    const auto hi = std::stoll(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "bad range '" + text + "', expected LO:HI");
  }
}

std::string form_text(const EventualForm& f) {
  return "preperiod=" + to_string(f.preperiod) + " period=" + to_string(f.period);
}

void print(std::ostream& out, const Args& args, const json& j, const std::string& text) {
  if (args.json) {
    out << to_line(j);
  } else {
    out << text << '\n';
  }
}

int cmd_outcome(const Args& args, std::ostream& out) {
  const Ruleset rules = Ruleset::parse(args.rules);
  const Outcome o = outcome(rules, args.n);
  const std::string label(1, to_char(o.label()));
  print(out, args,
        {{"rules", rules.to_string()}, {"n", args.n}, {"outcome", label},
         {"left_first", o.left_first == Player::Left ? "L" : "R"},
         {"right_first", o.right_first == Player::Left ? "L" : "R"}},
        label);
  return kExitOk;
}

int cmd_sequence(const Args& args, std::ostream& out) {
  const Ruleset rules = Ruleset::parse(args.rules);
  const std::string seq = outcome_sequence(rules, args.n).to_string();
  print(out, args, {{"rules", rules.to_string()}, {"n_max", args.n}, {"sequence", seq}},
        seq);
  return kExitOk;
}

int cmd_form(const Args& args, std::ostream& out, bool with_class) {
  const Ruleset rules = Ruleset::parse(args.rules);
  const EventualForm f = detect_eventual_form(rules, args.cap);
  json j = form_to_json(f);
  j["rules"] = rules.to_string();
  const std::string text =
      with_class ? std::string(to_string(f.sequence_class())) + " " + form_text(f)
                 : form_text(f);
  print(out, args, j, text);
  return kExitOk;
}

int cmd_frobenius(const Args& args, std::ostream& out) {
  const CoinSet coins = CoinSet::make(parse_move_list(args.set));
  const auto f = frobenius(coins);
  print(out, args, {{"set", format_move_list(coins.values())}, {"frobenius", f}},
        std::to_string(f));
  return kExitOk;
}

int cmd_reduce(const Args& args, std::ostream& out) {
  const CoinSet coins = CoinSet::make(parse_move_list(args.set));
  const auto game = knapsack_to_game(coins, args.n);
  const bool rep = representable(coins, args.n);
  print(out, args,
        {{"rules", game.rules.to_string()}, {"heap", game.heap}, {"representable", rep}},
        game.rules.to_string() + " " + std::to_string(game.heap) +
            (rep ? " representable" : " not-representable"));
  return kExitOk;
}

int cmd_tset_lines(const Args& args, std::ostream& out) {
  const auto lines = geometry::t_lines(parse_alpha(args.alpha));
  json arr = json::array();
  std::string text;
  for (const auto& l : lines) {
    arr.push_back({l.u, l.v});
    if (!text.empty()) text += ' ';
    text += std::to_string(l.u) + ":" + std::to_string(l.v);
  }
  print(out, args, {{"alpha", args.alpha}, {"lines", arr}}, text);
  return kExitOk;
}

int cmd_tset_member(const Args& args, std::ostream& out) {
  const bool m = geometry::t_membership(args.x, args.y, {args.shift, parse_alpha(args.alpha)});
  print(out, args, {{"x", args.x}, {"y", args.y}, {"member", m}}, m ? "true" : "false");
  return kExitOk;
}

int cmd_tset_distance(const Args& args, std::ostream& out) {
  const auto dist = geometry::t_distance(args.x, args.y, {args.shift, parse_alpha(args.alpha)});
  print(out, args, {{"x", args.x}, {"y", args.y}, {"distance", dist}},
        std::to_string(dist));
  return kExitOk;
}

int cmd_tset_condition(const Args& args, std::ostream& out) {
  const auto c = geometry::two_vs_two_condition(args.a, args.b, args.c, args.d);
  print(out, args,
        {{"holds", c.holds}, {"A", c.big_a}, {"threshold", c.threshold},
         {"distance", c.distance}},
        std::string(c.holds ? "holds" : "fails") + " A=" + std::to_string(c.big_a) +
            " distance=" + std::to_string(c.distance) +
            " threshold=" + std::to_string(c.threshold));
  return kExitOk;
}

int cmd_map(const Args& args, std::ostream& out) {
  const auto fallback = mapgen::default_range(args.b);
  const auto cr = parse_range(args.c_range, fallback);
  const auto dr = parse_range(args.d_range, fallback);
  std::optional<mapgen::Format> format;
  if (args.format != "json") format = mapgen::parse_format(args.format);
  const auto map = mapgen::domination_map(args.a, args.b, cr, dr,
                                          args.cap.value_or(mapgen::kDefaultCellCap),
                                          args.threads);
  const std::string body = format ? mapgen::render_map(map, *format)
                                  : to_line(mapgen::summary_json(map));
  if (args.out_path.empty()) {
    out << body;
  } else {
    std::ofstream file(args.out_path, std::ios::binary);
    file << body;
    if (!file) {
      throw Error(ErrorCode::InvalidArgument, "cannot write '" + args.out_path + "'");
    }
    print(out, args, mapgen::summary_json(map), "wrote " + args.out_path);
  }
  return kExitOk;
}

int cmd_verify(const Args& args, std::ostream& out) {
  const auto results = verify::run(args.suite, {args.seed, args.threads});
  std::size_t passed = 0;
  for (const auto& r : results) {
    passed += r.passed;
    if (args.json) {
      out << to_line({{"criterion", r.criterion}, {"suite", r.name},
                      {"passed", r.passed}, {"checks", r.checks}, {"detail", r.detail}});
    } else {
      out << verify::format_result(r) << '\n';
    }
  }
  if (!args.json) {
    out << passed << "/" << results.size() << " suites passed\n";
  }
  return passed == results.size() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Args args;
  CLI::App app{"Partizan subtraction game solver", "psg"};
  app.require_subcommand(1);
  app.add_flag("--json", args.json, "Structured JSON output");
  app.add_option("--isa", args.isa, "Kernel variant: scalar, word, avx2 or neon");

  auto* outcome_cmd = app.add_subcommand("outcome", "Outcome of one heap");
  outcome_cmd->add_option("rules", args.rules, "Ruleset S_L/S_R, e.g. 1,2/1,3")->required();
  outcome_cmd->add_option("n", args.n, "Heap size")->required()->check(CLI::NonNegativeNumber);

  auto* sequence_cmd = app.add_subcommand("sequence", "Outcomes of heaps 0..NMAX");
  sequence_cmd->add_option("rules", args.rules, "Ruleset S_L/S_R")->required();
  sequence_cmd->add_option("nmax", args.n, "Largest heap")->required()->check(CLI::NonNegativeNumber);

  auto* form_cmd = app.add_subcommand("form", "Minimal preperiod and period");
  form_cmd->add_option("rules", args.rules, "Ruleset S_L/S_R")->required();
  form_cmd->add_option("--cap", args.cap, "Largest heap examined");

  auto* classify_cmd = app.add_subcommand("classify", "Sequence class and form");
  classify_cmd->add_option("rules", args.rules, "Ruleset S_L/S_R")->required();
  classify_cmd->add_option("--cap", args.cap, "Largest heap examined");

  auto* frobenius_cmd = app.add_subcommand("frobenius", "Frobenius number of a coin set");
  frobenius_cmd->add_option("set", args.set, "Comma-separated coins")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Knapsack instance as a game");
  reduce_cmd->add_option("set", args.set, "Comma-separated coins")->required();
  reduce_cmd->add_option("n", args.n, "Target")->required()->check(CLI::NonNegativeNumber);

  auto* tset_cmd = app.add_subcommand("tset", "Exceptional point sets");
  tset_cmd->require_subcommand(1);
  auto* lines_cmd = tset_cmd->add_subcommand("lines", "Primitive lines for alpha");
  lines_cmd->add_option("alpha", args.alpha, "Threshold N or P/Q")->required();
  auto* member_cmd = tset_cmd->add_subcommand("member", "Membership of (x, y)");
  auto* distance_cmd = tset_cmd->add_subcommand("distance", "1-norm distance of (x, y)");
  for (auto* sub : {member_cmd, distance_cmd}) {
    sub->add_option("x", args.x)->required();
    sub->add_option("y", args.y)->required();
    sub->add_option("--alpha", args.alpha, "Threshold N or P/Q")->capture_default_str();
    sub->add_option("--shift", args.shift, "Shift added to both coordinates")
        ->capture_default_str();
  }
  auto* condition_cmd = tset_cmd->add_subcommand("condition", "Two-vs-two dominance condition");
  condition_cmd->add_option("a", args.a)->required();
  condition_cmd->add_option("b", args.b)->required();
  condition_cmd->add_option("c", args.c)->required();
  condition_cmd->add_option("d", args.d)->required();

  auto* map_cmd = app.add_subcommand("map", "Domination map for Left's pair (a, b)");
  map_cmd->add_option("a", args.a)->required();
  map_cmd->add_option("b", args.b)->required();
  map_cmd->add_option("--c-range", args.c_range, "LO:HI (default b+1:b+120)");
  map_cmd->add_option("--d-range", args.d_range, "LO:HI (default b+1:b+120)");
  map_cmd->add_option("--cap", args.cap, "Largest heap examined per cell");
  map_cmd->add_option("--format", args.format, "csv, ppm or json")->capture_default_str();
  map_cmd->add_option("--out", args.out_path, "Output file (default stdout)");
  map_cmd->add_option("--threads", args.threads, "Worker threads, 0 = all cores");

  auto* verify_cmd = app.add_subcommand("verify", "Run acceptance suites");
  verify_cmd->add_option("suite", args.suite, "Suite name or 'all'")->capture_default_str();
  verify_cmd->add_option("--seed", args.seed, "Seed for sampled sweeps")->capture_default_str();
  verify_cmd->add_option("--threads", args.threads, "Worker threads, 0 = all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (!args.isa.empty()) {
      const auto isa = kernels::isa_from_string(args.isa);
      if (!isa || !kernels::force(*isa)) {
        err << "error: kernel variant '" << args.isa << "' is not available\n";
        return kExitUsage;
      }
    }
    if (*outcome_cmd) return cmd_outcome(args, out);
    if (*sequence_cmd) return cmd_sequence(args, out);
    if (*form_cmd) return cmd_form(args, out, false);
    if (*classify_cmd) return cmd_form(args, out, true);
    if (*frobenius_cmd) return cmd_frobenius(args, out);
    if (*reduce_cmd) return cmd_reduce(args, out);
    if (*lines_cmd) return cmd_tset_lines(args, out);
    if (*member_cmd) return cmd_tset_member(args, out);
    if (*distance_cmd) return cmd_tset_distance(args, out);
    if (*condition_cmd) return cmd_tset_condition(args, out);
    if (*map_cmd) return cmd_map(args, out);
    if (*verify_cmd) return cmd_verify(args, out);
  } catch (const PeriodNotFound& e) {
    err << "error: " << e.what() << '\n';
    return kExitPeriodNotFound;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace psg::cli
