#pragma once

// Acceptance suites. Each suite checks one acceptance criterion end to end
// against the engine; `psg verify` and the acceptance test binary both run
// them.

#include <cstdint>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "psg/outcome.hpp"
#include "psg/ruleset.hpp"

namespace psg::verify {

struct Options {
  std::uint64_t seed = 7;
  unsigned threads = 0;  // 0 = hardware concurrency
};

/// Collects every eventual form the suites compute and checks the rule that
/// a period containing P also contains N (for classes other than UI).
class FormLog {
 public:
  void record(const Ruleset& rules, const EventualForm& form);

  std::size_t games() const;
  std::size_t checked() const;  // games whose class is not UI
  std::size_t violations() const;
  std::string first_violation() const;

 private:
  mutable std::mutex mutex_;
  std::size_t games_ = 0;
  std::size_t checked_ = 0;
  std::size_t violations_ = 0;
  std::string first_violation_;
};

struct SuiteInfo {
  int criterion;
  std::string_view name;
  std::string_view title;
};

/// All suites in criterion order.
const std::vector<SuiteInfo>& suites();

struct SuiteResult {
  int criterion = 0;
  std::string name;
  bool passed = false;
  std::size_t checks = 0;
  std::string detail;
  double seconds = 0;  // wall time; not part of the printed report
};

/// Runs one suite. `log` receives the forms it computes; the
/// forbidden-period suite reads it (and fills it by running suites 1-12
/// itself when it is empty).
SuiteResult run_suite(std::string_view name, const Options& options,
                      FormLog& log);

/// "all" or a single suite name. Throws Error(InvalidArgument) for an unknown
/// name.
std::vector<SuiteResult> run(std::string_view which, const Options& options);

/// "PASS  1 example: ..." without timing, so reports are byte-stable.
std::string format_result(const SuiteResult& result);

}  // namespace psg::verify
