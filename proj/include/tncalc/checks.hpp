/**
 * @file checks.hpp
 * @brief Cross-check suites over every invariant of the library, runnable
 *        from the CLI. Each suite reports its case count and any failures.
 */
#ifndef TNCALC_CHECKS_HPP
#define TNCALC_CHECKS_HPP

#include <optional>
#include <string>
#include <vector>

namespace tncalc {

struct CheckOptions {
  unsigned n_max = 20;
  long z_min = -30;
  long z_max = 30;
  /// b-file with reference derangement numbers; the embedded copy of the
  /// vendored A000166 prefix when unset.
  std::optional<std::string> fixture_path;
};

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

/// Runs every suite; never throws on mismatches (they become failures),
/// only on setup problems such as an unreadable fixture file.
std::vector<CheckResult> run_all_checks(const CheckOptions& options);

}  // namespace tncalc

#endif  // TNCALC_CHECKS_HPP
