#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lpa::verify {

struct Options {
  std::vector<std::uint32_t> characteristics{0, 2, 3};
  std::uint64_t seed = 20240917;
  /// Multiplies every sample budget; 1.0 is the full acceptance run.
  double scale = 1.0;
};

struct Outcome {
  std::string name;
  bool pass = false;
  /// Reported as a FINDING line rather than PASS/FAIL.
  bool finding = false;
  std::string detail;

  std::string line() const;
};

/// Named checks in acceptance order.
struct Check {
  std::string name;
  std::function<Outcome(const Options&)> run;
};

std::vector<Check> checks();

/// Runs every check and writes one line per check (plus detail lines).
/// Returns true when no check failed.
bool run_all(const Options& opts, std::ostream& out);

}  // namespace lpa::verify
