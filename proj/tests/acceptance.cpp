// Acceptance gate: one PASS/FAIL line per criterion.
#include <chrono>
#include <iostream>
#include <map>

#include "golden_runner.hpp"
#include "lpa/verify.hpp"

namespace {

const std::filesystem::path kRoot = LPA_SOURCE_DIR;

struct Criterion {
  int number;
  std::string check;  // verify check name, or empty for the golden transcript
  std::string title;
};

const std::vector<Criterion> kCriteria{
    {1, "algebra-laws", "involution and algebra laws"},
    {2, "generator-annihilation", "ideal generator kills nontrivial paths on both sides"},
    {3, "cohn-basis", "Cohn basis round trip and closure"},
    {4, "normal-form", "Leavitt normal form"},
    {5, "differential-oracles", "matrix-unit and Laurent differential oracles"},
    {6, "skew-decompositions", "skew decompositions"},
    {7, "commutator-vs-span", "commutator decider against brute-force span"},
    {8, "cycle-witnesses", "cycle witnesses on roses and the two-cycle"},
    {9, "line-witnesses", "line graphs over GF(2)"},
    {10, "acyclic-skew-membership", "acyclic skew elements are commutator sums"},
    {11, "simplicity", "simplicity verdicts"},
    {12, "ideal-skew-audit", "ideal-skew audit facts"},
    {13, "", "CLI golden transcript"},
};

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  auto start = clock::now();
  lpa::verify::Options opts;
  std::map<std::string, lpa::verify::Check> by_name;
  for (auto& c : lpa::verify::checks()) by_name.emplace(c.name, c);

  int failed = 0;
  for (const auto& c : kCriteria) {
    bool pass = false;
    std::string detail;
    if (c.check.empty()) {
      std::string got = golden::transcript(kRoot, kRoot / "tests/golden/commands.txt");
      std::string want = golden::read_file(kRoot / "tests/golden/expected.txt");
      pass = !want.empty() && got == want;
      detail = pass ? "byte-identical" : "transcript differs from tests/golden/expected.txt";
    } else {
      auto outcome = by_name.at(c.check).run(opts);
      pass = outcome.pass;
      detail = outcome.line();
    }
    if (!pass) ++failed;
    std::cout << "criterion " << c.number << " [" << (pass ? "PASS" : "FAIL") << "] " << c.title << " -- " << detail
              << '\n';
  }
  // reported, not gated
  auto shape = by_name.at("skew-commutator-shape").run(opts);
  std::cout << "note " << shape.line() << '\n';

  double secs = std::chrono::duration<double>(clock::now() - start).count();
  std::cout << "acceptance: " << (kCriteria.size() - failed) << "/" << kCriteria.size() << " criteria passed in "
            << static_cast<int>(secs) << "s\n";
  return failed == 0 ? 0 : 1;
}
