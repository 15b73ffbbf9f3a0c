#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace b4cat {

struct Check {
  std::string id;
  bool pass = false;
  std::string detail;
};

/// Ordered list of check records with a deterministic printed form; the
/// wall-clock duration is diagnostic only and never printed to stdout.
struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0.0;

  void add(std::string id, bool pass, std::string detail = {});
  void merge(const SuiteReport& other);
  bool passed() const;
  int failed_count() const;
};

/// One "CHECK <id> <PASS|FAIL> <detail>" line per check, then a SUITE line.
void print_report(const SuiteReport& r, std::ostream& out);

}  // namespace b4cat
