#include "b4cat/report.hpp"

namespace b4cat {

void SuiteReport::add(std::string id, bool pass, std::string detail) {
  checks.push_back(Check{std::move(id), pass, std::move(detail)});
}

void SuiteReport::merge(const SuiteReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  seconds += other.seconds;
}

bool SuiteReport::passed() const { return failed_count() == 0; }

int SuiteReport::failed_count() const {
  int n = 0;
  for (const Check& c : checks)
    if (!c.pass) ++n;
  return n;
}

void print_report(const SuiteReport& r, std::ostream& out) {
  for (const Check& c : r.checks) {
    out << "CHECK " << c.id << (c.pass ? " PASS" : " FAIL");
    if (!c.detail.empty()) out << ' ' << c.detail;
    out << '\n';
  }
  out << "SUITE " << r.suite << (r.passed() ? " PASS" : " FAIL")
      << " checks=" << r.checks.size() << " failed=" << r.failed_count()
      << '\n';
}

}  // namespace b4cat
