#pragma once

#include <string>
#include <vector>

#include "b4cat/report.hpp"

/// Named verification suites backing the CLI `verify` command.

namespace b4cat {

struct VerifyOptions {
  int radius = 2;
  int samples = 500;
  unsigned seed = 0;
};

extern const std::vector<std::string> kSuiteNames;  // presentation..oracle

bool is_suite_name(const std::string& name);

/// Runs one suite; name must be a member of kSuiteNames.
SuiteReport run_suite(const std::string& name, const VerifyOptions& opts);

/// Runs the named suite, or all suites in their fixed order for "all".
std::vector<SuiteReport> run_suites(const std::string& name,
                                    const VerifyOptions& opts);

}  // namespace b4cat
