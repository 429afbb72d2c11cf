#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "knspec/param_group.hpp"

namespace knspec {

struct SuiteResult {
  std::string name;
  bool ok;
  std::string detail; // first failure, empty when ok
};

// commutation, tower, trace, normal, separation, assoc
std::vector<std::string> suite_names();

// Runs the named suites (or "all") at rank n; each suite logs one line per
// checked statement family. threads == 1 is the serial reference path.
std::vector<SuiteResult> run_verify(const std::shared_ptr<const ParamGroup>& params,
                                    int n, int degree_bound,
                                    const std::vector<std::string>& suites,
                                    int threads, std::ostream& log);

} // namespace knspec
