#pragma once

#include <string>
#include <vector>

#include "knspec/config.hpp"
#include "knspec/spectra.hpp"

namespace knspec {

// Deterministic JSON document: keys in fixed order, strata in enumeration
// order, every list sorted the same way on every run.
std::string report_json(const Config& cfg, const std::vector<StratumReport>& strata);

std::string report_text(const Config& cfg, const std::vector<StratumReport>& strata);

// Builds the group, validates the scalar constraints (throwing
// std::invalid_argument with the violation list on failure), runs the strata
// and renders cfg.format.
std::string run_report(const Config& cfg);

} // namespace knspec
