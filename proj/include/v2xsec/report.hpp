#pragma once

#include "v2xsec/config.hpp"
#include "v2xsec/engine.hpp"
#include "v2xsec/geometry.hpp"
#include "v2xsec/presets.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace v2xsec {

inline constexpr const char* kToolName = "v2xsec";
inline constexpr const char* kToolVersion = "1.0.0";

/// Shortest decimal form that parses back to the same double.
std::string format_double(double x);

/// Header plus one row per (series, technique, axis value), sorted in that order.
void write_sweep_csv(std::ostream& os, const std::vector<SeriesResult>& results);

/// Single-point estimate in the sweep schema, axis `phi`.
void write_sop_csv(std::ostream& os, const ScenarioConfig& config, const SopEstimate& estimate);

/// One row per node: kind, x_m, y_m, and for streets p_m, theta_rad, len_m
/// (x_m, y_m is then the chord midpoint).
void write_realization_csv(std::ostream& os, const NetworkRealization& network);

/// Everything needed to re-run a command bit-exactly.
nlohmann::json make_manifest(const std::string& command, const ScenarioConfig& config,
                             const SweepPlan* plan = nullptr);

}  // namespace v2xsec
