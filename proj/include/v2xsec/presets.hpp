#pragma once

#include "v2xsec/config.hpp"
#include "v2xsec/engine.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace v2xsec {

/// A family of sweeps: the base config is swept along `sweep`, once per
/// series value (applied along `series_axis` before the sweep).
struct SweepPlan {
    std::string name;  // fig3 | fig4 | fig5 | custom
    std::optional<SweepAxis> series_axis;
    std::vector<double> series_values;
    SweepSpec sweep;
};

struct SeriesResult {
    std::optional<SweepAxis> series_axis;
    std::optional<double> series_value;
    SweepResult result;
};

/// Evenly spaced grid from `first` to `last` inclusive.
std::vector<double> linear_grid(double first, double last, std::size_t points);

/// Built-in sweep presets. fig3: phi in [0, 1] (21 points) per jammer power
/// {10, 20, 30} dBm; fig4: beta_db in [-10, 10] (11 points) per phi
/// {0.4, 0.6, 0.8}; fig5: phi in [0, 1] (21 points) per Charlie/Eve intensity
/// ratio {0.1, 0.5, 1, 5, 10}. Both techniques in each.
SweepPlan preset_plan(const std::string& name);

/// Raw config document of a preset (its figure parameter list).
nlohmann::json preset_parameters(const std::string& name);

/// Seed used for series `index` of a plan with master seed `master`.
std::uint64_t series_seed(std::uint64_t master, std::size_t index);

std::vector<SeriesResult> run_plan(const ScenarioConfig& base, const SweepPlan& plan, unsigned threads);

nlohmann::json to_json(const SweepPlan& plan);
SweepPlan plan_from_json(const nlohmann::json& doc);

}  // namespace v2xsec

namespace v2xsec {

/// One point of the artificial-noise closed-form comparison.
struct OraclePoint {
    double phi{0.0};
    double beta{0.0};  // linear
    int n_a{0};
    SopEstimate monte_carlo;
    double analytic{0.0};
    double null_std_err{0.0};  // sqrt(p (1 - p) / n) at the closed-form p
    bool within_3_sigma{false};
    double analytic_plp{0.0};  // analytic_sop_an_plp
    double plp_std_err{0.0};
    bool within_3_sigma_plp{false};
};

/// Default grid: phi {0.2, 0.5, 0.8} x beta {0.5, 1, 2} x N_A {2, 4, 8}.
struct OracleGrid {
    std::vector<double> phis{0.2, 0.5, 0.8};
    std::vector<double> betas{0.5, 1.0, 2.0};
    std::vector<int> antennas{2, 4, 8};
};

/// Monte Carlo AN SOP against analytic_sop_an and analytic_sop_an_plp at every grid point, with
/// `base` supplying densities and radius. Point i is seeded by
/// derive_seed(base.seed, {i}).
std::vector<OraclePoint> validate_an_oracle(const ScenarioConfig& base, const OracleGrid& grid,
                                            std::uint64_t realizations, unsigned threads);

}  // namespace v2xsec
