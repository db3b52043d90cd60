#pragma once

#include "v2xsec/config.hpp"
#include "v2xsec/geometry.hpp"
#include "v2xsec/random.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace v2xsec {

struct RealizationOutcome {
    double max_eve_sir{0.0};  // 0 without Eves; may be +inf
    double bob_sir{0.0};
    std::size_t eve_count{0};
    std::size_t charlie_count{0};
    bool outage{false};
};

struct SopEstimate {
    double sop{0.0};
    double std_err{0.0};
    std::uint64_t realizations{0};
    std::uint64_t seed{0};

    static SopEstimate from_counts(std::uint64_t outages, std::uint64_t n, std::uint64_t seed);
};

/// Evaluates one fading draw over a fixed network.
RealizationOutcome evaluate_fading(const ScenarioConfig& config, const NetworkRealization& network,
                                   Rng& rng);

/// One joint geometry + fading draw.
RealizationOutcome run_realization(const ScenarioConfig& config, Rng& rng);

/// Pooled outage fraction over `realizations` geometries, each with
/// config.fading_draws_per_geometry fading draws. Realization i uses
/// stream_for(seed, i), so the result does not depend on `threads`.
SopEstimate estimate_sop(const ScenarioConfig& config, std::uint64_t realizations, std::uint64_t seed,
                         unsigned threads = 1);

/// Closed-form SOP for artificial noise only with a Poisson(mean_eves) Eve
/// count: 1 - exp(-mean_eves (1 + beta tau)^-(N_A - 1)),
/// tau = (1 - phi) / (phi (N_A - 1)).
double analytic_sop_an(int n_a, double phi, double beta, double mean_eves);

/// Same event without the Poisson shortcut for the vehicular Eves: the street
/// count is Poisson(2 lambda_l r) and each street of length l hides
/// Poisson(u_E l) Eves, so
///   P(no leak) = exp(-lambda_E pi r^2 q) exp(-2 lambda_l r (1 - E[exp(-q u_E l)]))
/// with q the per-Eve exceedance probability. The chord expectation is
/// evaluated by quadrature.
double analytic_sop_an_plp(int n_a, double phi, double beta, const ScenarioConfig& geometry);

enum class SweepAxis { phi, beta_db, power_dbm, ratio };

std::string_view to_string(SweepAxis a) noexcept;
SweepAxis parse_sweep_axis(std::string_view s);

/// Writes one axis value into a config. `power_dbm` sets the jammer power
/// P_c; `ratio` scales both Charlie intensities relative to the Eve ones.
void apply_axis(ScenarioConfig& config, SweepAxis axis, double value);

struct SweepSpec {
    SweepAxis axis{SweepAxis::phi};
    std::vector<double> values;
    std::vector<Technique> techniques{Technique::an, Technique::cj};
};

struct SweepRow {
    double axis_value{0.0};
    Technique technique{Technique::an};
    SopEstimate estimate;
};

struct SweepResult {
    SweepAxis axis{SweepAxis::phi};
    std::vector<SweepRow> rows;  // technique-major, axis values increasing
};

/// Seed of the (axis index, technique) cell of a sweep.
std::uint64_t sweep_cell_seed(std::uint64_t master, std::size_t axis_index, Technique technique);

/// One SopEstimate per (axis value, technique), `config.realizations` each,
/// seeded by sweep_cell_seed(config.seed, ...). Throws std::invalid_argument
/// on an empty or non-increasing grid.
SweepResult run_sweep(const ScenarioConfig& config, const SweepSpec& spec, unsigned threads = 1);

}  // namespace v2xsec
