#include "v2xsec/engine.hpp"

#include "v2xsec/channel.hpp"
#include "v2xsec/secrecy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace v2xsec {

namespace {

LinkBudget budget_of(const ScenarioConfig& c)
{
    return {c.pt_watts(), c.pc_watts(), c.phi, c.alpha, c.n_a, c.n_c};
}

}  // namespace

SopEstimate SopEstimate::from_counts(std::uint64_t outages, std::uint64_t n, std::uint64_t seed)
{
    if (n == 0) {
        throw std::invalid_argument("SOP estimate needs at least one realization");
    }
    const double p = static_cast<double>(outages) / static_cast<double>(n);
    return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n)), n, seed};
}

RealizationOutcome evaluate_fading(const ScenarioConfig& config, const NetworkRealization& network, Rng& rng)
{
    const auto budget = budget_of(config);
    const bool jamming = config.technique == Technique::cj;
    const bool exact = config.channel_mode == ChannelMode::exact;
    const double beta = config.beta_linear();
    const double eps = config.exclusion_m;

    const auto eves = network.all_eves();
    const auto charlies = jamming ? network.all_charlies() : std::vector<Point2D>{};

    RealizationOutcome out;
    out.eve_count = eves.size();
    out.charlie_count = network.charlie_count();

    // Alice's channel is drawn once per fading draw and shared by Bob and every Eve.
    Beamformer alice;
    double g_bob = 0.0;
    std::vector<Beamformer> charlie_bf;
    if (exact) {
        alice = Beamformer::sample(config.n_a, rng);
        g_bob = squared_norm(alice.h);
        charlie_bf.reserve(charlies.size());
        for (std::size_t i = 0; i < charlies.size(); ++i) {
            charlie_bf.push_back(Beamformer::sample(config.n_c, rng));
        }
    } else {
        g_bob = sample_bob_channel_gain(config.n_a, ChannelMode::approx, rng).g_bob;
    }
    out.bob_sir = sir_bob(budget, g_bob, clamp_distance(config.bob_distance_m, eps));

    std::vector<double> d_ck(charlies.size());
    double max_sir = 0.0;
    for (const auto& eve : eves) {
        const auto draw = exact ? sample_eve_gains_given(alice, charlie_bf, rng)
                                : sample_eve_channel_gains(config.n_a, config.n_c, charlies.size(),
                                                           ChannelMode::approx, rng);
        for (std::size_t c = 0; c < charlies.size(); ++c) {
            d_ck[c] = clamp_distance(distance(charlies[c], eve), eps);
        }
        const double sir = sir_eve(budget, draw, clamp_distance(norm(eve), eps), d_ck);
        max_sir = std::max(max_sir, sir);
    }
    out.max_eve_sir = max_sir;
    out.outage = !eves.empty() && max_sir >= beta;
    return out;
}

RealizationOutcome run_realization(const ScenarioConfig& config, Rng& rng)
{
    const auto network = generate_network(config, rng);
    return evaluate_fading(config, network, rng);
}

SopEstimate estimate_sop(const ScenarioConfig& config, std::uint64_t realizations, std::uint64_t seed,
                         unsigned threads)
{
    if (realizations < 1) {
        throw std::invalid_argument("realizations must be at least 1");
    }
    check_config(config);
    const std::uint64_t draws = config.fading_draws_per_geometry;

    auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t outages = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            auto rng = stream_for(seed, i);
            const auto network = generate_network(config, rng);
            for (std::uint64_t f = 0; f < draws; ++f) {
                outages += evaluate_fading(config, network, rng).outage ? 1 : 0;
            }
        }
        return outages;
    };

    const unsigned workers =
        static_cast<unsigned>(std::clamp<std::uint64_t>(threads == 0 ? 1 : threads, 1, realizations));
    std::uint64_t outages = 0;
    if (workers == 1) {
        outages = count_range(0, realizations);
    } else {
        constexpr std::uint64_t kChunk = 64;
        std::atomic<std::uint64_t> next{0};
        std::atomic<std::uint64_t> total{0};
        {
            std::vector<std::jthread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&] {
                    std::uint64_t local = 0;
                    for (;;) {
                        const auto begin = next.fetch_add(kChunk);
                        if (begin >= realizations) {
                            break;
                        }
                        local += count_range(begin, std::min(begin + kChunk, realizations));
                    }
                    total += local;
                });
            }
        }
        outages = total.load();
    }
    return SopEstimate::from_counts(outages, realizations * draws, seed);
}

namespace {

void check_an_closed_form(int n_a, double phi, double beta)
{
    if (n_a < 2) {
        throw std::domain_error("artificial noise needs at least 2 antennas");
    }
    if (!(phi > 0.0 && phi < 1.0)) {
        throw std::domain_error("closed form requires 0 < phi < 1");
    }
    if (!(beta > 0.0)) {
        throw std::domain_error("threshold must be positive");
    }
}

double per_eve_exceedance(int n_a, double phi, double beta)
{
    const double dof = static_cast<double>(n_a - 1);
    const double tau = (1.0 - phi) / (phi * dof);
    return std::pow(1.0 + beta * tau, -dof);
}

}  // namespace

double analytic_sop_an(int n_a, double phi, double beta, double mean_eves)
{
    check_an_closed_form(n_a, phi, beta);
    if (!(mean_eves >= 0.0)) {
        throw std::domain_error("mean Eve count must be non-negative");
    }
    return -std::expm1(-mean_eves * per_eve_exceedance(n_a, phi, beta));
}

double analytic_sop_an_plp(int n_a, double phi, double beta, const ScenarioConfig& g)
{
    check_an_closed_form(n_a, phi, beta);
    const double q = per_eve_exceedance(n_a, phi, beta);
    const double r = g.radius_m;

    // E[exp(-q u l)] over P ~ U[0, r), l = 2 sqrt(r^2 - P^2); with P = r sin t
    // this is the integral of exp(-2 q u r cos t) cos t over [0, pi/2].
    constexpr int kIntervals = 4096;  // even, composite Simpson
    const double h = (std::numbers::pi / 2.0) / kIntervals;
    const double k = 2.0 * q * g.u_e_per_m * r;
    auto f = [k](double t) { return std::exp(-k * std::cos(t)) * std::cos(t); };
    double acc = f(0.0) + f(std::numbers::pi / 2.0);
    for (int i = 1; i < kIntervals; ++i) {
        acc += (i % 2 == 1 ? 4.0 : 2.0) * f(i * h);
    }
    const double street_survival = acc * h / 3.0;

    const double log_no_leak = -g.lambda_e_per_m2 * std::numbers::pi * r * r * q
                               - 2.0 * g.lambda_l_per_m * r * (1.0 - street_survival);
    return -std::expm1(log_no_leak);
}

std::string_view to_string(SweepAxis a) noexcept
{
    switch (a) {
    case SweepAxis::phi:
        return "phi";
    case SweepAxis::beta_db:
        return "beta_db";
    case SweepAxis::power_dbm:
        return "power_dbm";
    case SweepAxis::ratio:
        return "ratio";
    }
    return "phi";
}

SweepAxis parse_sweep_axis(std::string_view s)
{
    for (auto a : {SweepAxis::phi, SweepAxis::beta_db, SweepAxis::power_dbm, SweepAxis::ratio}) {
        if (s == to_string(a)) {
            return a;
        }
    }
    throw std::invalid_argument("unknown sweep axis '" + std::string(s) + "' (phi|beta_db|power_dbm|ratio)");
}

void apply_axis(ScenarioConfig& config, SweepAxis axis, double value)
{
    switch (axis) {
    case SweepAxis::phi:
        config.phi = value;
        break;
    case SweepAxis::beta_db:
        config.beta_db = value;
        break;
    case SweepAxis::power_dbm:
        config.pc_dbm = value;
        break;
    case SweepAxis::ratio:
        config.lambda_c_per_m2 = value * config.lambda_e_per_m2;
        config.u_c_per_m = value * config.u_e_per_m;
        break;
    }
}

std::uint64_t sweep_cell_seed(std::uint64_t master, std::size_t axis_index, Technique technique)
{
    return derive_seed(master, {axis_index, technique == Technique::an ? 0u : 1u});
}

SweepResult run_sweep(const ScenarioConfig& config, const SweepSpec& spec, unsigned threads)
{
    if (spec.values.empty()) {
        throw std::invalid_argument("sweep grid is empty");
    }
    for (std::size_t i = 1; i < spec.values.size(); ++i) {
        if (!(spec.values[i] > spec.values[i - 1])) {
            throw std::invalid_argument("sweep grid must be strictly increasing");
        }
    }
    if (spec.techniques.empty()) {
        throw std::invalid_argument("sweep needs at least one technique");
    }

    SweepResult result;
    result.axis = spec.axis;
    for (auto technique : spec.techniques) {
        for (std::size_t i = 0; i < spec.values.size(); ++i) {
            ScenarioConfig cell = config;
            cell.technique = technique;
            apply_axis(cell, spec.axis, spec.values[i]);
            const auto seed = sweep_cell_seed(config.seed, i, technique);
            result.rows.push_back({spec.values[i], technique, estimate_sop(cell, cell.realizations, seed, threads)});
        }
    }
    return result;
}

}  // namespace v2xsec
