// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "stats.hpp"

#include "v2xsec/channel.hpp"
#include "v2xsec/cli.hpp"
#include "v2xsec/config.hpp"
#include "v2xsec/engine.hpp"
#include "v2xsec/geometry.hpp"
#include "v2xsec/presets.hpp"
#include "v2xsec/secrecy.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace v2xsec;

namespace {

constexpr std::uint64_t kRealizations = 10000;
constexpr double kInf = std::numeric_limits<double>::infinity();

unsigned worker_count()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

ScenarioConfig fig3_base()
{
    return validate_config(fig3_parameters());
}

struct Verdict {
    bool pass{true};
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail << " [violated: " << what << "]";
        }
    }
};

bool rel_eq(double a, double b, double tol)
{
    if (a == b) {
        return true;
    }
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

double combined(const SopEstimate& a, const SopEstimate& b)
{
    return std::sqrt(a.std_err * a.std_err + b.std_err * b.std_err);
}

SopEstimate estimate(ScenarioConfig c, std::uint64_t seed)
{
    return estimate_sop(c, kRealizations, seed, worker_count());
}

// 1 -------------------------------------------------------------------------
Verdict oracle_equivalence()
{
    Verdict v;
    auto base = fig3_base();
    base.seed = 1;  // same as `v2xsec validate-oracle` defaults
    const auto points = validate_an_oracle(base, OracleGrid{}, kRealizations, worker_count());
    std::size_t ok = 0;
    std::size_t ok_plp = 0;
    for (const auto& p : points) {
        ok += p.within_3_sigma ? 1 : 0;
        ok_plp += p.within_3_sigma_plp ? 1 : 0;
        if (!p.within_3_sigma) {
            v.detail << " miss(phi=" << p.phi << ",beta=" << p.beta << ",N_A=" << p.n_a << ": mc=" << p.monte_carlo.sop
                     << " closed=" << p.analytic << ")";
        }
    }
    v.detail << " " << ok << "/" << points.size() << " points within 3 sigma (" << ok_plp << "/" << points.size()
             << " against the street-process closed form)";
    v.require(points.size() == 27 && ok >= 25, "at least 25 of 27 points");
    return v;
}

// 2 -------------------------------------------------------------------------
Verdict channel_approximation()
{
    Verdict v;
    Rng exact_rng(2002), approx_rng(2003);
    std::vector<double> msg[2], an[2], cj[2];
    for (int i = 0; i < 100000; ++i) {
        const auto e = sample_eve_channel_gains(4, 4, 1, ChannelMode::exact, exact_rng);
        const auto a = sample_eve_channel_gains(4, 4, 1, ChannelMode::approx, approx_rng);
        msg[0].push_back(e.g_msg);
        an[0].push_back(e.g_an);
        cj[0].push_back(e.g_cj[0]);
        msg[1].push_back(a.g_msg);
        an[1].push_back(a.g_an);
        cj[1].push_back(a.g_cj[0]);
    }
    const double ks_msg = teststats::ks_two_sample(msg[0], msg[1]);
    const double ks_an = teststats::ks_two_sample(an[0], an[1]);
    const double ks_cj = teststats::ks_two_sample(cj[0], cj[1]);
    v.detail << " KS g_msg=" << ks_msg << " g_an=" << ks_an << " g_cj=" << ks_cj;
    v.require(ks_msg < 0.01, "g_msg KS < 0.01");
    v.require(ks_an < 0.01, "g_an KS < 0.01");
    v.require(ks_cj < 0.01, "g_cj KS < 0.01");
    return v;
}

// 3 -------------------------------------------------------------------------
Verdict geometry_statistics()
{
    Verdict v;
    const auto config = fig3_base();  // the fig3 preset densities
    const double r = config.radius_m;
    double streets = 0, length = 0, pe = 0, pc = 0, ve = 0, vc = 0;
    for (std::uint64_t i = 0; i < kRealizations; ++i) {
        auto rng = stream_for(3003, i);
        const auto net = generate_network(config, rng);
        streets += static_cast<double>(net.streets.size());
        for (const auto& s : net.streets) {
            length += s.length;
        }
        pe += static_cast<double>(net.planar_eves.size());
        pc += static_cast<double>(net.planar_charlies.size());
        ve += static_cast<double>(net.vehicular_eves.size());
        vc += static_cast<double>(net.vehicular_charlies.size());
    }
    const double n = static_cast<double>(kRealizations);
    const double expected_len = std::numbers::pi * config.lambda_l_per_m * r * r;
    const double expected_nodes = 1e-6 * std::numbers::pi * r * r;
    auto within = [&](const char* name, double mean, double target, double tol) {
        v.detail << " " << name << "=" << mean;
        v.require(std::abs(mean - target) <= tol * target, std::string(name) + " within tolerance");
    };
    within("streets", streets / n, 6.0, 0.03);
    within("street_length", length / n, expected_len, 0.03);
    within("planar_eves", pe / n, expected_nodes, 0.05);
    within("planar_charlies", pc / n, expected_nodes, 0.05);
    within("veh_eves", ve / n, expected_nodes, 0.05);
    within("veh_charlies", vc / n, expected_nodes, 0.05);
    return v;
}

// 4 -------------------------------------------------------------------------
Verdict trend_fig3()
{
    Verdict v;
    auto c = fig3_base();
    c.technique = Technique::an;
    c.pt_dbm = 10.0;

    std::vector<double> sop, weight;
    std::vector<SopEstimate> ests;
    for (int i = 0; i <= 10; ++i) {
        c.phi = i / 10.0;
        ests.push_back(estimate(c, derive_seed(4004, {static_cast<std::uint64_t>(i)})));
        sop.push_back(ests.back().sop);
    }
    // weights from a floored binomial variance so 0/1 estimates stay finite
    std::vector<double> sigma;
    for (const auto& e : ests) {
        const double s = std::max(e.std_err, 1.0 / static_cast<double>(e.realizations));
        sigma.push_back(s);
        weight.push_back(1.0 / (s * s));
    }
    const auto fit = teststats::isotonic_increasing(sop, weight);
    double worst = 0.0;
    for (std::size_t i = 0; i < sop.size(); ++i) {
        worst = std::max(worst, std::abs(sop[i] - fit[i]) / sigma[i]);
    }
    v.detail << " AN phi-grid SOP:";
    for (double s : sop) {
        v.detail << " " << s;
    }
    v.detail << "; max |raw - isotonic| = " << worst << " sigma;";
    v.require(worst <= 3.0, "AN SOP consistent with non-decreasing in phi");
    v.require(sop.back() > sop.front(), "AN SOP rises over the phi range");

    c.technique = Technique::cj;
    for (double phi : {0.4, 0.6, 0.8}) {
        c.phi = phi;
        c.pc_dbm = 10.0;
        const auto low = estimate(c, derive_seed(4005, {static_cast<std::uint64_t>(phi * 10)}));
        c.pc_dbm = 30.0;
        const auto high = estimate(c, derive_seed(4006, {static_cast<std::uint64_t>(phi * 10)}));
        v.detail << " CJ phi=" << phi << ": Pc10=" << low.sop << " Pc30=" << high.sop;
        v.require(low.sop - high.sop > 3.0 * combined(low, high), "CJ SOP at 30 dBm below 10 dBm by 3 sigma");
    }
    return v;
}

// 5 -------------------------------------------------------------------------
Verdict trend_fig4()
{
    Verdict v;
    auto c = fig3_base();
    c.phi = 0.6;
    c.pt_dbm = c.pc_dbm = 20.0;
    for (auto t : {Technique::an, Technique::cj}) {
        c.technique = t;
        std::vector<SopEstimate> ests;
        for (double beta_db : {-10.0, 0.0, 10.0}) {
            c.beta_db = beta_db;
            ests.push_back(estimate(c, derive_seed(5005, {static_cast<std::uint64_t>(t), ests.size()})));
        }
        v.detail << " " << to_string(t) << ":";
        for (const auto& e : ests) {
            v.detail << " " << e.sop;
        }
        for (std::size_t i = 1; i < ests.size(); ++i) {
            v.require(ests[i - 1].sop - ests[i].sop > 3.0 * combined(ests[i - 1], ests[i]),
                      std::string(to_string(t)) + " SOP strictly decreasing in beta by 3 sigma");
        }
    }
    return v;
}

// 6 -------------------------------------------------------------------------
Verdict trend_fig5()
{
    Verdict v;
    auto c = fig3_base();
    c.phi = 0.6;
    c.pt_dbm = c.pc_dbm = 10.0;
    std::vector<SopEstimate> cj, an;
    const std::vector<double> ratios{0.1, 1.0, 10.0};
    for (std::size_t i = 0; i < ratios.size(); ++i) {
        auto cell = c;
        apply_axis(cell, SweepAxis::ratio, ratios[i]);
        cell.technique = Technique::cj;
        cj.push_back(estimate(cell, derive_seed(6006, {i, 1})));
        cell.technique = Technique::an;
        an.push_back(estimate(cell, derive_seed(6006, {i, 0})));
        v.detail << " ratio=" << ratios[i] << ": cj=" << cj.back().sop << " an=" << an.back().sop;
        v.require(cj.back().sop <= an.back().sop, "CJ SOP <= AN SOP");
    }
    for (std::size_t i = 1; i < cj.size(); ++i) {
        v.require(cj[i].sop <= cj[i - 1].sop, "CJ SOP non-increasing in the ratio");
    }
    v.require(cj.front().sop - cj.back().sop > 3.0 * combined(cj.front(), cj.back()),
              "CJ SOP at ratio 0.1 above ratio 10 by 3 sigma");
    return v;
}

// 7 -------------------------------------------------------------------------
Verdict formula_examples()
{
    Verdict v;
    constexpr double tol = 1e-12;
    auto budget = [](double p_t, double phi, int n_a = 4, double p_c = 1.0, int n_c = 4) {
        return LinkBudget{p_t, p_c, phi, 3.0, n_a, n_c};
    };
    // Bob SIR
    v.require(rel_eq(sir_bob(budget(1, 1), 1.0, 1.0), 1.0, tol), "sir_bob identity");
    v.require(sir_bob(budget(1, 0), 3.0, 7.0) == 0.0, "sir_bob phi=0");
    v.require(rel_eq(sir_bob(budget(1, 0.5), 2.0, 10.0), 1e-3, tol), "sir_bob 1e-3");
    // Charlie interference
    const std::vector<double> one_g{1.0}, one_d{10.0}, two_g{1.0, 1.0}, two_d{10.0, 10.0};
    v.require(charlie_interference(budget(1, 0.5, 4, 1.0, 2), {}, {}) == 0.0, "I_c empty");
    v.require(rel_eq(charlie_interference(budget(1, 0.5, 4, 1.0, 2), one_g, one_d), 1e-3, tol), "I_c one Charlie");
    v.require(rel_eq(charlie_interference(budget(1, 0.5, 4, 1.0, 2), two_g, two_d), 2e-3, tol), "I_c duplicated");
    // Eve SIR
    const EveChannelDraw draw{1.0, 3.0, {}};
    v.require(sir_eve(budget(1, 0), draw, 10.0, {}) == 0.0, "sir_eve phi=0");
    for (double d : {1.0, 10.0, 1000.0}) {
        v.require(rel_eq(sir_eve(budget(1, 0.5), draw, d, {}), 1.0, tol), "sir_eve AN-only = 1");
    }
    v.require(sir_eve(budget(1, 1), draw, 10.0, {}) == kInf, "sir_eve phi=1 infinite");
    // secrecy capacity
    v.require(secrecy_capacity(2.5, 2.5) == 0.0, "C_S symmetry");
    v.require(rel_eq(secrecy_capacity(1.0, 0.0), 1.0, tol), "C_S (1, 0)");
    v.require(rel_eq(secrecy_capacity(3.0, 1.0), 1.0, tol), "C_S (3, 1)");
    v.detail << " all listed examples evaluated";
    return v;
}

// 8 -------------------------------------------------------------------------
Verdict determinism()
{
    Verdict v;
    const auto dir = std::filesystem::temp_directory_path() / "v2xsec_acceptance";
    std::filesystem::create_directories(dir);
    auto run = [&](const char* threads, const std::filesystem::path& out) {
        std::ostringstream so, se;
        return execute({"sweep", "--preset", "fig3", "--seed", "8008", "--threads", threads, "--out", out.string()}, so,
                       se);
    };
    const auto a = dir / "fig3_t1.csv";
    const auto b = dir / "fig3_t8.csv";
    v.require(run("1", a) == 0, "threads=1 run succeeded");
    v.require(run("8", b) == 0, "threads=8 run succeeded");
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const auto ta = slurp(a);
    const auto tb = slurp(b);
    std::size_t rows = 0;
    for (char ch : ta) {
        rows += ch == '\n' ? 1 : 0;
    }
    v.detail << " " << ta.size() << " bytes, " << (rows - 1) << " data rows";
    v.require(!ta.empty() && ta == tb, "bit-identical CSV");
    v.require(rows == 127, "126 data rows");
    return v;
}

// 9 -------------------------------------------------------------------------
Verdict invariant_suite()
{
    Verdict v;
    constexpr int kCases = 1000;
    constexpr double tol = 1e-12;
    Rng rng(9009);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> antennas(2, 16);
    auto log_uniform = [&](double lo, double hi) { return lo * std::pow(hi / lo, unit(rng)); };

    int checked = 0;
    for (int k = 0; k < kCases; ++k) {
        const int n_a = antennas(rng);
        const int n_c = antennas(rng);
        const double phi = std::clamp(unit(rng), 1e-6, 1.0 - 1e-6);
        const double alpha = 2.0 + log_uniform(1e-3, 4.0);
        const LinkBudget b{log_uniform(1e-3, 10.0), log_uniform(1e-3, 10.0), phi, alpha, n_a, n_c};
        const std::size_t charlies = 1 + static_cast<std::size_t>(unit(rng) * 6);
        auto draw = sample_eve_channel_gains(n_a, n_c, charlies, ChannelMode::approx, rng);
        std::vector<double> d_ck(charlies);
        for (auto& d : d_ck) {
            d = log_uniform(1.0, 3000.0);
        }
        const double d_ae = log_uniform(1.0, 3000.0);

        // AN-only distance invariance
        const double an_ref = sir_eve(b, draw, 1.0, {});
        for (double d : {10.0, 1000.0, d_ae}) {
            v.require(rel_eq(sir_eve(b, draw, d, {}), an_ref, tol), "AN-only distance invariance");
        }
        // power scaling
        const double scale = log_uniform(1e-3, 1e3);
        LinkBudget bt = b;
        bt.p_t *= scale;
        const double g_bob = sample_bob_channel_gain(n_a, ChannelMode::approx, rng).g_bob;
        v.require(rel_eq(sir_bob(bt, g_bob, d_ae), scale * sir_bob(b, g_bob, d_ae), tol), "Bob SIR scales with P_t");
        v.require(rel_eq(sir_eve(bt, draw, d_ae, {}), sir_eve(b, draw, d_ae, {}), tol), "AN Eve SIR ignores P_t");
        LinkBudget both = bt;
        both.p_c *= scale;
        v.require(rel_eq(sir_eve(both, draw, d_ae, d_ck), sir_eve(b, draw, d_ae, d_ck), tol),
                  "CJ Eve SIR ignores joint power scaling");
        // monotonicity
        LinkBudget more = b;
        more.phi = std::min(1.0, phi + unit(rng) * (1.0 - phi));
        v.require(sir_eve(more, draw, d_ae, d_ck) >= sir_eve(b, draw, d_ae, d_ck) * (1.0 - tol),
                  "Eve SIR non-decreasing in phi");
        auto louder = draw;
        louder.g_cj[0] *= 1.0 + unit(rng);
        v.require(sir_eve(b, louder, d_ae, d_ck) <= sir_eve(b, draw, d_ae, d_ck) * (1.0 + tol),
                  "Eve SIR non-increasing in a Charlie gain");
        auto extra = draw;
        extra.g_cj.push_back(unit(rng) * 5.0);
        auto extra_d = d_ck;
        extra_d.push_back(log_uniform(1.0, 3000.0));
        v.require(sir_eve(b, extra, d_ae, extra_d) <= sir_eve(b, draw, d_ae, d_ck) * (1.0 + tol),
                  "Eve SIR non-increasing in added Charlies");
        // permutation invariance of the interference sum
        auto g_rev = draw.g_cj;
        auto d_rev = d_ck;
        std::reverse(g_rev.begin(), g_rev.end());
        std::reverse(d_rev.begin(), d_rev.end());
        v.require(rel_eq(charlie_interference(b, g_rev, d_rev), charlie_interference(b, draw.g_cj, d_ck), tol),
                  "interference permutation invariance");
        // capacity symmetry
        const double gamma = log_uniform(1e-6, 1e6);
        v.require(secrecy_capacity(gamma, gamma) == 0.0, "C_S(g, g) = 0");
        // sentinels
        LinkBudget none = b;
        none.phi = 0.0;
        v.require(sir_eve(none, draw, d_ae, d_ck) == 0.0, "phi = 0 gives zero Eve SIR");
        LinkBudget full = b;
        full.phi = 1.0;
        v.require(sir_eve(full, draw, d_ae, {}) == kInf, "AN phi = 1 gives infinite Eve SIR");
        ++checked;
    }

    // realization-level sentinels, also 1e3 cases
    auto c = fig3_base();
    for (int k = 0; k < kCases; ++k) {
        const auto i = static_cast<std::uint64_t>(k);
        c.beta_db = -20.0 + 40.0 * unit(rng);
        c.technique = (k % 2 == 0) ? Technique::an : Technique::cj;

        auto empty = c;
        empty.lambda_e_per_m2 = 0.0;
        empty.u_e_per_m = 0.0;
        empty.phi = unit(rng);
        auto s1 = stream_for(9010, i);
        const auto o1 = run_realization(empty, s1);
        v.require(!o1.outage && o1.max_eve_sir == 0.0 && o1.eve_count == 0, "no Eves, no outage");

        auto zero = c;
        zero.phi = 0.0;
        auto s2 = stream_for(9011, i);
        const auto o2 = run_realization(zero, s2);
        v.require(!o2.outage && o2.max_eve_sir == 0.0, "phi = 0, no outage");

        auto full = c;
        full.phi = 1.0;
        full.technique = Technique::an;
        auto s3 = stream_for(9012, i);
        const auto o3 = run_realization(full, s3);
        v.require(o3.eve_count == 0 || (o3.outage && o3.max_eve_sir == kInf), "AN phi = 1 always leaks");
    }
    v.detail << " " << checked << " formula cases + " << kCases << " realization cases";
    return v;
}

}  // namespace

int main()
{
    struct Criterion {
        const char* name;
        std::function<Verdict()> run;
    };
    const std::vector<Criterion> criteria{
        {"oracle equivalence (AN Monte Carlo vs closed form)", oracle_equivalence},
        {"channel approximation validity (KS exact vs approx)", channel_approximation},
        {"geometry statistics (default densities)", geometry_statistics},
        {"trend: SOP vs phi and jammer power (fig3 preset)", trend_fig3},
        {"trend: SOP vs beta (fig4 preset)", trend_fig4},
        {"trend: SOP vs Charlie/Eve ratio (fig5 preset)", trend_fig5},
        {"formula examples", formula_examples},
        {"determinism across thread counts", determinism},
        {"invariant suite", invariant_suite},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        auto verdict = criteria[i].run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %zu. %s (%.1fs):%s\n", verdict.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                    verdict.detail.str().c_str());
        std::fflush(stdout);
        failures += verdict.pass ? 0 : 1;
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
