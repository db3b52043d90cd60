#include "v2xsec/cli.hpp"

#include "v2xsec/config.hpp"
#include "v2xsec/engine.hpp"
#include "v2xsec/presets.hpp"
#include "v2xsec/report.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

namespace v2xsec {

namespace {

using nlohmann::json;

constexpr const char* kEnvPrefix = "V2XSEC_";

const char* system_getenv(const char* name)
{
    return std::getenv(name);
}

/// Flags shared by every subcommand.
struct CommonOptions {
    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> realizations;
    unsigned threads{std::max(1u, std::thread::hardware_concurrency())};
    std::string technique;
    std::string mode;
};

void add_common(CLI::App* cmd, CommonOptions& o, bool out_required)
{
    cmd->add_option("--config", o.config_path, "JSON config or run manifest")->check(CLI::ExistingFile);
    auto* out = cmd->add_option("--out", o.out_path, "output CSV path");
    if (out_required) {
        out->required();
    }
    cmd->add_option("--seed", o.seed, "master seed");
    cmd->add_option("--realizations", o.realizations, "geometry realizations per estimate");
    cmd->add_option("--threads", o.threads, "worker threads (results do not depend on it)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--technique", o.technique, "an|cj")->check(CLI::IsMember({"an", "cj"}));
    cmd->add_option("--mode", o.mode, "exact|approx")->check(CLI::IsMember({"exact", "approx"}));
}

struct Resolved {
    ScenarioConfig config;
    std::optional<SweepPlan> recorded_plan;
};

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::runtime_error("'" + path + "' is not valid JSON: " + e.what());
    }
}

/// config file (or `fallback`) < environment < command-line flags.
Resolved resolve(const CommonOptions& o, const json& fallback)
{
    Resolved r;
    json doc = fallback;
    if (!o.config_path.empty()) {
        doc = read_json_file(o.config_path);
        if (doc.is_object() && doc.contains("config") && doc.contains("tool")) {
            if (doc.contains("sweep")) {
                r.recorded_plan = plan_from_json(doc.at("sweep"));
            }
            doc = json(doc.at("config"));
        }
    }
    doc = apply_env_overrides(std::move(doc), kEnvPrefix, &system_getenv);
    if (o.seed) {
        doc["seed"] = *o.seed;
    }
    if (o.realizations) {
        doc["realizations"] = *o.realizations;
    }
    if (!o.technique.empty()) {
        doc["technique"] = o.technique;
    }
    if (!o.mode.empty()) {
        doc["channel_mode"] = o.mode;
    }
    r.config = validate_config(doc);
    return r;
}

std::ofstream open_output(const std::string& path)
{
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) {
        throw std::runtime_error("cannot write output '" + path + "'");
    }
    return os;
}

void write_manifest(const std::string& out_path, const json& manifest)
{
    auto os = open_output(out_path + ".manifest.json");
    os << manifest.dump(2) << '\n';
}

int cmd_generate(const CommonOptions& o, std::ostream& out)
{
    const auto r = resolve(o, fig3_parameters());
    auto rng = stream_for(r.config.seed, 0);
    const auto network = generate_network(r.config, rng);
    {
        auto os = open_output(o.out_path);
        write_realization_csv(os, network);
    }
    write_manifest(o.out_path, make_manifest("generate", r.config));
    out << "wrote " << network.streets.size() << " streets, " << network.eve_count() << " Eves, "
        << network.charlie_count() << " Charlies to " << o.out_path << '\n';
    return 0;
}

int cmd_sop(const CommonOptions& o, std::ostream& out)
{
    const auto r = resolve(o, fig3_parameters());
    const auto est = estimate_sop(r.config, r.config.realizations, r.config.seed, o.threads);
    {
        auto os = open_output(o.out_path);
        write_sop_csv(os, r.config, est);
    }
    write_manifest(o.out_path, make_manifest("sop", r.config));
    out << "sop=" << format_double(est.sop) << " std_err=" << format_double(est.std_err)
        << " realizations=" << est.realizations << '\n';
    return 0;
}

struct SweepOptions {
    std::string preset;
    std::string axis;
    std::vector<double> values;
};

int cmd_sweep(const CommonOptions& o, const SweepOptions& s, std::ostream& out)
{
    const bool explicit_grid = !s.axis.empty();
    if (!s.preset.empty() && explicit_grid) {
        throw std::invalid_argument("--preset and --axis are mutually exclusive");
    }
    if (explicit_grid && s.values.empty()) {
        throw std::invalid_argument("--axis requires --values");
    }

    const json fallback = s.preset.empty() ? fig3_parameters() : preset_parameters(s.preset);
    auto r = resolve(o, fallback);

    SweepPlan plan;
    if (!s.preset.empty()) {
        plan = preset_plan(s.preset);
    } else if (explicit_grid) {
        plan.name = "custom";
        plan.sweep.axis = parse_sweep_axis(s.axis);
        plan.sweep.values = s.values;
        plan.sweep.techniques = {r.config.technique};
    } else if (r.recorded_plan) {
        plan = *r.recorded_plan;
    } else {
        throw std::invalid_argument("sweep needs --preset, --axis/--values, or a manifest with a recorded sweep");
    }
    if (!o.technique.empty()) {
        plan.sweep.techniques = {parse_technique(o.technique)};
    }

    const auto results = run_plan(r.config, plan, o.threads);
    std::size_t rows = 0;
    {
        auto os = open_output(o.out_path);
        write_sweep_csv(os, results);
    }
    for (const auto& series : results) {
        rows += series.result.rows.size();
    }
    write_manifest(o.out_path, make_manifest("sweep", r.config, &plan));
    out << "wrote " << rows << " rows to " << o.out_path << '\n';
    return 0;
}

int cmd_validate_oracle(const CommonOptions& o, std::ostream& out)
{
    json fallback = fig3_parameters();
    fallback["realizations"] = 10000;
    const auto r = resolve(o, fallback);

    const auto points = validate_an_oracle(r.config, OracleGrid{}, r.config.realizations, o.threads);
    std::ostringstream csv;
    csv << "phi,beta,n_a,mc_sop,mc_std_err,analytic_sop,null_std_err,pass,analytic_plp_sop,plp_std_err,pass_plp\n";
    std::size_t passed = 0;
    std::size_t passed_poisson = 0;
    for (const auto& p : points) {
        csv << format_double(p.phi) << ',' << format_double(p.beta) << ',' << p.n_a << ','
            << format_double(p.monte_carlo.sop) << ',' << format_double(p.monte_carlo.std_err) << ','
            << format_double(p.analytic) << ',' << format_double(p.null_std_err) << ','
            << (p.within_3_sigma ? "true" : "false") << ',' << format_double(p.analytic_plp) << ','
            << format_double(p.plp_std_err) << ',' << (p.within_3_sigma_plp ? "true" : "false") << '\n';
        passed += p.within_3_sigma_plp ? 1 : 0;
        passed_poisson += p.within_3_sigma ? 1 : 0;
    }
    if (!o.out_path.empty()) {
        {
            auto os = open_output(o.out_path);
            os << csv.str();
        }
        write_manifest(o.out_path, make_manifest("validate-oracle", r.config));
    } else {
        out << csv.str();
    }
    const bool ok = passed == points.size();
    out << passed_poisson << '/' << points.size() << " points within 3 standard errors of the Poisson-count closed form\n"
        << passed << '/' << points.size() << " points within 3 standard errors of the street-process closed form: "
        << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? 0 : 1;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Secrecy outage simulator for artificial noise and cooperative jamming in V2X networks",
                 kToolName};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    CommonOptions gen_opts, sop_opts, sweep_opts, oracle_opts;
    SweepOptions sweep_spec;

    auto* gen = app.add_subcommand("generate", "dump one network realization as CSV");
    add_common(gen, gen_opts, true);
    auto* sop = app.add_subcommand("sop", "single-point secrecy outage estimate");
    add_common(sop, sop_opts, true);
    auto* sweep = app.add_subcommand("sweep", "SOP along one axis (preset or explicit grid)");
    add_common(sweep, sweep_opts, true);
    sweep->add_option("--preset", sweep_spec.preset, "fig3|fig4|fig5")->check(CLI::IsMember({"fig3", "fig4", "fig5"}));
    sweep->add_option("--axis", sweep_spec.axis, "phi|beta_db|power_dbm|ratio")
        ->check(CLI::IsMember({"phi", "beta_db", "power_dbm", "ratio"}));
    sweep->add_option("--values", sweep_spec.values, "grid values, increasing")->delimiter(',');
    auto* oracle = app.add_subcommand("validate-oracle", "compare Monte Carlo AN SOP with the closed form");
    add_common(oracle, oracle_opts, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*gen) {
            return cmd_generate(gen_opts, out);
        }
        if (*sop) {
            return cmd_sop(sop_opts, out);
        }
        if (*sweep) {
            return cmd_sweep(sweep_opts, sweep_spec, out);
        }
        return cmd_validate_oracle(oracle_opts, out);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return 2;
}

}  // namespace v2xsec
