#include "v2xsec/presets.hpp"

#include "v2xsec/secrecy.hpp"

#include <cmath>
#include <stdexcept>

namespace v2xsec {

using nlohmann::json;

std::vector<double> linear_grid(double first, double last, std::size_t points)
{
    if (points == 0) {
        return {};
    }
    if (points == 1) {
        return {first};
    }
    std::vector<double> grid(points);
    const double span = last - first;
    const double steps = static_cast<double>(points - 1);
    for (std::size_t i = 0; i < points; ++i) {
        grid[i] = first + span * static_cast<double>(i) / steps;
    }
    grid.back() = last;
    return grid;
}

SweepPlan preset_plan(const std::string& name)
{
    SweepPlan plan;
    plan.name = name;
    if (name == "fig3") {
        plan.series_axis = SweepAxis::power_dbm;
        plan.series_values = {10.0, 20.0, 30.0};
        plan.sweep.axis = SweepAxis::phi;
        plan.sweep.values = linear_grid(0.0, 1.0, 21);
    } else if (name == "fig4") {
        plan.series_axis = SweepAxis::phi;
        plan.series_values = {0.4, 0.6, 0.8};
        plan.sweep.axis = SweepAxis::beta_db;
        plan.sweep.values = linear_grid(-10.0, 10.0, 11);
    } else if (name == "fig5") {
        plan.series_axis = SweepAxis::ratio;
        plan.series_values = {0.1, 0.5, 1.0, 5.0, 10.0};
        plan.sweep.axis = SweepAxis::phi;
        plan.sweep.values = linear_grid(0.0, 1.0, 21);
    } else {
        throw std::invalid_argument("unknown preset '" + name + "' (fig3|fig4|fig5)");
    }
    plan.sweep.techniques = {Technique::an, Technique::cj};
    return plan;
}

json preset_parameters(const std::string& name)
{
    json doc = fig3_parameters();
    if (name == "fig3") {
        return doc;
    }
    if (name == "fig4") {
        doc["pt_dbm"] = 20.0;
        doc["pc_dbm"] = 20.0;
        doc["phi"] = 0.6;
        doc["realizations"] = 50;
        return doc;
    }
    if (name == "fig5") {
        return doc;
    }
    throw std::invalid_argument("unknown preset '" + name + "' (fig3|fig4|fig5)");
}

std::uint64_t series_seed(std::uint64_t master, std::size_t index)
{
    return derive_seed(master, {0x5e21e5ULL, index});
}

std::vector<SeriesResult> run_plan(const ScenarioConfig& base, const SweepPlan& plan, unsigned threads)
{
    std::vector<SeriesResult> out;
    if (!plan.series_axis) {
        out.push_back({std::nullopt, std::nullopt, run_sweep(base, plan.sweep, threads)});
        return out;
    }
    for (std::size_t s = 0; s < plan.series_values.size(); ++s) {
        ScenarioConfig config = base;
        apply_axis(config, *plan.series_axis, plan.series_values[s]);
        config.seed = series_seed(base.seed, s);
        out.push_back({plan.series_axis, plan.series_values[s], run_sweep(config, plan.sweep, threads)});
    }
    return out;
}

json to_json(const SweepPlan& plan)
{
    json techniques = json::array();
    for (auto t : plan.sweep.techniques) {
        techniques.push_back(std::string(to_string(t)));
    }
    return json{
        {"name", plan.name},
        {"series_axis", plan.series_axis ? json(std::string(to_string(*plan.series_axis))) : json(nullptr)},
        {"series_values", plan.series_values},
        {"axis", std::string(to_string(plan.sweep.axis))},
        {"values", plan.sweep.values},
        {"techniques", techniques},
    };
}

SweepPlan plan_from_json(const json& doc)
{
    SweepPlan plan;
    plan.name = doc.at("name").get<std::string>();
    if (!doc.at("series_axis").is_null()) {
        plan.series_axis = parse_sweep_axis(doc.at("series_axis").get<std::string>());
    }
    plan.series_values = doc.at("series_values").get<std::vector<double>>();
    plan.sweep.axis = parse_sweep_axis(doc.at("axis").get<std::string>());
    plan.sweep.values = doc.at("values").get<std::vector<double>>();
    plan.sweep.techniques.clear();
    for (const auto& t : doc.at("techniques")) {
        plan.sweep.techniques.push_back(parse_technique(t.get<std::string>()));
    }
    return plan;
}

}  // namespace v2xsec

namespace v2xsec {

std::vector<OraclePoint> validate_an_oracle(const ScenarioConfig& base, const OracleGrid& grid,
                                            std::uint64_t realizations, unsigned threads)
{
    std::vector<OraclePoint> points;
    std::uint64_t index = 0;
    for (double phi : grid.phis) {
        for (double beta : grid.betas) {
            for (int n_a : grid.antennas) {
                ScenarioConfig c = base;
                c.technique = Technique::an;
                c.phi = phi;
                c.beta_db = linear_to_db(beta);
                c.n_a = n_a;

                OraclePoint pt;
                pt.phi = phi;
                pt.beta = beta;
                pt.n_a = n_a;
                pt.monte_carlo = estimate_sop(c, realizations, derive_seed(base.seed, {index++}), threads);
                pt.analytic = analytic_sop_an(n_a, phi, c.beta_linear(), c.mean_eve_count());
                pt.null_std_err =
                    std::sqrt(pt.analytic * (1.0 - pt.analytic) / static_cast<double>(pt.monte_carlo.realizations));
                pt.within_3_sigma = std::abs(pt.monte_carlo.sop - pt.analytic) <= 3.0 * pt.null_std_err;
                pt.analytic_plp = analytic_sop_an_plp(n_a, phi, c.beta_linear(), c);
                pt.plp_std_err = std::sqrt(pt.analytic_plp * (1.0 - pt.analytic_plp)
                                           / static_cast<double>(pt.monte_carlo.realizations));
                pt.within_3_sigma_plp = std::abs(pt.monte_carlo.sop - pt.analytic_plp) <= 3.0 * pt.plp_std_err;
                points.push_back(pt);
            }
        }
    }
    return points;
}

}  // namespace v2xsec
