#include "v2xsec/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

namespace v2xsec {

namespace {

constexpr const char* kSweepHeader = "axis_name,axis_value,technique,sop,std_err,realizations,seed,series_name,series_value";

}  // namespace

std::string format_double(double x)
{
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return {buf, ptr};
}

void write_sweep_csv(std::ostream& os, const std::vector<SeriesResult>& results)
{
    os << kSweepHeader << '\n';
    for (const auto& series : results) {
        auto rows = series.result.rows;
        std::stable_sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
            if (a.technique != b.technique) {
                return a.technique < b.technique;
            }
            return a.axis_value < b.axis_value;
        });
        const std::string series_name = series.series_axis ? std::string(to_string(*series.series_axis)) : "";
        const std::string series_value = series.series_value ? format_double(*series.series_value) : "";
        for (const auto& row : rows) {
            os << to_string(series.result.axis) << ',' << format_double(row.axis_value) << ','
               << to_string(row.technique) << ',' << format_double(row.estimate.sop) << ','
               << format_double(row.estimate.std_err) << ',' << row.estimate.realizations << ','
               << row.estimate.seed << ',' << series_name << ',' << series_value << '\n';
        }
    }
}

void write_sop_csv(std::ostream& os, const ScenarioConfig& config, const SopEstimate& estimate)
{
    os << kSweepHeader << '\n';
    os << "phi," << format_double(config.phi) << ',' << to_string(config.technique) << ','
       << format_double(estimate.sop) << ',' << format_double(estimate.std_err) << ',' << estimate.realizations
       << ',' << estimate.seed << ",,\n";
}

void write_realization_csv(std::ostream& os, const NetworkRealization& network)
{
    os << "kind,x_m,y_m,p_m,theta_rad,len_m\n";
    os << "alice," << format_double(network.alice.x) << ',' << format_double(network.alice.y) << ",,,\n";
    for (const auto& s : network.streets) {
        const auto mid = s.midpoint();
        os << "street," << format_double(mid.x) << ',' << format_double(mid.y) << ','
           << format_double(s.midpoint_radius) << ',' << format_double(s.angle) << ',' << format_double(s.length)
           << '\n';
    }
    auto nodes = [&os](const char* kind, const std::vector<Point2D>& points) {
        for (const auto& p : points) {
            os << kind << ',' << format_double(p.x) << ',' << format_double(p.y) << ",,,\n";
        }
    };
    nodes("planar_eve", network.planar_eves);
    nodes("planar_charlie", network.planar_charlies);
    nodes("veh_eve", network.vehicular_eves);
    nodes("veh_charlie", network.vehicular_charlies);
}

nlohmann::json make_manifest(const std::string& command, const ScenarioConfig& config, const SweepPlan* plan)
{
    nlohmann::json doc{
        {"tool", kToolName},
        {"tool_version", kToolVersion},
        {"command", command},
        {"config", to_json(config)},
    };
    if (plan != nullptr) {
        doc["sweep"] = to_json(*plan);
    }
    return doc;
}

}  // namespace v2xsec
