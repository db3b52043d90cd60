#include "v2xsec/geometry.hpp"

#include "v2xsec/config.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace v2xsec {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_rate(double rate, const char* what)
{
    if (!(rate >= 0.0) || !std::isfinite(rate)) {
        throw std::domain_error(std::string(what) + " must be finite and non-negative");
    }
}

void require_radius(double r)
{
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw std::domain_error("disk radius must be positive");
    }
}

std::uint64_t poisson_count(double mean, Rng& rng)
{
    if (mean <= 0.0) {
        return 0;
    }
    std::poisson_distribution<std::uint64_t> dist(mean);
    return dist(rng);
}

}  // namespace

double distance(const Point2D& a, const Point2D& b) noexcept
{
    return std::hypot(a.x - b.x, a.y - b.y);
}

double norm(const Point2D& p) noexcept
{
    return std::hypot(p.x, p.y);
}

Point2D Chord::midpoint() const noexcept
{
    return {midpoint_radius * std::cos(angle), midpoint_radius * std::sin(angle)};
}

Point2D Chord::at(double t) const noexcept
{
    return {endpoint_a.x + t * (endpoint_b.x - endpoint_a.x), endpoint_a.y + t * (endpoint_b.y - endpoint_a.y)};
}

std::vector<Point2D> NetworkRealization::all_eves() const
{
    std::vector<Point2D> out(planar_eves);
    out.insert(out.end(), vehicular_eves.begin(), vehicular_eves.end());
    return out;
}

std::vector<Point2D> NetworkRealization::all_charlies() const
{
    std::vector<Point2D> out(planar_charlies);
    out.insert(out.end(), vehicular_charlies.begin(), vehicular_charlies.end());
    return out;
}

Chord chord_endpoints(double p, double theta, double r)
{
    require_radius(r);
    if (!(p >= 0.0) || !(p < r)) {
        throw std::domain_error("chord midpoint radius must lie in [0, r)");
    }
    if (!(theta >= 0.0) || !(theta < kTwoPi)) {
        throw std::domain_error("chord angle must lie in [0, 2pi)");
    }
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double half = std::sqrt((r - p) * (r + p));
    const Point2D mid{p * c, p * s};

    Chord chord;
    chord.midpoint_radius = p;
    chord.angle = theta;
    chord.endpoint_a = {mid.x - half * s, mid.y + half * c};
    chord.endpoint_b = {mid.x + half * s, mid.y - half * c};
    chord.length = 2.0 * half;
    return chord;
}

std::vector<Point2D> sample_planar_ppp(double intensity, double r, Rng& rng)
{
    require_rate(intensity, "planar intensity");
    require_radius(r);

    const auto count = poisson_count(intensity * std::numbers::pi * r * r, rng);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Point2D> points;
    points.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        // radius first, then angle: two draws per node regardless of position
        const double rho = r * std::sqrt(unit(rng));
        const double phi = kTwoPi * unit(rng);
        points.push_back({rho * std::cos(phi), rho * std::sin(phi)});
    }
    return points;
}

std::vector<Chord> sample_plp_streets(double lambda_l, double r, Rng& rng)
{
    require_rate(lambda_l, "line intensity");
    require_radius(r);

    // line density lambda_l / pi times perimeter 2 pi r
    const auto count = poisson_count(2.0 * lambda_l * r, rng);
    std::uniform_real_distribution<double> radius(0.0, r);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::vector<Chord> streets;
    streets.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        const double p = radius(rng);
        const double theta = angle(rng);
        // uniform_real_distribution may return its upper bound on rounding
        streets.push_back(chord_endpoints(p < r ? p : 0.0, theta < kTwoPi ? theta : 0.0, r));
    }
    return streets;
}

std::vector<Point2D> sample_vehicular_cox(const std::vector<Chord>& streets, double u, Rng& rng)
{
    require_rate(u, "vehicular intensity");

    std::vector<Point2D> vehicles;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (const auto& street : streets) {
        const auto count = poisson_count(u * street.length, rng);
        for (std::uint64_t i = 0; i < count; ++i) {
            vehicles.push_back(street.at(unit(rng)));
        }
    }
    return vehicles;
}

NetworkRealization generate_network(const ScenarioConfig& config, Rng& rng)
{
    NetworkRealization net;
    net.radius = config.radius_m;
    net.streets = sample_plp_streets(config.lambda_l_per_m, config.radius_m, rng);
    net.vehicular_eves = sample_vehicular_cox(net.streets, config.u_e_per_m, rng);
    net.vehicular_charlies = sample_vehicular_cox(net.streets, config.u_c_per_m, rng);
    net.planar_eves = sample_planar_ppp(config.lambda_e_per_m2, config.radius_m, rng);
    net.planar_charlies = sample_planar_ppp(config.lambda_c_per_m2, config.radius_m, rng);
    return net;
}

}  // namespace v2xsec
