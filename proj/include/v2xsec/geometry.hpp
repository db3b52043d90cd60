#pragma once

#include "v2xsec/random.hpp"

#include <numbers>
#include <vector>

namespace v2xsec {

struct ScenarioConfig;

struct Point2D {
    double x{0.0};  // m
    double y{0.0};  // m

    friend bool operator==(const Point2D&, const Point2D&) = default;
};

double distance(const Point2D& a, const Point2D& b) noexcept;
double norm(const Point2D& p) noexcept;

/// A street: the chord of the disk perpendicular to the radius at polar
/// coordinates (midpoint_radius, angle).
struct Chord {
    double midpoint_radius{0.0};  // m, in [0, r)
    double angle{0.0};            // rad, in [0, 2pi)
    Point2D endpoint_a;
    Point2D endpoint_b;
    double length{0.0};  // m

    Point2D midpoint() const noexcept;
    /// Point at fraction t in [0, 1] along endpoint_a -> endpoint_b.
    Point2D at(double t) const noexcept;

    friend bool operator==(const Chord&, const Chord&) = default;
};

struct NetworkRealization {
    double radius{0.0};
    std::vector<Chord> streets;
    std::vector<Point2D> planar_eves;
    std::vector<Point2D> planar_charlies;
    std::vector<Point2D> vehicular_eves;
    std::vector<Point2D> vehicular_charlies;
    Point2D alice{0.0, 0.0};

    std::size_t eve_count() const noexcept { return planar_eves.size() + vehicular_eves.size(); }
    std::size_t charlie_count() const noexcept { return planar_charlies.size() + vehicular_charlies.size(); }

    /// Planar Eves followed by vehicular Eves.
    std::vector<Point2D> all_eves() const;
    std::vector<Point2D> all_charlies() const;

    friend bool operator==(const NetworkRealization&, const NetworkRealization&) = default;
};

/// Throws std::domain_error unless 0 <= p < r.
Chord chord_endpoints(double p, double theta, double r);

/// Homogeneous PPP of the given intensity (per m^2) on the disk of radius r
/// centred at the origin.
std::vector<Point2D> sample_planar_ppp(double intensity, double r, Rng& rng);

/// Poisson line process restricted to the disk: Poisson(2 lambda_l r) chords
/// with midpoint radius ~ U[0, r) and angle ~ U[0, 2pi).
std::vector<Chord> sample_plp_streets(double lambda_l, double r, Rng& rng);

/// One independent 1-D PPP of intensity u (per m) on every street,
/// concatenated in street order.
std::vector<Point2D> sample_vehicular_cox(const std::vector<Chord>& streets, double u, Rng& rng);

/// Joint draw of streets, vehicular Eves/Charlies on those streets, and
/// planar Eves/Charlies. Draw order is fixed: streets, vehicular Eves,
/// vehicular Charlies, planar Eves, planar Charlies.
NetworkRealization generate_network(const ScenarioConfig& config, Rng& rng);

/// Distance used inside SIR formulas: max(d, exclusion).
inline double clamp_distance(double d, double exclusion) noexcept { return d < exclusion ? exclusion : d; }

}  // namespace v2xsec
