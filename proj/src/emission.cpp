#include "exciton/emission.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "exciton/constants.hpp"
#include "exciton/errors.hpp"

namespace exciton {

namespace {

using std::numbers::pi;

constexpr double kPlaneTolerance = 1e-12;

// Point at distance `radius` from the origin making angle `phi` with the
// in-plane dipole direction at angle `theta` to x.
Vec3 in_plane_point(double theta, double phi, double radius)
{
    return {radius * std::cos(theta + phi), 0.0, radius * std::sin(theta + phi)};
}

}  // namespace

EmissionGeometry geometry(const Vec3& source_center, const Vec3& dipole_dir,
                          const ObservationPoint& obs)
{
    const Vec3& r = obs.position;
    if (!is_finite(r) || !is_finite(source_center)) {
        throw GeometryError("observation and source positions must be finite");
    }
    const double scale = norm(r) + norm(source_center);
    if (std::fabs(r.y) > kPlaneTolerance * scale ||
        std::fabs(source_center.y) > kPlaneTolerance * scale) {
        throw GeometryError("observation point must lie in the x-z plane");
    }
    if (norm(dipole_dir) == 0.0) throw GeometryError("dipole direction is zero");

    const Vec3 rel = r - source_center;
    const double distance = norm(rel);
    if (distance == 0.0) throw GeometryError("observation point coincides with the source");

    EmissionGeometry g;
    g.source_center = source_center;
    g.distance = distance;
    g.unit_n = rel / distance;
    g.phi = angle_between(dipole_dir, rel);
    g.polarization = cross(Vec3{0.0, 1.0, 0.0}, g.unit_n);
    g.retarded_delay = distance / constants::speed_of_light;
    return g;
}

double dipole_intensity(double dipole_sq, double energy, double sin_sq_phi, double distance)
{
    using namespace constants;
    const double omega = energy / hbar;
    const double omega2 = omega * omega;
    return dipole_sq * omega2 * omega2 * sin_sq_phi /
           (32.0 * pi * pi * vacuum_permittivity * speed_of_light * speed_of_light *
            speed_of_light * distance * distance);
}

IntensitySample intensity_single_mode(const ChainSpec& spec, int k, const ObservationPoint& obs,
                                      double t, int excitation, const FarFieldOptions& opts)
{
    if (excitation != 0 && excitation != 1) {
        throw DomainError("excitation must be 0 or 1, got " + std::to_string(excitation));
    }
    const CollectiveMode mode = collective_mode(spec, k);
    const EmissionGeometry g = geometry(Vec3{}, spec.dipole_direction(), obs);

    IntensitySample out;
    out.warnings = mode.warnings;
    if (g.distance < opts.min_distance_ratio * spec.length()) out.warnings |= Warning::near_field;
    if (mode.parity == Parity::dark) {
        out.warnings |= Warning::dark_mode;
        return out;
    }
    const double elapsed = t - g.retarded_delay;
    if (elapsed < 0.0) {
        out.warnings |= Warning::before_arrival;
        return out;
    }
    const double s = std::sin(g.phi);
    out.value = excitation * dipole_intensity(dot(mode.dipole, mode.dipole), mode.energy, s * s,
                                              g.distance) *
                std::exp(-mode.gamma * elapsed);
    return out;
}

std::vector<PatternSample> angular_pattern(const ChainSpec& spec, int k, double radius,
                                           int n_angles)
{
    if (n_angles < 2) throw DomainError("angular pattern needs at least 2 angles");
    if (!(radius > 0.0)) throw DomainError("pattern radius must be positive");
    const CollectiveMode mode = collective_mode(spec, k);

    const double dipole_sq = dot(mode.dipole, mode.dipole);
    std::vector<PatternSample> out;
    out.reserve(static_cast<std::size_t>(n_angles));
    for (int i = 0; i < n_angles; ++i) {
        const double phi = pi * i / (n_angles - 1);
        const double s = std::sin(phi);
        out.push_back({phi, dipole_intensity(dipole_sq, mode.energy, s * s, radius)});
    }
    return out;
}

double integrate_pattern(std::span<const PatternSample> pattern, double radius)
{
    const std::size_t n = pattern.size();
    if (n < 3 || n % 2 == 0) {
        throw DomainError("Simpson integration needs an odd number (>= 3) of samples");
    }
    const double h = pi / static_cast<double>(n - 1);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double w = (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        sum += w * pattern[i].intensity * std::sin(pattern[i].angle);
    }
    return 2.0 * pi * radius * radius * sum * h / 3.0;
}

double radiated_power(const ChainSpec& spec, int k, double radius, double elapsed, int n_angles)
{
    if (elapsed < 0.0) throw DomainError("elapsed time must be non-negative");
    if (!(radius > 0.0)) throw DomainError("radius must be positive");
    if (n_angles < 3 || n_angles % 2 == 0) {
        throw DomainError("radiated_power needs an odd number (>= 3) of angles");
    }
    std::vector<PatternSample> samples;
    samples.reserve(static_cast<std::size_t>(n_angles));
    for (int i = 0; i < n_angles; ++i) {
        const double phi = pi * i / (n_angles - 1);
        const ObservationPoint obs{in_plane_point(spec.dipole_angle, phi, radius)};
        const double delay = norm(obs.position) / constants::speed_of_light;
        samples.push_back({phi, intensity_single_mode(spec, k, obs, delay + elapsed, 1).value});
    }
    return integrate_pattern(samples, radius);
}

const std::vector<double>& IntensityTrace::term(std::string_view label) const
{
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw std::out_of_range("no trace term '" + std::string(label) + "'");
    return terms[static_cast<std::size_t>(it - labels.begin())];
}

std::vector<double> time_grid(double start, double span, int points)
{
    if (points < 2) throw DomainError("time grid needs at least 2 points");
    if (!(span > 0.0)) throw DomainError("time grid span must be positive");
    std::vector<double> t(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) t[static_cast<std::size_t>(i)] = start + span * i / (points - 1);
    return t;
}

}  // namespace exciton
