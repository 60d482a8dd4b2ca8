// Far-field emission of a collective mode treated as a point dipole at the
// centre of its chain.
//
// Geometry is restricted to the x-z plane: the chain runs along x, dipoles lie
// in x-z and the field polarisation is y x n.

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exciton/chain_spectrum.hpp"
#include "exciton/vec3.hpp"
#include "exciton/warnings.hpp"

namespace exciton {

struct ObservationPoint {
    Vec3 position;  // [m]
};

struct EmissionGeometry {
    Vec3 source_center;      // R [m]
    double distance = 0;     // |r - R| [m]
    double phi = 0;          // angle between dipole and r - R [rad]
    Vec3 unit_n;             // (r - R) / |r - R|
    Vec3 polarization;       // y x n
    double retarded_delay = 0;  // |r - R| / c [s]
};

/// Throws GeometryError when r == R, when the dipole direction is zero, or
/// when either point lies off the x-z plane.
EmissionGeometry geometry(const Vec3& source_center, const Vec3& dipole_dir,
                          const ObservationPoint& obs);

struct FarFieldOptions {
    /// Observation closer than ratio * L raises Warning::near_field.
    double min_distance_ratio = 10.0;
};

/// Intensity 1/2 eps0 c <E- E+> of a point dipole |mu|^2 with transition
/// energy `energy`, for unit excitation and no decay:
/// |mu|^2 omega^4 sin^2(phi) / (32 pi^2 eps0 c^3 d^2).
double dipole_intensity(double dipole_sq, double energy, double sin_sq_phi, double distance);

struct IntensitySample {
    double value = 0;  // [W/m^2]
    Warnings warnings;
};

/// Intensity of mode k of a chain centred at the origin, observed at `obs`
/// and time `t` with initial occupation `excitation` (0 or 1). Zero before the
/// retarded delay and for dark modes.
IntensitySample intensity_single_mode(const ChainSpec& spec, int k, const ObservationPoint& obs,
                                      double t, int excitation, const FarFieldOptions& opts = {});

struct PatternSample {
    double angle = 0;      // phi [rad]
    double intensity = 0;  // [W/m^2]
};

/// `n_angles` equally spaced samples of phi over [0, pi] on a circle of
/// `radius` in the x-z plane, each taken at its retarded delay.
std::vector<PatternSample> angular_pattern(const ChainSpec& spec, int k, double radius,
                                           int n_angles);

/// Power through a sphere of `radius` for an axially symmetric pattern:
/// 2 pi r^2 int I(phi) sin(phi) dphi by composite Simpson. Needs an odd number
/// (>= 3) of equally spaced samples spanning [0, pi].
double integrate_pattern(std::span<const PatternSample> pattern, double radius);

/// Power radiated by mode k through a sphere of `radius`, `elapsed` seconds
/// after the wavefront reaches it. Each of the `n_angles` quadrature nodes is
/// evaluated through intensity_single_mode at its own retarded time.
double radiated_power(const ChainSpec& spec, int k, double radius, double elapsed, int n_angles);

/// Time series of intensity at one observation point. `terms` holds the
/// contributions whose sum is `total`, ordered as `labels`. Diagonal terms
/// are labelled with an "I_" prefix, interference terms with "G_".
struct IntensityTrace {
    ObservationPoint observation;
    std::vector<double> times;
    std::vector<double> total;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> terms;

    /// Throws std::out_of_range for an unknown label.
    const std::vector<double>& term(std::string_view label) const;
};

/// Equally spaced times over [start, start + span], `points` >= 2.
std::vector<double> time_grid(double start, double span, int points);

}  // namespace exciton
