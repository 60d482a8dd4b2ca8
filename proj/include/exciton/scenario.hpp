// Closed-form intensities for the two-segment lattice "1011": a single atom
// (alpha) at the origin, a vacancy at x = a and a two-atom segment (beta) at
// x = 2a, 3a whose bright mode sits at x = 5a/2. The observation point is on
// the z axis at (0, 0, r).
//
// These expressions are written out independently of the general segment
// engine so that each can check the other.

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "exciton/chain_spectrum.hpp"
#include "exciton/emission.hpp"
#include "exciton/segments.hpp"

namespace exciton {

struct TwoSegmentTerms {
    double i_alpha = 0;  // intensity of alpha for unit population [W/m^2]
    double i_beta = 0;
    /// G_ab + G_ba = Re(coherence * cross) for coherence <B_a^dagger B_b>(0).
    /// For unit coherence the real part is the usual cosine beat term.
    std::complex<double> cross;

    double combine(double population_alpha, double population_beta,
                   std::complex<double> coherence) const;

    /// Total for the state (|1_a,0_b> + |0_a,1_b>) / sqrt(2).
    double symmetric_total() const;
};

/// The "1011" layout built through the general segment decomposition.
SegmentLayout two_segment_layout(const ChainSpec& spec);

/// Exact point-dipole expressions with phi_a = pi/2 - theta,
/// phi_b = pi - theta - atan(r / R) and distances r, sqrt(r^2 + R^2).
/// Throws GeometryError unless obs = (0, 0, r) with r > 0.
TwoSegmentTerms two_segment_exact(const ChainSpec& spec, const ObservationPoint& obs, double t);

/// Far-zone limit r >> R: both angles equal phi_a, both distances r, and the
/// beat phase reduces to (omega_A + J/hbar) R^2 / (2 r c) - (J/hbar)(t - r/c).
TwoSegmentTerms two_segment_far_zone(const ChainSpec& spec, const ObservationPoint& obs,
                                     double t);

/// Arrival time of the later (beta) wavefront, sqrt(r^2 + R^2) / c.
double two_segment_start(const ChainSpec& spec, const ObservationPoint& obs);

/// `points` samples over [start, start + span_lifetimes / Gamma_A].
std::vector<double> two_segment_grid(const ChainSpec& spec, const ObservationPoint& obs,
                                     int points = 2000, double span_lifetimes = 5.0);

enum class Zone { exact, far };

/// Trace with terms "I_alpha", "I_beta" (population weighted) and
/// "G_alpha_beta" (G_ab + G_ba). `state` must describe two segments.
IntensityTrace two_segment_trace(const ChainSpec& spec, const ObservationPoint& obs,
                                 std::span<const double> times, Zone zone,
                                 const InitialState& state);

/// max_t |far(t) - exact(t)| / exact(t_0): the deviation of the far-zone
/// curve in units of the initial exact intensity, the normalisation used for
/// I(t)/I_0 plots. Traces must share the same time grid.
double far_zone_deviation(const IntensityTrace& exact, const IntensityTrace& far);

}  // namespace exciton
