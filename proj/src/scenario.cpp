#include "exciton/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "exciton/constants.hpp"
#include "exciton/errors.hpp"

namespace exciton {

namespace {

using std::numbers::pi;
using std::numbers::sqrt2;
using cplx = std::complex<double>;

// Parameters shared by the exact and far-zone expressions.
struct TwoSegmentParams {
    double mu_sq;        // mu^2
    double omega_a;      // E_A / hbar
    double jbar;         // J / hbar
    double omega_b;      // omega_A + jbar
    double gamma_a;      // single-atom rate
    double gamma_b;      // bright two-atom mode: 2 Gamma_A (omega_b / omega_a)^3
    double theta;
    double rbar;         // 5a/2
    double r;            // observation distance along z
    double c3eps;        // eps0 c^3
};

TwoSegmentParams make_params(const ChainSpec& spec, const ObservationPoint& obs)
{
    spec.with_sites(1).validate();
    const Vec3& p = obs.position;
    if (!(p.z > 0.0) || !std::isfinite(p.z) || std::fabs(p.x) > 1e-12 * p.z ||
        std::fabs(p.y) > 1e-12 * p.z) {
        throw GeometryError("two-segment observation must be on the positive z axis");
    }
    using namespace constants;
    TwoSegmentParams q{};
    q.mu_sq = spec.dipole_mag * spec.dipole_mag;
    q.omega_a = spec.atom_energy / hbar;
    const double cos_t = std::cos(spec.dipole_angle);
    const double a = spec.lattice_const;
    const double j = q.mu_sq / (4.0 * pi * vacuum_permittivity * a * a * a) * (1.0 - 3.0 * cos_t * cos_t);
    q.jbar = j / hbar;
    q.omega_b = q.omega_a + q.jbar;
    q.c3eps = vacuum_permittivity * speed_of_light * speed_of_light * speed_of_light;
    q.gamma_a = q.mu_sq * q.omega_a * q.omega_a * q.omega_a / (3.0 * pi * q.c3eps * hbar);
    const double ratio = q.omega_b / q.omega_a;
    q.gamma_b = 2.0 * q.gamma_a * ratio * ratio * ratio;
    q.theta = spec.dipole_angle;
    q.rbar = 2.5 * a;
    q.r = p.z;
    return q;
}

double pow4(double x)
{
    const double x2 = x * x;
    return x2 * x2;
}

}  // namespace

double TwoSegmentTerms::combine(double population_alpha, double population_beta,
                                std::complex<double> coherence) const
{
    return population_alpha * i_alpha + population_beta * i_beta + (coherence * cross).real();
}

double TwoSegmentTerms::symmetric_total() const
{
    return combine(0.5, 0.5, 0.5);
}

SegmentLayout two_segment_layout(const ChainSpec& spec)
{
    return decompose(parse_occupancy("1011"), spec);
}

TwoSegmentTerms two_segment_exact(const ChainSpec& spec, const ObservationPoint& obs, double t)
{
    const TwoSegmentParams q = make_params(spec, obs);
    const double c = constants::speed_of_light;
    const double d_b = std::hypot(q.r, q.rbar);
    const double tau_a = t - q.r / c;
    const double tau_b = t - d_b / c;
    const double phi_a = pi / 2 - q.theta;
    const double phi_b = pi - q.theta - std::atan2(q.r, q.rbar);
    const double sa = std::sin(phi_a);
    const double sb = std::sin(phi_b);

    TwoSegmentTerms out;
    if (tau_a >= 0.0) {
        out.i_alpha = q.mu_sq * pow4(q.omega_a) / (32.0 * pi * pi * q.c3eps) * sa * sa /
                      (q.r * q.r) * std::exp(-q.gamma_a * tau_a);
    }
    if (tau_b >= 0.0) {
        out.i_beta = q.mu_sq * pow4(q.omega_b) / (16.0 * pi * pi * q.c3eps) * sb * sb /
                     (d_b * d_b) * std::exp(-q.gamma_b * tau_b);
    }
    if (tau_a >= 0.0 && tau_b >= 0.0) {
        // omega_A tau_a - omega_b tau_b with d_b - r = R^2 / (d_b + r).
        const double path_diff = q.rbar * q.rbar / (d_b + q.r);
        const double phase = q.omega_a * path_diff / c - q.jbar * tau_b;
        const double amp = q.mu_sq * q.omega_a * q.omega_a * q.omega_b * q.omega_b /
                           (8.0 * sqrt2 * pi * pi * q.c3eps) * sa * sb / (d_b * d_b) *
                           std::exp(-0.5 * q.gamma_a * tau_a) * std::exp(-0.5 * q.gamma_b * tau_b);
        out.cross = std::polar(amp, phase);
    }
    return out;
}

TwoSegmentTerms two_segment_far_zone(const ChainSpec& spec, const ObservationPoint& obs, double t)
{
    const TwoSegmentParams q = make_params(spec, obs);
    const double c = constants::speed_of_light;
    const double tau = t - q.r / c;
    TwoSegmentTerms out;
    if (tau < 0.0) return out;
    const double s = std::sin(pi / 2 - q.theta);
    const double geom = s * s / (q.r * q.r);
    out.i_alpha = q.mu_sq * pow4(q.omega_a) / (32.0 * pi * pi * q.c3eps) * geom *
                  std::exp(-q.gamma_a * tau);
    out.i_beta = q.mu_sq * pow4(q.omega_b) / (16.0 * pi * pi * q.c3eps) * geom *
                 std::exp(-2.0 * q.gamma_a * tau);
    const double phase = q.omega_b * q.rbar * q.rbar / (2.0 * q.r * c) - q.jbar * tau;
    const double amp = q.mu_sq * q.omega_a * q.omega_a * q.omega_b * q.omega_b /
                       (8.0 * sqrt2 * pi * pi * q.c3eps) * geom * std::exp(-1.5 * q.gamma_a * tau);
    out.cross = std::polar(amp, phase);
    return out;
}

double two_segment_start(const ChainSpec& spec, const ObservationPoint& obs)
{
    const TwoSegmentParams q = make_params(spec, obs);
    return std::hypot(q.r, q.rbar) / constants::speed_of_light;
}

std::vector<double> two_segment_grid(const ChainSpec& spec, const ObservationPoint& obs,
                                     int points, double span_lifetimes)
{
    if (!(span_lifetimes > 0.0)) throw DomainError("time span must be positive");
    const TwoSegmentParams q = make_params(spec, obs);
    return time_grid(two_segment_start(spec, obs), span_lifetimes / q.gamma_a, points);
}

IntensityTrace two_segment_trace(const ChainSpec& spec, const ObservationPoint& obs,
                                 std::span<const double> times, Zone zone,
                                 const InitialState& state)
{
    if (state.segment_count() != 2) throw DomainError("two-segment trace needs a two-segment state");
    if (std::fabs(state.norm_squared() - 1.0) > 1e-12) {
        throw DomainError("initial state is not normalised");
    }
    const auto rho = state.coherences();
    const double pop_a = rho[0].real();
    const double pop_b = rho[3].real();
    const cplx coh = rho[1];

    IntensityTrace trace;
    trace.observation = obs;
    trace.labels = {"I_alpha", "I_beta", "G_alpha_beta"};
    trace.terms.assign(3, {});
    trace.times.assign(times.begin(), times.end());
    for (double t : times) {
        const TwoSegmentTerms terms =
            zone == Zone::exact ? two_segment_exact(spec, obs, t) : two_segment_far_zone(spec, obs, t);
        const double ia = pop_a * terms.i_alpha;
        const double ib = pop_b * terms.i_beta;
        const double g = (coh * terms.cross).real();
        trace.terms[0].push_back(ia);
        trace.terms[1].push_back(ib);
        trace.terms[2].push_back(g);
        trace.total.push_back(ia + ib + g);
    }
    return trace;
}

double far_zone_deviation(const IntensityTrace& exact, const IntensityTrace& far)
{
    if (exact.times.size() != far.times.size() || exact.total.empty()) {
        throw DomainError("far-zone comparison needs traces on the same non-empty grid");
    }
    const double reference = exact.total.front();
    if (!(reference > 0.0)) throw DomainError("exact trace starts with zero intensity");
    double worst = 0.0;
    for (std::size_t i = 0; i < exact.total.size(); ++i) {
        worst = std::max(worst, std::fabs(far.total[i] - exact.total[i]));
    }
    return worst / reference;
}

}  // namespace exciton
