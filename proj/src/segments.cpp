#include "exciton/segments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "exciton/constants.hpp"
#include "exciton/errors.hpp"

namespace exciton {

namespace {

using cplx = std::complex<double>;

constexpr double kNormTolerance = 1e-12;

// Superradiant emitter of one segment as seen from a fixed observation point.
struct Emitter {
    double field = 0;   // |mu_i| omega_i^2 sin(phi_i) / d_i
    double omega = 0;
    double shift = 0;   // E_i - E_A [J]
    double gamma = 0;
    double delay = 0;   // t_i
    Vec3 center;
    Vec3 polarization;
};

// 1 / (32 pi^2 eps0 c^3); I_i = K field_i^2 rho_ii exp(-Gamma_i tau_i).
double intensity_prefactor()
{
    using namespace constants;
    using std::numbers::pi;
    return 1.0 / (32.0 * pi * pi * vacuum_permittivity * speed_of_light * speed_of_light *
                  speed_of_light);
}

class LayoutEvaluator {
public:
    LayoutEvaluator(const SegmentLayout& layout, const InitialState& state,
                    const ObservationPoint& obs)
        : obs_(obs), m_(layout.segments.size())
    {
        if (state.segment_count() != static_cast<int>(m_)) {
            throw DomainError("initial state describes " + std::to_string(state.segment_count()) +
                              " segments but the layout has " + std::to_string(m_));
        }
        if (std::fabs(state.norm_squared() - 1.0) > kNormTolerance) {
            throw DomainError("initial state is not normalised");
        }
        rho_ = state.coherences();
        const Vec3 dir = layout.chain.dipole_direction();
        for (const Segment& seg : layout.segments) {
            const CollectiveMode& mode = seg.superradiant();
            const EmissionGeometry g = geometry(seg.center, dir, obs);
            Emitter e;
            e.omega = mode.energy / constants::hbar;
            e.field = norm(mode.dipole) * e.omega * e.omega * std::sin(g.phi) / g.distance;
            e.shift = mode.shift;
            e.gamma = mode.gamma;
            e.delay = g.retarded_delay;
            e.center = seg.center;
            e.polarization = g.polarization;
            emitters_.push_back(e);
        }
        // Arrival-time differences from d_i^2 - d_j^2 = (R_j - R_i).(2r - R_i - R_j),
        // which avoids cancelling two nearly equal distances.
        delay_diff_.assign(m_ * m_, 0.0);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < m_; ++j) {
                if (i == j) continue;
                const Emitter& a = emitters_[i];
                const Emitter& b = emitters_[j];
                const double diff_sq =
                    dot(b.center - a.center, obs.position * 2.0 - a.center - b.center);
                const double sum = (a.delay + b.delay) * constants::speed_of_light;
                delay_diff_[i * m_ + j] = diff_sq / sum / constants::speed_of_light;
            }
        }
    }

    IntensityPoint at(double t) const
    {
        const double k = intensity_prefactor();
        IntensityPoint out;
        out.terms.assign(m_ * m_, 0.0);
        for (std::size_t i = 0; i < m_; ++i) {
            const Emitter& e = emitters_[i];
            const double tau = t - e.delay;
            if (tau < 0.0) {
                out.warnings |= Warning::before_arrival;
                continue;
            }
            out.terms[i] = k * e.field * e.field * rho_[i * m_ + i].real() * std::exp(-e.gamma * tau);
        }
        std::size_t slot = m_;
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < m_; ++j) {
                if (i == j) continue;
                const std::size_t index = slot++;
                const cplx rho = rho_[i * m_ + j];
                if (rho == cplx{}) continue;
                const Emitter& a = emitters_[i];
                const Emitter& b = emitters_[j];
                const double tau_a = t - a.delay;
                const double tau_b = t - b.delay;
                if (tau_a < 0.0 || tau_b < 0.0) continue;
                // omega_i tau_i - omega_j tau_j = (omega_i - omega_j) tau_j - omega_i (t_i - t_j)
                const double phase = (a.shift - b.shift) / constants::hbar * tau_b -
                                     a.omega * delay_diff_[i * m_ + j];
                const double envelope = std::exp(-0.5 * (a.gamma * tau_a + b.gamma * tau_b));
                const double overlap = dot(a.polarization, b.polarization);
                const cplx g = k * a.field * b.field * overlap * envelope * rho *
                               std::polar(1.0, phase);
                out.terms[index] = g.real();
            }
        }
        for (double v : out.terms) out.total += v;
        return out;
    }

    const ObservationPoint& observation() const { return obs_; }
    std::size_t segments() const { return m_; }

private:
    ObservationPoint obs_;
    std::size_t m_;
    std::vector<cplx> rho_;
    std::vector<Emitter> emitters_;
    std::vector<double> delay_diff_;
};

}  // namespace

std::vector<bool> SegmentLayout::reconstruct_occupancy() const
{
    std::vector<bool> out(occupancy.size(), false);
    for (const Segment& s : segments) {
        for (int i = 0; i < s.n_sites; ++i) out[static_cast<std::size_t>(s.first_site + i)] = true;
    }
    return out;
}

std::vector<bool> parse_occupancy(std::string_view text)
{
    std::vector<bool> out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '1') {
            out.push_back(true);
        } else if (c == '0') {
            out.push_back(false);
        } else {
            throw DomainError(std::string("occupancy may only contain '0' and '1', found '") + c +
                              "'");
        }
    }
    if (out.empty()) throw DomainError("occupancy string is empty");
    return out;
}

std::string format_occupancy(const std::vector<bool>& occupancy)
{
    std::string s;
    s.reserve(occupancy.size());
    for (bool b : occupancy) s.push_back(b ? '1' : '0');
    return s;
}

SegmentLayout decompose(const std::vector<bool>& occupancy, const ChainSpec& common)
{
    if (occupancy.empty()) throw DomainError("occupancy is empty");
    common.with_sites(1).validate();

    SegmentLayout layout;
    layout.occupancy = occupancy;
    layout.chain = common;
    const double a = common.lattice_const;
    const int size = static_cast<int>(occupancy.size());
    for (int i = 0; i < size;) {
        if (!occupancy[static_cast<std::size_t>(i)]) {
            ++i;
            continue;
        }
        int j = i;
        while (j < size && occupancy[static_cast<std::size_t>(j)]) ++j;
        Segment seg;
        seg.first_site = i;
        seg.n_sites = j - i;
        seg.length = a * (seg.n_sites + 1);
        seg.center = Vec3{a * (i + j - 1) / 2.0, 0.0, 0.0};
        seg.modes = all_modes(common.with_sites(seg.n_sites));
        layout.segments.push_back(std::move(seg));
        i = j;
    }
    if (layout.segments.empty()) throw DomainError("lattice has no occupied sites");

    for (std::size_t s = 0; s < layout.segments.size(); ++s) {
        layout.warnings |= layout.segments[s].superradiant().warnings;
        if (s > 0 && layout.segments[s].n_sites == layout.segments[s - 1].n_sites) {
            layout.warnings |= Warning::resonant_neighbors;
        }
    }
    return layout;
}

double inter_segment_coupling(const Vec3& mu_a, const Vec3& mu_b, const Vec3& separation)
{
    const double r2 = dot(separation, separation);
    if (r2 == 0.0) throw GeometryError("dipole-dipole coupling at zero separation");
    const double r = std::sqrt(r2);
    const double r3 = r2 * r;
    return coulomb_factor() *
           (dot(mu_a, mu_b) / r3 - 3.0 * dot(mu_a, separation) * dot(mu_b, separation) / (r3 * r2));
}

SegmentCoupling segment_coupling(const Segment& a, const Segment& b)
{
    const Vec3 sep = b.center - a.center;
    SegmentCoupling out;
    out.energy = inter_segment_coupling(a.superradiant().dipole, b.superradiant().dipole, sep);
    out.point_dipole_valid = norm(sep) > std::max(a.length, b.length);
    return out;
}

const char* to_string(Resonance r)
{
    return r == Resonance::resonant ? "resonant" : "blocked";
}

Resonance resonance_check(const Segment& a, const Segment& b, double linewidth_scale)
{
    if (!(linewidth_scale >= 0.0)) throw DomainError("linewidth scale must be non-negative");
    const CollectiveMode& ma = a.superradiant();
    const CollectiveMode& mb = b.superradiant();
    const double detuning = std::fabs(ma.shift - mb.shift);
    const double width = linewidth_scale * constants::hbar * std::max(ma.gamma, mb.gamma);
    return detuning <= width ? Resonance::resonant : Resonance::blocked;
}

InitialState InitialState::from_components(std::vector<StateComponent> components)
{
    if (components.empty()) throw DomainError("initial state has no components");
    const std::size_t m = components.front().occupation.size();
    if (m == 0) throw DomainError("initial state occupation is empty");
    std::map<std::vector<int>, int> seen;
    for (const StateComponent& c : components) {
        if (c.occupation.size() != m) {
            throw DomainError("initial state components have inconsistent segment counts");
        }
        for (int n : c.occupation) {
            if (n != 0 && n != 1) throw DomainError("segment occupations must be 0 or 1");
        }
        if (!std::isfinite(c.amplitude.real()) || !std::isfinite(c.amplitude.imag())) {
            throw DomainError("initial state amplitude is not finite");
        }
        if (seen[c.occupation]++ > 0) throw DomainError("initial state repeats a basis vector");
    }
    InitialState s;
    s.segments_ = static_cast<int>(m);
    s.components_ = std::move(components);
    return s;
}

InitialState InitialState::from_strings(
    const std::vector<std::pair<std::string, std::complex<double>>>& components)
{
    std::vector<StateComponent> parsed;
    for (const auto& [text, amp] : components) {
        StateComponent c;
        for (char ch : text) {
            if (ch != '0' && ch != '1') {
                throw DomainError("occupation '" + text + "' may only contain '0' and '1'");
            }
            c.occupation.push_back(ch - '0');
        }
        c.amplitude = amp;
        parsed.push_back(std::move(c));
    }
    return from_components(std::move(parsed));
}

InitialState InitialState::basis(std::vector<int> occupation)
{
    return from_components({StateComponent{std::move(occupation), 1.0}});
}

InitialState InitialState::symmetric_single_excitation(int segments)
{
    if (segments < 1) throw DomainError("need at least one segment");
    const double amp = 1.0 / std::sqrt(static_cast<double>(segments));
    std::vector<StateComponent> comps;
    for (int i = 0; i < segments; ++i) {
        StateComponent c;
        c.occupation.assign(static_cast<std::size_t>(segments), 0);
        c.occupation[static_cast<std::size_t>(i)] = 1;
        c.amplitude = amp;
        comps.push_back(std::move(c));
    }
    return from_components(std::move(comps));
}

double InitialState::norm_squared() const
{
    double sum = 0.0;
    for (const StateComponent& c : components_) sum += std::norm(c.amplitude);
    return sum;
}

InitialState InitialState::normalized() const
{
    const double n2 = norm_squared();
    if (!(n2 > 0.0)) throw DomainError("cannot normalise a zero state");
    InitialState s = *this;
    const double scale = 1.0 / std::sqrt(n2);
    for (StateComponent& c : s.components_) c.amplitude *= scale;
    return s;
}

InitialState InitialState::with_global_phase(double phase) const
{
    InitialState s = *this;
    const cplx factor = std::polar(1.0, phase);
    for (StateComponent& c : s.components_) c.amplitude *= factor;
    return s;
}

std::vector<std::complex<double>> InitialState::coherences() const
{
    const auto m = static_cast<std::size_t>(segments_);
    std::map<std::vector<int>, cplx> amp;
    for (const StateComponent& c : components_) amp[c.occupation] = c.amplitude;

    std::vector<cplx> rho(m * m);
    for (const StateComponent& c : components_) {
        for (std::size_t j = 0; j < m; ++j) {
            if (c.occupation[j] != 1) continue;
            // B_j lowers segment j; B_i^dagger then raises segment i (hard-core).
            std::vector<int> lowered = c.occupation;
            lowered[j] = 0;
            for (std::size_t i = 0; i < m; ++i) {
                if (lowered[i] != 0) continue;
                std::vector<int> raised = lowered;
                raised[i] = 1;
                const auto it = amp.find(raised);
                if (it == amp.end()) continue;
                rho[i * m + j] += std::conj(it->second) * c.amplitude;
            }
        }
    }
    return rho;
}

std::vector<std::string> term_labels(int segments)
{
    std::vector<std::string> labels;
    for (int i = 0; i < segments; ++i) labels.push_back("I_" + std::to_string(i));
    for (int i = 0; i < segments; ++i) {
        for (int j = 0; j < segments; ++j) {
            if (i != j) labels.push_back("G_" + std::to_string(i) + "_" + std::to_string(j));
        }
    }
    return labels;
}

IntensityPoint total_intensity(const SegmentLayout& layout, const InitialState& state,
                               const ObservationPoint& obs, double t)
{
    return LayoutEvaluator(layout, state, obs).at(t);
}

IntensityTrace intensity_trace(const SegmentLayout& layout, const InitialState& state,
                               const ObservationPoint& obs, std::span<const double> times)
{
    const LayoutEvaluator eval(layout, state, obs);
    IntensityTrace trace;
    trace.observation = obs;
    trace.labels = term_labels(static_cast<int>(eval.segments()));
    trace.terms.assign(trace.labels.size(), {});
    for (auto& column : trace.terms) column.reserve(times.size());
    trace.times.assign(times.begin(), times.end());
    trace.total.reserve(times.size());
    for (double t : times) {
        const IntensityPoint p = eval.at(t);
        trace.total.push_back(p.total);
        for (std::size_t i = 0; i < p.terms.size(); ++i) trace.terms[i].push_back(p.terms[i]);
    }
    return trace;
}

double latest_arrival(const SegmentLayout& layout, const ObservationPoint& obs)
{
    double latest = 0.0;
    const Vec3 dir = layout.chain.dipole_direction();
    for (const Segment& seg : layout.segments) {
        latest = std::max(latest, geometry(seg.center, dir, obs).retarded_delay);
    }
    return latest;
}

}  // namespace exciton
