// Lattices with frozen vacancies. Every maximal run of occupied sites is an
// independent emitter whose superradiant (k = 1) mode sits at the run's
// centre; the total far field is the coherent sum of the segment fields.

#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exciton/chain_spectrum.hpp"
#include "exciton/emission.hpp"

namespace exciton {

struct Segment {
    int first_site = 0;  // lattice index of the leftmost occupied site
    int n_sites = 0;
    double length = 0;   // a (n_sites + 1)
    Vec3 center;         // mean position of the occupied sites; site i sits at (i a, 0, 0)
    std::vector<CollectiveMode> modes;  // all k; dark modes are kept for spectroscopy

    const CollectiveMode& superradiant() const { return modes.front(); }
};

struct SegmentLayout {
    std::vector<bool> occupancy;
    ChainSpec chain;  // shared atom parameters; n_sites is unused
    std::vector<Segment> segments;
    Warnings warnings;

    std::vector<bool> reconstruct_occupancy() const;
};

/// Parses a string of '1' (occupied) and '0' (vacant) characters.
std::vector<bool> parse_occupancy(std::string_view text);
std::string format_occupancy(const std::vector<bool>& occupancy);

/// Splits `occupancy` into maximal runs. Throws DomainError for an empty or
/// all-vacant lattice. Raises Warning::resonant_neighbors when two adjacent
/// segments have equal length.
SegmentLayout decompose(const std::vector<bool>& occupancy, const ChainSpec& common);

/// Point dipole-dipole energy
/// [mu_a . mu_b / R^3 - 3 (mu_a . R)(mu_b . R) / R^5] / (4 pi eps0).
/// Throws GeometryError for zero separation.
double inter_segment_coupling(const Vec3& mu_a, const Vec3& mu_b, const Vec3& separation);

struct SegmentCoupling {
    double energy = 0;        // [J]
    bool point_dipole_valid = true;  // false when |R| <= max(L_a, L_b)
};

/// Coupling between the superradiant modes of two segments.
SegmentCoupling segment_coupling(const Segment& a, const Segment& b);

enum class Resonance { resonant, blocked };

const char* to_string(Resonance r);

/// Resonant iff |E_a - E_b| <= linewidth_scale * hbar * max(Gamma_a, Gamma_b)
/// for the superradiant modes.
Resonance resonance_check(const Segment& a, const Segment& b, double linewidth_scale = 1.0);

/// Occupation of each segment (0 or 1) paired with a complex amplitude.
struct StateComponent {
    std::vector<int> occupation;
    std::complex<double> amplitude;
};

/// Pure state in the product basis of at most one superradiant excitation
/// per segment.
class InitialState {
public:
    /// Throws DomainError for inconsistent lengths, occupations other than
    /// 0/1, repeated basis vectors or an empty component list.
    static InitialState from_components(std::vector<StateComponent> components);

    /// Parses occupation strings such as "10".
    static InitialState from_strings(
        const std::vector<std::pair<std::string, std::complex<double>>>& components);

    /// A single basis vector with unit amplitude.
    static InitialState basis(std::vector<int> occupation);

    /// (|1_a,0_b> + |0_a,1_b>) / sqrt(2) generalised to equal weight on every
    /// single-excitation basis vector of `segments` segments.
    static InitialState symmetric_single_excitation(int segments);

    int segment_count() const { return segments_; }
    const std::vector<StateComponent>& components() const { return components_; }
    double norm_squared() const;
    InitialState normalized() const;
    InitialState with_global_phase(double phase) const;

    /// Matrix rho(i, j) = <B_i^dagger B_j> at t = 0, row-major M x M.
    std::vector<std::complex<double>> coherences() const;

private:
    int segments_ = 0;
    std::vector<StateComponent> components_;
};

/// Labels of total_intensity terms: "I_i" for each segment, then "G_i_j" for
/// every ordered pair i != j.
std::vector<std::string> term_labels(int segments);

struct IntensityPoint {
    double total = 0;
    std::vector<double> terms;  // ordered as term_labels(M); G entries are Re G_ij
    Warnings warnings;
};

/// Superposed intensity of all segments' superradiant modes at `obs` and
/// time `t`. Requires a normalised state (to 1e-12) with one occupation per
/// segment. Each segment field contributes only after its own retarded delay.
IntensityPoint total_intensity(const SegmentLayout& layout, const InitialState& state,
                               const ObservationPoint& obs, double t);

/// total_intensity over a list of times.
IntensityTrace intensity_trace(const SegmentLayout& layout, const InitialState& state,
                               const ObservationPoint& obs, std::span<const double> times);

/// Latest retarded delay |r - R_i| / c over all segments, i.e. the first time
/// every segment field has reached `obs`.
double latest_arrival(const SegmentLayout& layout, const ObservationPoint& obs);

}  // namespace exciton
