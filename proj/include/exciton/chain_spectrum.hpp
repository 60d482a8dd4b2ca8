// Single-excitation spectrum of a finite chain of two-level atoms with
// nearest-neighbour resonant dipole-dipole hopping.
//
// The chain has N occupied sites with empty ghost sites at n = 0 and n = N+1,
// so the excitation satisfies fixed boundary conditions and the eigenmodes are
// standing sine waves indexed by k = 1..N. Odd k modes are bright, even k
// modes carry no net transition dipole.

#pragma once

#include <vector>

#include "exciton/vec3.hpp"
#include "exciton/warnings.hpp"

namespace exciton {

/// Physical parameters of one contiguous chain, SI units.
struct ChainSpec {
    int n_sites = 1;            // N
    double lattice_const = 0;   // a [m]
    double atom_energy = 0;     // E_A [J]
    double dipole_mag = 0;      // mu [C m]
    double dipole_angle = 0;    // theta, angle to the chain axis [rad]

    /// Throws DomainError if any field is outside its physical range.
    void validate() const;

    /// L = a (N + 1), including the two ghost sites.
    double length() const { return lattice_const * (n_sites + 1); }

    /// Unit vector (cos theta, 0, sin theta); the chain runs along x.
    Vec3 dipole_direction() const;

    /// Copy with a different number of sites.
    ChainSpec with_sites(int n) const;

    /// E_A = 1 eV, a = 1000 A, mu = 1 e*A, theta = 0, N = 10.
    static ChainSpec reference();
};

enum class Parity { bright, dark };

const char* to_string(Parity p);

struct CollectiveMode {
    int k = 1;
    double energy = 0;   // E_k [J]
    double shift = 0;    // E_k - E_A [J], kept separately for precise differences
    Vec3 dipole;         // mu_k [C m]
    double gamma = 0;    // Gamma_k [1/s]
    Parity parity = Parity::bright;
    Warnings warnings;
};

/// Modes with |mu_k| / mu below this are classified dark.
inline constexpr double kDarkTolerance = 1e-12;

/// Nearest-neighbour coupling J = mu^2 (1 - 3 cos^2 theta) / (4 pi eps0 a^3).
double coupling_j(const ChainSpec& spec);

/// Hopping energy between sites `distance` lattice constants apart. Only
/// nearest neighbours couple; every other distance returns 0.
double site_coupling(const ChainSpec& spec, int distance);

/// 2 J cos(pi k / (N+1)).
double mode_shift(const ChainSpec& spec, int k);

/// E_k = E_A + 2 J cos(pi k / (N+1)).
double mode_energy(const ChainSpec& spec, int k);

/// sqrt(2/(N+1)) sin(pi n k / (N+1)) for 1 <= k <= N and 0 <= n <= N+1.
double mode_profile(const ChainSpec& spec, int k, int n);

/// |mu_k|^2 / mu^2: (2/(N+1)) cot^2(pi k / (2(N+1))) for odd k, 0 for even k.
double dipole_enhancement(int n_sites, int k);

/// mu_k, along the single-atom dipole direction. Exactly zero for even k.
Vec3 collective_dipole(const ChainSpec& spec, int k);

/// Spontaneous emission rate |mu|^2 omega^3 / (3 pi eps0 hbar c^3) of a point
/// dipole with transition energy `energy`.
double spontaneous_rate(double dipole_sq, double energy);

/// Gamma_A, the isolated-atom rate.
double atomic_decay_rate(const ChainSpec& spec);

/// lambda_A = 2 pi hbar c / E_A.
double atomic_wavelength(const ChainSpec& spec);

struct Rate {
    double value = 0;  // [1/s]
    Warnings warnings;
};

/// Gamma_k for bright modes, 0 for dark ones. Flags Warning::long_chain when
/// L exceeds the atomic wavelength, where the small-sample rate is unreliable.
Rate damping_rate(const ChainSpec& spec, int k);

struct Eigenpair {
    double energy = 0;             // E_A + J * hopping_eigenvalue
    double shift = 0;              // J * hopping_eigenvalue
    double hopping_eigenvalue = 0; // eigenvalue of the dimensionless hopping matrix
    std::vector<double> profile;   // site amplitudes n = 1..N
};

/// Numerical diagonalisation of the N x N tridiagonal Hamiltonian. The matrix
/// is split as E_A * 1 + J * T and T is diagonalised, so shifts of order
/// 1e-8 E_A keep full relative precision and J = 0 still yields well-defined
/// modes. Sorted by ascending energy; ties ordered by descending T eigenvalue.
std::vector<Eigenpair> numeric_diagonalize(const ChainSpec& spec);

CollectiveMode collective_mode(const ChainSpec& spec, int k);

/// All N modes, k = 1..N.
std::vector<CollectiveMode> all_modes(const ChainSpec& spec);

}  // namespace exciton
