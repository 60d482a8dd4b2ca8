#include "exciton/chain_spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "exciton/constants.hpp"
#include "exciton/errors.hpp"
#include "exciton/tridiagonal.hpp"

namespace exciton {

namespace {

using std::numbers::pi;

void check_mode_index(const ChainSpec& spec, int k)
{
    if (k < 1 || k > spec.n_sites) {
        throw DomainError("mode index k=" + std::to_string(k) + " outside 1.." +
                          std::to_string(spec.n_sites));
    }
}

double cot(double x) { return std::cos(x) / std::sin(x); }

}  // namespace

void ChainSpec::validate() const
{
    if (n_sites < 1) throw DomainError("n_sites must be >= 1");
    if (!(lattice_const > 0.0) || !std::isfinite(lattice_const)) {
        throw DomainError("lattice_const must be positive and finite");
    }
    if (!(atom_energy > 0.0) || !std::isfinite(atom_energy)) {
        throw DomainError("atom_energy must be positive and finite");
    }
    if (!(dipole_mag >= 0.0) || !std::isfinite(dipole_mag)) {
        throw DomainError("dipole_mag must be non-negative and finite");
    }
    if (!(dipole_angle >= 0.0 && dipole_angle <= pi / 2)) {
        throw DomainError("dipole_angle must lie in [0, pi/2]");
    }
}

Vec3 ChainSpec::dipole_direction() const
{
    return {std::cos(dipole_angle), 0.0, std::sin(dipole_angle)};
}

ChainSpec ChainSpec::with_sites(int n) const
{
    ChainSpec copy = *this;
    copy.n_sites = n;
    return copy;
}

ChainSpec ChainSpec::reference()
{
    return ChainSpec{
        .n_sites = 10,
        .lattice_const = 1000.0 * units::angstrom,
        .atom_energy = 1.0 * units::electron_volt,
        .dipole_mag = 1.0 * units::e_angstrom,
        .dipole_angle = 0.0,
    };
}

const char* to_string(Parity p)
{
    return p == Parity::bright ? "bright" : "dark";
}

double coupling_j(const ChainSpec& spec)
{
    spec.validate();
    const double c = std::cos(spec.dipole_angle);
    const double a3 = spec.lattice_const * spec.lattice_const * spec.lattice_const;
    return coulomb_factor() * spec.dipole_mag * spec.dipole_mag / a3 * (1.0 - 3.0 * c * c);
}

double site_coupling(const ChainSpec& spec, int distance)
{
    return std::abs(distance) == 1 ? coupling_j(spec) : 0.0;
}

double mode_shift(const ChainSpec& spec, int k)
{
    spec.validate();
    check_mode_index(spec, k);
    return 2.0 * coupling_j(spec) * std::cos(pi * k / (spec.n_sites + 1));
}

double mode_energy(const ChainSpec& spec, int k)
{
    return spec.atom_energy + mode_shift(spec, k);
}

double mode_profile(const ChainSpec& spec, int k, int n)
{
    spec.validate();
    check_mode_index(spec, k);
    if (n < 0 || n > spec.n_sites + 1) {
        throw DomainError("site index n=" + std::to_string(n) + " outside 0.." +
                          std::to_string(spec.n_sites + 1));
    }
    // sin(pi * m) is not exactly zero in floating point.
    if (n == 0 || n == spec.n_sites + 1) return 0.0;
    const double np1 = spec.n_sites + 1;
    return std::sqrt(2.0 / np1) * std::sin(pi * n * k / np1);
}

double dipole_enhancement(int n_sites, int k)
{
    if (n_sites < 1 || k < 1 || k > n_sites) {
        throw DomainError("dipole_enhancement: k=" + std::to_string(k) + " outside 1.." +
                          std::to_string(n_sites));
    }
    if (k % 2 == 0) return 0.0;
    const double np1 = n_sites + 1;
    const double ct = cot(pi * k / (2.0 * np1));
    return 2.0 / np1 * ct * ct;
}

Vec3 collective_dipole(const ChainSpec& spec, int k)
{
    spec.validate();
    check_mode_index(spec, k);
    if (k % 2 == 0) return {};
    const double np1 = spec.n_sites + 1;
    const double scale = std::sqrt(2.0 / np1) * cot(pi * k / (2.0 * np1));
    return spec.dipole_direction() * (spec.dipole_mag * scale);
}

double spontaneous_rate(double dipole_sq, double energy)
{
    using namespace constants;
    const double omega = energy / hbar;
    return dipole_sq * omega * omega * omega /
           (3.0 * pi * vacuum_permittivity * hbar * speed_of_light * speed_of_light *
            speed_of_light);
}

double atomic_decay_rate(const ChainSpec& spec)
{
    spec.validate();
    return spontaneous_rate(spec.dipole_mag * spec.dipole_mag, spec.atom_energy);
}

double atomic_wavelength(const ChainSpec& spec)
{
    spec.validate();
    return 2.0 * pi * constants::hbar * constants::speed_of_light / spec.atom_energy;
}

Rate damping_rate(const ChainSpec& spec, int k)
{
    spec.validate();
    check_mode_index(spec, k);
    Rate rate;
    if (spec.length() > atomic_wavelength(spec)) rate.warnings |= Warning::long_chain;
    if (k % 2 == 0) return rate;
    const double mu_sq = spec.dipole_mag * spec.dipole_mag * dipole_enhancement(spec.n_sites, k);
    rate.value = spontaneous_rate(mu_sq, mode_energy(spec, k));
    return rate;
}

std::vector<Eigenpair> numeric_diagonalize(const ChainSpec& spec)
{
    spec.validate();
    const auto n = static_cast<std::size_t>(spec.n_sites);
    const double j = coupling_j(spec);

    // H = E_A + J T where T couples nearest neighbours with unit weight.
    std::vector<double> diag(n, 0.0);
    std::vector<double> off(n - 1, 1.0);
    auto eig = solve_symmetric_tridiagonal(diag, off);

    std::vector<Eigenpair> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double shift = j * eig.values[i];
        out.push_back({spec.atom_energy + shift, shift, eig.values[i], std::move(eig.vectors[i])});
    }
    std::stable_sort(out.begin(), out.end(), [](const Eigenpair& a, const Eigenpair& b) {
        if (a.shift != b.shift) return a.shift < b.shift;
        return a.hopping_eigenvalue > b.hopping_eigenvalue;
    });
    return out;
}

CollectiveMode collective_mode(const ChainSpec& spec, int k)
{
    spec.validate();
    check_mode_index(spec, k);
    CollectiveMode mode;
    mode.k = k;
    mode.shift = mode_shift(spec, k);
    mode.energy = spec.atom_energy + mode.shift;
    mode.dipole = collective_dipole(spec, k);
    const Rate rate = damping_rate(spec, k);
    mode.gamma = rate.value;
    mode.warnings = rate.warnings;
    mode.parity = (k % 2 == 0) ? Parity::dark : Parity::bright;
    return mode;
}

std::vector<CollectiveMode> all_modes(const ChainSpec& spec)
{
    spec.validate();
    std::vector<CollectiveMode> modes;
    modes.reserve(static_cast<std::size_t>(spec.n_sites));
    for (int k = 1; k <= spec.n_sites; ++k) modes.push_back(collective_mode(spec, k));
    return modes;
}

}  // namespace exciton
