#include <doctest.h>

#include <cmath>
#include <numbers>

#include "exciton/chain_spectrum.hpp"
#include "exciton/constants.hpp"
#include "exciton/errors.hpp"

using namespace exciton;
using std::numbers::pi;

namespace {

ChainSpec reference(int n = 10, double theta = 0.0)
{
    ChainSpec s = ChainSpec::reference();
    s.n_sites = n;
    s.dipole_angle = theta;
    return s;
}

double coupling_scale(const ChainSpec& s)
{
    return coulomb_factor() * s.dipole_mag * s.dipole_mag / std::pow(s.lattice_const, 3);
}

}  // namespace

TEST_CASE("pinned physical constants")
{
    CHECK(constants::speed_of_light == 299792458.0);
    CHECK(constants::planck == 6.62607015e-34);
    CHECK(constants::hbar == 1.054571817e-34);
    CHECK(constants::elementary_charge == 1.602176634e-19);
    CHECK(constants::vacuum_permittivity == 8.8541878128e-12);
    CHECK(magic_angle() == doctest::Approx(54.735610317245346 * units::degree).epsilon(1e-15));
}

TEST_CASE("spec validation")
{
    ChainSpec s = reference();
    CHECK_NOTHROW(s.validate());
    CHECK(s.length() == doctest::Approx(11 * 1e-7).epsilon(1e-15));
    s.n_sites = 0;
    CHECK_THROWS_AS(s.validate(), DomainError);
    s = reference();
    s.lattice_const = 0.0;
    CHECK_THROWS_AS(s.validate(), DomainError);
    s = reference();
    s.atom_energy = -1.0;
    CHECK_THROWS_AS(s.validate(), DomainError);
    s = reference();
    s.dipole_mag = -1e-30;
    CHECK_THROWS_AS(s.validate(), DomainError);
    s = reference();
    s.dipole_angle = pi / 2 + 1e-9;
    CHECK_THROWS_AS(s.validate(), DomainError);
}

TEST_CASE("coupling J")
{
    ChainSpec s = reference();
    s.dipole_angle = magic_angle();
    CHECK(std::fabs(coupling_j(s)) < 1e-12 * coupling_scale(s));

    s.dipole_angle = pi / 2;
    CHECK(coupling_j(s) == doctest::Approx(coupling_scale(s)).epsilon(1e-15));

    // e^2 / (4 pi eps0) = 1.439964548 eV nm, so mu = 1 e*A and a = 1000 A give
    // mu^2 / (4 pi eps0 a^3) = 1.439964548e-8 eV and J(0) = -2 of that.
    s.dipole_angle = 0.0;
    CHECK(coupling_j(s) / units::electron_volt == doctest::Approx(-2.879929096e-8).epsilon(1e-9));
    CHECK(coupling_j(s) == doctest::Approx(-4.614155104683473e-27).epsilon(1e-14));

    // Sign change across the magic angle.
    s.dipole_angle = magic_angle() - 1e-3;
    CHECK(coupling_j(s) < 0.0);
    s.dipole_angle = magic_angle() + 1e-3;
    CHECK(coupling_j(s) > 0.0);

    CHECK(site_coupling(reference(), 1) == coupling_j(reference()));
    CHECK(site_coupling(reference(), -1) == coupling_j(reference()));
    CHECK(site_coupling(reference(), 2) == 0.0);
}

TEST_CASE("mode energies")
{
    const ChainSpec one = reference(1);
    CHECK(mode_energy(one, 1) == doctest::Approx(one.atom_energy).epsilon(1e-15));

    for (int n : {1, 2, 5, 10, 31}) {
        const ChainSpec s = reference(n);
        for (int k = 1; k <= n; ++k) {
            CHECK(std::fabs(mode_shift(s, k) + mode_shift(s, n + 1 - k)) <=
                  1e-14 * std::fabs(coupling_j(s)));
        }
    }

    // theta = 0: J < 0 and E_k increases with k; theta = pi/2 reverses it.
    const ChainSpec axial = reference(10, 0.0);
    const ChainSpec side = reference(10, pi / 2);
    for (int k = 1; k < 10; ++k) {
        CHECK(mode_shift(axial, k) < mode_shift(axial, k + 1));
        CHECK(mode_shift(side, k) > mode_shift(side, k + 1));
    }
    CHECK(mode_shift(axial, 1) == doctest::Approx(-8.854498804222515e-27).epsilon(1e-14));

    CHECK_THROWS_AS(mode_energy(axial, 0), DomainError);
    CHECK_THROWS_AS(mode_energy(axial, 11), DomainError);
}

TEST_CASE("mode profiles")
{
    const ChainSpec s = reference(10);
    for (int k = 1; k <= 10; ++k) {
        CHECK(mode_profile(s, k, 0) == 0.0);
        CHECK(mode_profile(s, k, 11) == 0.0);
        // Odd modes symmetric, even modes antisymmetric about the centre.
        const double parity = (k % 2 == 1) ? 1.0 : -1.0;
        for (int n = 1; n <= 10; ++n) {
            CHECK(mode_profile(s, k, n) ==
                  doctest::Approx(parity * mode_profile(s, k, 11 - n)).epsilon(1e-12).scale(1.0));
        }
        for (int k2 = 1; k2 <= 10; ++k2) {
            double overlap = 0.0;
            for (int n = 1; n <= 10; ++n) overlap += mode_profile(s, k, n) * mode_profile(s, k2, n);
            CHECK(overlap == doctest::Approx(k == k2 ? 1.0 : 0.0).epsilon(1e-14).scale(1.0));
        }
    }
    CHECK_THROWS_AS(mode_profile(s, 1, -1), DomainError);
    CHECK_THROWS_AS(mode_profile(s, 1, 12), DomainError);
    CHECK_THROWS_AS(mode_profile(s, 0, 1), DomainError);
}

TEST_CASE("collective dipoles against the direct site sum")
{
    const ChainSpec one = reference(1);
    CHECK(norm(collective_dipole(one, 1)) == doctest::Approx(one.dipole_mag).epsilon(1e-15));

    for (int n = 1; n <= 50; ++n) {
        const ChainSpec s = reference(n, 0.4);
        double sum_sq = 0.0;
        for (int k = 1; k <= n; ++k) {
            // Oracle: mu sqrt(2/(N+1)) sum_n sin(pi k n / (N+1)) without the cot identity.
            double direct = 0.0;
            for (int site = 1; site <= n; ++site) direct += std::sin(pi * k * site / (n + 1));
            direct *= std::sqrt(2.0 / (n + 1)) * s.dipole_mag;
            const Vec3 mu_k = collective_dipole(s, k);
            if (k % 2 == 0) {
                CHECK(norm(mu_k) == 0.0);
                CHECK(std::fabs(direct) < 1e-12 * s.dipole_mag * n);
            } else {
                CHECK(norm(mu_k) == doctest::Approx(direct).epsilon(1e-12));
                CHECK(mu_k.y == 0.0);
                CHECK(mu_k.x / norm(mu_k) == doctest::Approx(std::cos(0.4)).epsilon(1e-14));
            }
            sum_sq += dot(mu_k, mu_k);
        }
        CHECK(sum_sq == doctest::Approx(n * s.dipole_mag * s.dipole_mag).epsilon(1e-12));
    }
}

TEST_CASE("damping rates")
{
    const ChainSpec one = reference(1);
    const double gamma_a = atomic_decay_rate(one);
    CHECK(gamma_a == doctest::Approx(3796342.259403257).epsilon(1e-13));
    CHECK(damping_rate(one, 1).value == doctest::Approx(gamma_a).epsilon(1e-14));
    CHECK(dipole_enhancement(1, 1) == doctest::Approx(1.0).epsilon(1e-15));

    const ChainSpec ten = reference(10);
    const double ratio = damping_rate(ten, 1).value / damping_rate(ten, 3).value;
    CHECK(ratio == doctest::Approx(10.088956389416755).epsilon(1e-12));
    CHECK(damping_rate(ten, 1).value / gamma_a == doctest::Approx(8.795298556082434).epsilon(1e-12));
    for (int k = 2; k <= 10; k += 2) CHECK(damping_rate(ten, k).value == 0.0);
    for (int k = 2; k <= 10; ++k) CHECK(damping_rate(ten, 1).value > damping_rate(ten, k).value);
    CHECK(damping_rate(ten, 1).warnings.empty());

    // 201 * 1000 A is longer than the 1.24 um transition wavelength.
    const ChainSpec long_chain = reference(200);
    CHECK(damping_rate(long_chain, 1).warnings.has(Warning::long_chain));
    CHECK(damping_rate(long_chain, 1).value / damping_rate(long_chain, 3).value ==
          doctest::Approx(9.002932387007463).epsilon(1e-12));
}

TEST_CASE("numeric diagonalisation matches the sine modes")
{
    const ChainSpec two = reference(2);
    const auto pairs2 = numeric_diagonalize(two);
    const double j = std::fabs(coupling_j(two));
    CHECK(pairs2[0].shift == doctest::Approx(-j).epsilon(1e-14));
    CHECK(pairs2[1].shift == doctest::Approx(j).epsilon(1e-14));

    for (double theta : {0.0, pi / 4, magic_angle(), pi / 2}) {
        for (int n = 1; n <= 30; ++n) {
            const ChainSpec s = reference(n, theta);
            const auto pairs = numeric_diagonalize(s);
            REQUIRE(pairs.size() == static_cast<std::size_t>(n));
            for (std::size_t i = 1; i < pairs.size(); ++i) CHECK(pairs[i - 1].energy <= pairs[i].energy);
            for (const Eigenpair& p : pairs) {
                const double c = std::clamp(p.hopping_eigenvalue / 2.0, -1.0, 1.0);
                const int k = static_cast<int>(std::lround(std::acos(c) * (n + 1) / pi));
                REQUIRE(k >= 1);
                REQUIRE(k <= n);
                CHECK(p.energy == doctest::Approx(mode_energy(s, k)).epsilon(1e-10));
                CHECK(std::fabs(p.shift - mode_shift(s, k)) <= 1e-10 * std::fabs(coupling_j(s)));
                for (int site = 1; site <= n; ++site) {
                    CHECK(std::fabs(p.profile[static_cast<std::size_t>(site - 1)] - mode_profile(s, k, site)) <
                          1e-10);
                }
            }
        }
    }
}

TEST_CASE("all_modes")
{
    const auto one = all_modes(reference(1));
    REQUIRE(one.size() == 1);
    CHECK(one[0].parity == Parity::bright);
    CHECK(norm(one[0].dipole) == doctest::Approx(ChainSpec::reference().dipole_mag).epsilon(1e-15));

    const auto ten = all_modes(reference(10));
    int bright = 0;
    for (const auto& m : ten) {
        bright += m.parity == Parity::bright;
        CHECK((m.parity == Parity::dark) == (m.k % 2 == 0));
        CHECK((m.parity == Parity::dark) == (norm(m.dipole) < kDarkTolerance * ChainSpec::reference().dipole_mag));
        CHECK(m.gamma >= 0.0);
    }
    CHECK(bright == 5);

    const auto three = all_modes(reference(3));
    CHECK(three[0].parity == Parity::bright);
    CHECK(three[1].parity == Parity::dark);
    CHECK(three[2].parity == Parity::bright);
}
