#include "exciton/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "exciton/constants.hpp"

namespace exciton {

namespace {

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

CheckResult eigen_agreement(const ChainSpec& spec)
{
    const auto numeric = numeric_diagonalize(spec);
    const int n = spec.n_sites;
    const double j = std::fabs(coupling_j(spec));
    double worst = 0.0;
    for (const Eigenpair& p : numeric) {
        // Match on the hopping eigenvalue 2 cos(pi k / (N+1)).
        const double c = std::clamp(p.hopping_eigenvalue / 2.0, -1.0, 1.0);
        const int k = static_cast<int>(std::lround(std::acos(c) * (n + 1) / std::numbers::pi));
        if (k < 1 || k > n) return {"eigen_agreement", false, "unmatched eigenvalue"};
        const double e = mode_energy(spec, k);
        worst = std::max(worst, std::fabs(p.energy - e) / e);
        if (j > 0.0) worst = std::max(worst, std::fabs(p.shift - mode_shift(spec, k)) / j);
        for (int site = 1; site <= n; ++site) {
            worst = std::max(worst, std::fabs(p.profile[static_cast<std::size_t>(site - 1)] -
                                              mode_profile(spec, k, site)));
        }
    }
    return {"eigen_agreement", worst <= 1e-10, "max deviation " + sci(worst)};
}

}  // namespace

std::vector<CheckResult> run_invariant_checks(const ChainSpec& spec)
{
    spec.validate();
    std::vector<CheckResult> out;
    out.push_back(eigen_agreement(spec));

    const auto modes = all_modes(spec);
    const double mu = spec.dipole_mag;

    bool selection = true;
    double sum_sq = 0.0;
    for (const CollectiveMode& m : modes) {
        const double ratio = mu > 0.0 ? norm(m.dipole) / mu : 0.0;
        if (m.k % 2 == 0) selection &= norm(m.dipole) == 0.0 && m.parity == Parity::dark;
        else selection &= (mu == 0.0 || ratio >= kDarkTolerance) && m.parity == Parity::bright;
        sum_sq += dot(m.dipole, m.dipole);
    }
    out.push_back({"selection_rule", selection, "even k dark, odd k bright"});

    const double expected = spec.n_sites * mu * mu;
    const double sum_err = expected > 0.0 ? std::fabs(sum_sq - expected) / expected : sum_sq;
    out.push_back({"dipole_sum_rule", sum_err <= 1e-12, "relative error " + sci(sum_err)});

    double sym = 0.0;
    for (int k = 1; k <= spec.n_sites; ++k) {
        sym = std::max(sym, std::fabs(mode_shift(spec, k) + mode_shift(spec, spec.n_sites + 1 - k)));
    }
    const double jscale = std::fabs(coupling_j(spec));
    const double sym_rel = jscale > 0.0 ? sym / jscale : sym;
    out.push_back({"spectral_symmetry", sym_rel <= 1e-12, "max |shift_k + shift_{N+1-k}| / |J| = " + sci(sym_rel)});

    bool super = true;
    for (std::size_t i = 1; i < modes.size(); ++i) super &= modes[0].gamma > modes[i].gamma;
    out.push_back({"superradiance", super || mu == 0.0, "Gamma_1 exceeds every other rate"});

    ChainSpec magic = spec;
    magic.dipole_angle = magic_angle();
    const double scale = coulomb_factor() * mu * mu / std::pow(spec.lattice_const, 3);
    const double jm = scale > 0.0 ? std::fabs(coupling_j(magic)) / scale : 0.0;
    out.push_back({"magic_angle", jm < 1e-12, "|J(theta*)| / (mu^2 / 4 pi eps0 a^3) = " + sci(jm)});

    const double single = dipole_enhancement(1, 1);
    out.push_back({"single_atom_limit", std::fabs(single - 1.0) <= 1e-12,
                   "(2a/L) cot^2(pi a / 2L) at L = 2a: " + sci(single - 1.0) + " from 1"});
    return out;
}

}  // namespace exciton
