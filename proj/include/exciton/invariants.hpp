#pragma once

#include <string>
#include <vector>

#include "exciton/chain_spectrum.hpp"

namespace exciton {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Self-consistency checks of the chain spectrum for `spec`: analytic versus
/// numerical modes, selection and sum rules, spectral symmetry,
/// superradiance, the magic angle and the single-atom limit.
std::vector<CheckResult> run_invariant_checks(const ChainSpec& spec);

}  // namespace exciton
