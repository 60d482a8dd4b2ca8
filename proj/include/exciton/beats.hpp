// Quantum-beat analysis of intensity traces.

#pragma once

#include <string>
#include <vector>

#include "exciton/emission.hpp"

namespace exciton {

struct EnvelopeFit {
    std::string label;
    double rate = 0;  // fitted decay rate [1/s]
    std::size_t samples = 0;
};

struct BeatAnalysis {
    bool oscillation_detected = false;
    double beat_period = 0;          // [s], 0 when nothing detected
    std::size_t zero_crossings = 0;
    double cross_envelope_rate = 0;  // decay of the beat amplitude [1/s]
    std::vector<EnvelopeFit> envelopes;  // one per diagonal "I_" term
};

struct BeatOptions {
    /// Interference below this fraction of the peak total counts as noise.
    double noise_floor = 1e-9;
};

/// Beat period from zero crossings of the interference signal, which is the
/// sum of the "G_" terms when present and otherwise total minus the "I_"
/// terms. Zero-crossing times are located by linear interpolation and
/// regressed on their index. Envelope rates come from least-squares fits of
/// log I(t) for every positive "I_" term.
BeatAnalysis beat_extract(const IntensityTrace& trace, const BeatOptions& opts = {});

}  // namespace exciton
