#include "exciton/beats.hpp"

#include <algorithm>
#include <cmath>

namespace exciton {

namespace {

bool starts_with(const std::string& s, const char* prefix)
{
    return s.rfind(prefix, 0) == 0;
}

// Least-squares slope of y against x, computed about the means.
double fit_slope(const std::vector<double>& x, const std::vector<double>& y)
{
    const auto n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

}  // namespace

BeatAnalysis beat_extract(const IntensityTrace& trace, const BeatOptions& opts)
{
    BeatAnalysis out;
    const std::size_t n = trace.times.size();

    std::vector<double> cross(n, 0.0);
    std::vector<double> diagonal(n, 0.0);
    bool have_cross = false;
    bool have_diagonal = false;
    for (std::size_t l = 0; l < trace.labels.size(); ++l) {
        const auto& column = trace.terms[l];
        if (starts_with(trace.labels[l], "G_")) {
            have_cross = true;
            for (std::size_t i = 0; i < n; ++i) cross[i] += column[i];
        } else if (starts_with(trace.labels[l], "I_")) {
            have_diagonal = true;
            for (std::size_t i = 0; i < n; ++i) diagonal[i] += column[i];

            std::vector<double> t;
            std::vector<double> log_i;
            for (std::size_t i = 0; i < n; ++i) {
                if (column[i] > 0.0) {
                    t.push_back(trace.times[i]);
                    log_i.push_back(std::log(column[i]));
                }
            }
            if (t.size() >= 2) out.envelopes.push_back({trace.labels[l], -fit_slope(t, log_i), t.size()});
        }
    }
    if (!have_cross) {
        if (!have_diagonal || trace.total.size() != n) return out;
        for (std::size_t i = 0; i < n; ++i) cross[i] = trace.total[i] - diagonal[i];
    }

    double peak_total = 0.0;
    for (double v : trace.total) peak_total = std::max(peak_total, std::fabs(v));
    double peak_cross = 0.0;
    for (double v : cross) peak_cross = std::max(peak_cross, std::fabs(v));
    if (!(peak_cross > opts.noise_floor * peak_total)) return out;

    std::vector<double> crossings;
    std::vector<std::size_t> crossing_index;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double a = cross[i];
        const double b = cross[i + 1];
        if ((a < 0.0 && b >= 0.0) || (a > 0.0 && b <= 0.0)) {
            const double t0 = trace.times[i];
            const double t1 = trace.times[i + 1];
            crossings.push_back(t0 - a * (t1 - t0) / (b - a));
            crossing_index.push_back(i);
        }
    }
    out.zero_crossings = crossings.size();
    if (crossings.size() < 3) return out;

    std::vector<double> index(crossings.size());
    for (std::size_t i = 0; i < index.size(); ++i) index[i] = static_cast<double>(i);
    out.beat_period = 2.0 * fit_slope(index, crossings);
    out.oscillation_detected = true;

    // Largest |cross| between successive crossings traces the beat envelope.
    std::vector<double> peak_t;
    std::vector<double> peak_log;
    for (std::size_t c = 0; c + 1 < crossing_index.size(); ++c) {
        std::size_t best = crossing_index[c] + 1;
        for (std::size_t i = best; i <= crossing_index[c + 1]; ++i) {
            if (std::fabs(cross[i]) > std::fabs(cross[best])) best = i;
        }
        if (cross[best] != 0.0) {
            peak_t.push_back(trace.times[best]);
            peak_log.push_back(std::log(std::fabs(cross[best])));
        }
    }
    if (peak_t.size() >= 2) out.cross_envelope_rate = -fit_slope(peak_t, peak_log);
    return out;
}

}  // namespace exciton
