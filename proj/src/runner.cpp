#include "exciton/runner.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "exciton/beats.hpp"
#include "exciton/constants.hpp"
#include "exciton/emission.hpp"
#include "exciton/errors.hpp"
#include "exciton/scenario.hpp"
#include "exciton/segments.hpp"
#include "exciton/table.hpp"

#ifndef EXCITON_VERSION
#define EXCITON_VERSION "dev"
#endif

namespace exciton {

namespace {

using ojson = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Context {
    const RunConfig& config;
    const RunOptions& options;
    RunReport report;
    ojson summary = ojson::object();

    void write_table(const std::string& stem, const Table& table)
    {
        const bool csv = options.format == OutputFormat::csv;
        const fs::path path = options.out_dir / (stem + (csv ? ".csv" : ".json"));
        write_text_file(path, csv ? to_csv(table) : to_json(table).dump(1) + "\n");
        report.files.push_back(path);
    }

    void warn(const std::string& message)
    {
        if (std::find(report.warnings.begin(), report.warnings.end(), message) == report.warnings.end()) {
            report.warnings.push_back(message);
        }
    }

    void warn_flags(const std::string& where, Warnings w)
    {
        for (const auto& name : w.names()) warn(where + ": " + name);
    }
};

// Runs fn(i) for i in [0, count) on up to `threads` workers. Results must be
// written to per-index slots; the first exception is rethrown.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn fn)
{
    const auto workers = static_cast<std::size_t>(std::clamp(threads, 1, 64));
    if (workers == 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < count; i += workers) {
                try {
                    fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

ojson constants_json()
{
    return ojson{{"hbar_J_s", constants::hbar},
                 {"planck_J_s", constants::planck},
                 {"speed_of_light_m_s", constants::speed_of_light},
                 {"vacuum_permittivity_F_m", constants::vacuum_permittivity},
                 {"elementary_charge_C", constants::elementary_charge}};
}

ojson derived_json(const ChainSpec& spec)
{
    return ojson{{"coupling_J", coupling_j(spec)},
                 {"gamma_atom_per_s", atomic_decay_rate(spec)},
                 {"atomic_wavelength_m", atomic_wavelength(spec)},
                 {"chain_length_m", spec.length()},
                 {"magic_angle_rad", magic_angle()}};
}

void run_modes(Context& ctx)
{
    const ChainSpec& spec = ctx.config.chain;
    const double gamma_a = atomic_decay_rate(spec);
    Table table{{"k", "parity", "energy_J", "energy_shift_J", "dipole_ratio", "gamma_per_s", "gamma_ratio"}, {}};
    int bright = 0;
    for (const CollectiveMode& m : all_modes(spec)) {
        ctx.warn_flags("mode " + std::to_string(m.k), m.warnings);
        bright += m.parity == Parity::bright;
        table.add_row({std::int64_t{m.k}, std::string(to_string(m.parity)), m.energy, m.shift,
                       spec.dipole_mag > 0.0 ? norm(m.dipole) / spec.dipole_mag : 0.0, m.gamma,
                       gamma_a > 0.0 ? m.gamma / gamma_a : 0.0});
    }
    ctx.write_table("modes", table);
    ctx.summary["bright_modes"] = bright;
    ctx.summary["dark_modes"] = spec.n_sites - bright;
    if (spec.n_sites >= 3 && spec.dipole_mag > 0.0) {
        ctx.summary["gamma_1_over_gamma_3"] = damping_rate(spec, 1).value / damping_rate(spec, 3).value;
    }
}

void run_pattern(Context& ctx)
{
    const RunConfig& c = ctx.config;
    const ChainSpec& spec = c.chain;
    const int k = c.pattern_mode;
    if (c.pattern_radius < c.far_field_ratio * spec.length()) ctx.warn("pattern: near_field");
    const CollectiveMode mode = collective_mode(spec, k);
    ctx.warn_flags("pattern", mode.warnings);
    if (mode.parity == Parity::dark) ctx.warn("pattern: dark_mode");

    const auto samples = angular_pattern(spec, k, c.pattern_radius, c.pattern_angles);
    double peak = 0.0;
    for (const auto& s : samples) peak = std::max(peak, s.intensity);
    Table table{{"angle_rad", "intensity_W_m2", "normalized"}, {}};
    for (const auto& s : samples) {
        table.add_row({s.angle, s.intensity, peak > 0.0 ? s.intensity / peak : 0.0});
    }
    ctx.write_table("pattern", table);

    const double power = integrate_pattern(samples, c.pattern_radius);
    ctx.summary["mode"] = k;
    ctx.summary["radius_m"] = c.pattern_radius;
    ctx.summary["radiated_power_W"] = power;
    if (mode.gamma > 0.0) ctx.summary["power_over_energy_rate"] = power / (mode.energy * mode.gamma);
}

ojson beats_json(const BeatAnalysis& b)
{
    ojson env = ojson::array();
    for (const auto& e : b.envelopes) env.push_back({{"term", e.label}, {"rate_per_s", e.rate}});
    return ojson{{"oscillation_detected", b.oscillation_detected},
                 {"beat_period_s", b.beat_period},
                 {"zero_crossings", b.zero_crossings},
                 {"cross_envelope_rate_per_s", b.cross_envelope_rate},
                 {"envelopes", env}};
}

void run_trace(Context& ctx)
{
    const RunConfig& c = ctx.config;
    const SegmentLayout layout = decompose(parse_occupancy(c.occupancy), c.chain);
    const InitialState state = c.initial_state();
    ctx.warn_flags("layout", layout.warnings);

    Table segs{{"index", "first_site", "n_sites", "center_x_m", "energy_shift_J", "dipole_ratio", "gamma_per_s"}, {}};
    for (std::size_t i = 0; i < layout.segments.size(); ++i) {
        const Segment& s = layout.segments[i];
        const CollectiveMode& m = s.superradiant();
        segs.add_row({static_cast<std::int64_t>(i), std::int64_t{s.first_site}, std::int64_t{s.n_sites},
                      s.center.x, m.shift, c.chain.dipole_mag > 0.0 ? norm(m.dipole) / c.chain.dipole_mag : 0.0,
                      m.gamma});
    }
    ctx.write_table("segments", segs);

    ojson neighbours = ojson::array();
    for (std::size_t i = 0; i + 1 < layout.segments.size(); ++i) {
        const Segment& s1 = layout.segments[i];
        const Segment& s2 = layout.segments[i + 1];
        const SegmentCoupling coupling = segment_coupling(s1, s2);
        neighbours.push_back({{"pair", {i, i + 1}},
                              {"coupling_J", coupling.energy},
                              {"point_dipole_valid", coupling.point_dipole_valid},
                              {"resonance", to_string(resonance_check(s1, s2, c.linewidth_scale))}});
    }
    ctx.summary["segments"] = layout.segments.size();
    ctx.summary["neighbours"] = neighbours;

    const double gamma_a = atomic_decay_rate(c.chain);
    const std::size_t n_points = c.observation_points.size();
    std::vector<IntensityTrace> traces(n_points);
    std::vector<double> starts(n_points);
    parallel_for(n_points, ctx.options.threads, [&](std::size_t p) {
        const ObservationPoint obs{c.observation_points[p]};
        starts[p] = latest_arrival(layout, obs);
        const auto times = time_grid(starts[p], c.time_span_lifetimes / gamma_a, c.time_points);
        traces[p] = intensity_trace(layout, state, obs, times);
    });

    ojson points = ojson::array();
    for (std::size_t p = 0; p < n_points; ++p) {
        const IntensityTrace& tr = traces[p];
        const double i0 = tr.total.front();
        double max_len = 0.0;
        for (const Segment& s : layout.segments) max_len = std::max(max_len, s.length);
        for (const Segment& s : layout.segments) {
            if (norm(tr.observation.position - s.center) < c.far_field_ratio * max_len) {
                ctx.warn("observation " + std::to_string(p) + ": near_field");
            }
        }
        Table table;
        table.columns = {"time_s", "elapsed_s", "total", "normalized"};
        for (const auto& l : tr.labels) table.columns.push_back(l);
        for (std::size_t i = 0; i < tr.times.size(); ++i) {
            std::vector<Cell> row{tr.times[i], tr.times[i] - starts[p], tr.total[i],
                                  i0 != 0.0 ? tr.total[i] / i0 : 0.0};
            for (const auto& col : tr.terms) row.emplace_back(col[i]);
            table.add_row(std::move(row));
        }
        ctx.write_table("trace_p" + std::to_string(p), table);
        points.push_back({{"index", p},
                          {"position_m", {tr.observation.position.x, tr.observation.position.y, tr.observation.position.z}},
                          {"start_time_s", starts[p]},
                          {"initial_intensity_W_m2", i0},
                          {"beats", beats_json(beat_extract(tr))}});
    }
    ctx.summary["observations"] = points;
}

void run_scenario(Context& ctx)
{
    const RunConfig& c = ctx.config;
    const ChainSpec& spec = c.chain;
    const InitialState state = c.initial_state();
    if (state.segment_count() != 2) {
        throw DomainError("scenario-two-seg needs a two-segment state, configuration has " +
                          std::to_string(state.segment_count()));
    }
    const SegmentLayout layout = two_segment_layout(spec);
    ctx.warn_flags("layout", layout.warnings);
    const Resonance res = resonance_check(layout.segments[0], layout.segments[1], c.linewidth_scale);
    const double jbar = coupling_j(spec) / constants::hbar;
    ctx.summary["resonance"] = to_string(res);
    ctx.summary["coupling_J"] = coupling_j(spec);
    ctx.summary["expected_beat_period_s"] =
        jbar != 0.0 ? 2.0 * std::numbers::pi / std::fabs(jbar) : 0.0;

    const std::size_t n_points = c.observation_points.size();
    struct Result {
        IntensityTrace exact, far, engine;
    };
    std::vector<Result> results(n_points);
    parallel_for(n_points, ctx.options.threads, [&](std::size_t p) {
        const ObservationPoint obs{c.observation_points[p]};
        const auto times = two_segment_grid(spec, obs, c.time_points, c.time_span_lifetimes);
        results[p].exact = two_segment_trace(spec, obs, times, Zone::exact, state);
        results[p].far = two_segment_trace(spec, obs, times, Zone::far, state);
        results[p].engine = intensity_trace(layout, state, obs, times);
    });

    ojson points = ojson::array();
    for (std::size_t p = 0; p < n_points; ++p) {
        const Result& r = results[p];
        const double i0 = r.exact.total.front();
        const double start = r.exact.times.front();
        Table table{{"time_s", "elapsed_s", "exact_I_alpha", "exact_I_beta", "exact_G", "exact_total",
                     "far_I_alpha", "far_I_beta", "far_G", "far_total", "engine_total", "normalized"},
                    {}};
        double engine_dev = 0.0;
        for (std::size_t i = 0; i < r.exact.times.size(); ++i) {
            const double scale = r.exact.terms[0][i] + r.exact.terms[1][i];
            if (scale > 0.0) {
                engine_dev = std::max(engine_dev, std::fabs(r.engine.total[i] - r.exact.total[i]) / scale);
            }
            table.add_row({r.exact.times[i], r.exact.times[i] - start, r.exact.terms[0][i], r.exact.terms[1][i],
                           r.exact.terms[2][i], r.exact.total[i], r.far.terms[0][i], r.far.terms[1][i],
                           r.far.terms[2][i], r.far.total[i], r.engine.total[i],
                           i0 != 0.0 ? r.exact.total[i] / i0 : 0.0});
        }
        ctx.write_table("scenario_p" + std::to_string(p), table);
        const Vec3& pos = r.exact.observation.position;
        points.push_back({{"index", p},
                          {"position_m", {pos.x, pos.y, pos.z}},
                          {"start_time_s", start},
                          {"initial_intensity_W_m2", i0},
                          {"far_zone_deviation", far_zone_deviation(r.exact, r.far)},
                          {"engine_deviation", engine_dev},
                          {"beats_far_zone", beats_json(beat_extract(r.far))}});
    }
    ctx.summary["observations"] = points;
}

}  // namespace

std::optional<Command> parse_command(std::string_view name)
{
    if (name == "modes") return Command::modes;
    if (name == "pattern") return Command::pattern;
    if (name == "trace") return Command::trace;
    if (name == "scenario-two-seg") return Command::scenario_two_seg;
    return std::nullopt;
}

const char* to_string(Command c)
{
    switch (c) {
    case Command::modes: return "modes";
    case Command::pattern: return "pattern";
    case Command::trace: return "trace";
    case Command::scenario_two_seg: return "scenario-two-seg";
    }
    return "?";
}

bool RunReport::checks_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

RunReport run(const RunConfig& config, const RunOptions& options)
{
    std::error_code ec;
    fs::create_directories(options.out_dir, ec);
    if (ec) throw IoError("cannot create output directory " + options.out_dir.string() + ": " + ec.message());

    Context ctx{config, options, {}};
    for (const auto& n : config.notices) ctx.warn(n);

    switch (options.command) {
    case Command::modes: run_modes(ctx); break;
    case Command::pattern: run_pattern(ctx); break;
    case Command::trace: run_trace(ctx); break;
    case Command::scenario_two_seg: run_scenario(ctx); break;
    }

    if (options.check) ctx.report.checks = run_invariant_checks(config.chain);

    ojson manifest;
    manifest["software"] = {{"name", "exciton-chain"}, {"version", EXCITON_VERSION}};
    manifest["command"] = to_string(options.command);
    manifest["format"] = to_string(options.format);
    manifest["constants"] = constants_json();
    manifest["config"] = to_json(config);
    manifest["derived"] = derived_json(config.chain);
    ojson outputs = ojson::array();
    for (const auto& f : ctx.report.files) outputs.push_back(f.filename().string());
    manifest["outputs"] = outputs;
    manifest["summary"] = ctx.summary;
    if (options.check) {
        ojson checks = ojson::array();
        for (const auto& ch : ctx.report.checks) {
            checks.push_back({{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
        }
        manifest["checks"] = checks;
    }
    manifest["warnings"] = ctx.report.warnings;

    const fs::path manifest_path = options.out_dir / "manifest.json";
    write_text_file(manifest_path, manifest.dump(2) + "\n");
    ctx.report.files.push_back(manifest_path);
    return ctx.report;
}

}  // namespace exciton
