#include "exciton/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "exciton/constants.hpp"
#include "exciton/errors.hpp"

namespace exciton {

namespace {

using json = nlohmann::json;
using std::numbers::pi;

enum class Dimension { energy, length, dipole, angle };

const char* dimension_name(Dimension d)
{
    switch (d) {
    case Dimension::energy: return "energy";
    case Dimension::length: return "length";
    case Dimension::dipole: return "dipole moment";
    case Dimension::angle: return "angle";
    }
    return "?";
}

struct UnitEntry {
    Dimension dim;
    double scale;  // SI per unit; 0 marks the lattice-constant unit
};

const std::map<std::string, UnitEntry>& unit_table()
{
    static const std::map<std::string, UnitEntry> table = {
        {"J", {Dimension::energy, 1.0}},
        {"eV", {Dimension::energy, units::electron_volt}},
        {"meV", {Dimension::energy, 1e-3 * units::electron_volt}},
        {"m", {Dimension::length, 1.0}},
        {"um", {Dimension::length, 1e-6}},
        {"nm", {Dimension::length, 1e-9}},
        {"angstrom", {Dimension::length, units::angstrom}},
        {"A", {Dimension::length, units::angstrom}},
        {"a", {Dimension::length, 0.0}},
        {"C*m", {Dimension::dipole, 1.0}},
        {"e*angstrom", {Dimension::dipole, units::e_angstrom}},
        {"eA", {Dimension::dipole, units::e_angstrom}},
        {"debye", {Dimension::dipole, 1e-21 / constants::speed_of_light}},
        {"rad", {Dimension::angle, 1.0}},
        {"deg", {Dimension::angle, units::degree}},
    };
    return table;
}

// Walks one JSON object and rejects keys nobody asked for.
class Section {
public:
    Section(const json& value, std::string path) : value_(value), path_(std::move(path))
    {
        if (!value_.is_object()) throw ConfigError(path_, "expected an object");
    }

    const json* find(const std::string& key)
    {
        used_.insert(key);
        const auto it = value_.find(key);
        return it == value_.end() ? nullptr : &*it;
    }

    std::string path(const std::string& key) const
    {
        return path_.empty() ? key : path_ + "." + key;
    }

    void finish() const
    {
        for (auto it = value_.begin(); it != value_.end(); ++it) {
            if (!used_.count(it.key())) throw ConfigError(path(it.key()), "unknown key");
        }
    }

private:
    const json& value_;
    std::string path_;
    std::set<std::string> used_;
};

double parse_quantity(const json& value, Dimension dim, const std::string& path,
                      double lattice_const = 0.0)
{
    if (value.is_number()) return value.get<double>();
    if (!value.is_string()) throw ConfigError(path, "expected a number or a \"<value> <unit>\" string");
    const std::string text = value.get<std::string>();
    if (dim == Dimension::angle && text == "magic") return magic_angle();

    std::istringstream in(text);
    std::string number;
    std::string unit;
    std::string extra;
    in >> number >> unit >> extra;
    if (number.empty() || !extra.empty()) throw ConfigError(path, "cannot parse quantity '" + text + "'");
    char* end = nullptr;
    const double magnitude = std::strtod(number.c_str(), &end);
    if (end == number.c_str() || *end != '\0') {
        throw ConfigError(path, "cannot parse number in '" + text + "'");
    }
    if (unit.empty()) return magnitude;

    const auto it = unit_table().find(unit);
    if (it == unit_table().end()) throw ConfigError(path, "unknown unit '" + unit + "'");
    if (it->second.dim != dim) {
        throw ConfigError(path, "unit '" + unit + "' is a " + dimension_name(it->second.dim) +
                                    " unit, expected " + dimension_name(dim));
    }
    if (it->second.scale == 0.0) {
        if (lattice_const <= 0.0) throw ConfigError(path, "lattice-constant unit 'a' not allowed here");
        return magnitude * lattice_const;
    }
    return magnitude * it->second.scale;
}

int parse_int(const json& value, const std::string& path)
{
    if (!value.is_number_integer()) throw ConfigError(path, "expected an integer");
    return value.get<int>();
}

double parse_number(const json& value, const std::string& path)
{
    if (!value.is_number()) throw ConfigError(path, "expected a number");
    return value.get<double>();
}

std::string parse_string(const json& value, const std::string& path)
{
    if (!value.is_string()) throw ConfigError(path, "expected a string");
    return value.get<std::string>();
}

void require(bool ok, const std::string& path, const std::string& message)
{
    if (!ok) throw ConfigError(path, message);
}

void parse_chain(Section& s, ChainSpec& chain)
{
    if (const json* v = s.find("n_sites")) chain.n_sites = parse_int(*v, s.path("n_sites"));
    if (const json* v = s.find("lattice_const")) {
        chain.lattice_const = parse_quantity(*v, Dimension::length, s.path("lattice_const"));
    }
    if (const json* v = s.find("atom_energy")) {
        chain.atom_energy = parse_quantity(*v, Dimension::energy, s.path("atom_energy"));
    }
    if (const json* v = s.find("dipole_mag")) {
        chain.dipole_mag = parse_quantity(*v, Dimension::dipole, s.path("dipole_mag"));
    }
    if (const json* v = s.find("dipole_angle")) {
        chain.dipole_angle = parse_quantity(*v, Dimension::angle, s.path("dipole_angle"));
    }
    s.finish();
    require(chain.n_sites >= 1, s.path("n_sites"), "must be >= 1");
    require(chain.lattice_const > 0.0 && std::isfinite(chain.lattice_const), s.path("lattice_const"),
            "must be positive");
    require(chain.atom_energy > 0.0 && std::isfinite(chain.atom_energy), s.path("atom_energy"),
            "must be positive");
    require(chain.dipole_mag >= 0.0 && std::isfinite(chain.dipole_mag), s.path("dipole_mag"),
            "must be non-negative");
    // Tolerate the rounding of "90 deg".
    if (chain.dipole_angle > pi / 2 && chain.dipole_angle <= pi / 2 * (1 + 1e-15)) {
        chain.dipole_angle = pi / 2;
    }
    require(chain.dipole_angle >= 0.0 && chain.dipole_angle <= pi / 2, s.path("dipole_angle"),
            "must lie in [0, 90 deg]");
}

std::vector<StateEntry> symmetric_entries(int segments)
{
    std::vector<StateEntry> out;
    const InitialState state = InitialState::symmetric_single_excitation(segments);
    for (const StateComponent& c : state.components()) {
        std::string occ;
        for (int n : c.occupation) occ.push_back(static_cast<char>('0' + n));
        out.push_back({occ, c.amplitude});
    }
    return out;
}

void parse_state(Section& s, RunConfig& config, int segments)
{
    const json* amps = s.find("amplitudes");
    s.finish();
    if (!amps) {
        config.state = symmetric_entries(segments);
        return;
    }
    const std::string base = s.path("amplitudes");
    require(amps->is_array() && !amps->empty(), base, "expected a non-empty array");

    std::vector<StateEntry> entries;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < amps->size(); ++i) {
        Section e((*amps)[i], base + "[" + std::to_string(i) + "]");
        StateEntry entry;
        const json* occ = e.find("occupation");
        require(occ != nullptr, e.path("occupation"), "missing");
        entry.occupation = parse_string(*occ, e.path("occupation"));
        double re = 0.0;
        double im = 0.0;
        if (const json* v = e.find("re")) re = parse_number(*v, e.path("re"));
        if (const json* v = e.find("im")) im = parse_number(*v, e.path("im"));
        e.finish();
        require(static_cast<int>(entry.occupation.size()) == segments, e.path("occupation"),
                "needs one digit per segment (" + std::to_string(segments) + ")");
        require(entry.occupation.find_first_not_of("01") == std::string::npos, e.path("occupation"),
                "may only contain '0' and '1'");
        require(seen.insert(entry.occupation).second, e.path("occupation"), "repeated basis vector");
        entry.amplitude = {re, im};
        entries.push_back(entry);
    }
    double norm_sq = 0.0;
    for (const StateEntry& e : entries) norm_sq += std::norm(e.amplitude);
    require(norm_sq > 0.0, base, "state has zero norm");
    if (std::fabs(norm_sq - 1.0) > 1e-6) {
        config.notices.push_back("state.amplitudes: normalised (norm^2 was " + std::to_string(norm_sq) + ")");
    }
    // Leave already-normalised input untouched so the canonical form is a fixed point.
    if (std::fabs(norm_sq - 1.0) > 1e-14) {
        const double scale = 1.0 / std::sqrt(norm_sq);
        for (StateEntry& e : entries) e.amplitude *= scale;
    }
    config.state = std::move(entries);
}

Vec3 parse_point(const json& value, const std::string& path, double a)
{
    require(value.is_array() && value.size() == 3, path, "expected [x, y, z]");
    return {parse_quantity(value[0], Dimension::length, path + "[0]", a),
            parse_quantity(value[1], Dimension::length, path + "[1]", a),
            parse_quantity(value[2], Dimension::length, path + "[2]", a)};
}

}  // namespace

const char* to_string(OutputFormat f)
{
    return f == OutputFormat::csv ? "csv" : "json";
}

InitialState RunConfig::initial_state() const
{
    std::vector<std::pair<std::string, std::complex<double>>> comps;
    for (const StateEntry& e : state) comps.emplace_back(e.occupation, e.amplitude);
    return InitialState::from_strings(comps);
}

RunConfig default_config()
{
    RunConfig c;
    const double a = c.chain.lattice_const;
    c.observation_points = {Vec3{0.0, 0.0, 100.0 * a}};
    c.pattern_radius = 1000.0 * a;
    c.state = symmetric_entries(2);
    return c;
}

RunConfig parse_config(const std::string& text)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("", std::string("parse error: ") + e.what());
    }

    RunConfig config = default_config();
    Section top(root, "");
    const json* chain = top.find("chain");
    const json* layout = top.find("layout");
    const json* state = top.find("state");
    const json* observation = top.find("observation");
    const json* time = top.find("time");
    const json* pattern = top.find("pattern");
    const json* physics = top.find("physics");
    const json* output = top.find("output");
    top.finish();

    if (chain) {
        Section s(*chain, "chain");
        parse_chain(s, config.chain);
    }
    const double a = config.chain.lattice_const;
    config.observation_points = {Vec3{0.0, 0.0, 100.0 * a}};
    config.pattern_radius = 1000.0 * a;

    if (layout) {
        Section s(*layout, "layout");
        if (const json* v = s.find("occupancy")) config.occupancy = parse_string(*v, s.path("occupancy"));
        s.finish();
    }
    int segments = 0;
    try {
        segments = static_cast<int>(decompose(parse_occupancy(config.occupancy), config.chain).segments.size());
    } catch (const DomainError& e) {
        throw ConfigError("layout.occupancy", e.what());
    }

    if (state) {
        Section s(*state, "state");
        parse_state(s, config, segments);
    } else {
        config.state = symmetric_entries(segments);
    }

    if (observation) {
        Section s(*observation, "observation");
        if (const json* v = s.find("points")) {
            require(v->is_array() && !v->empty(), s.path("points"), "expected a non-empty array");
            config.observation_points.clear();
            for (std::size_t i = 0; i < v->size(); ++i) {
                const std::string p = s.path("points") + "[" + std::to_string(i) + "]";
                const Vec3 point = parse_point((*v)[i], p, a);
                require(is_finite(point), p, "must be finite");
                config.observation_points.push_back(point);
            }
        }
        s.finish();
    }

    if (time) {
        Section s(*time, "time");
        if (const json* v = s.find("points")) config.time_points = parse_int(*v, s.path("points"));
        if (const json* v = s.find("span_lifetimes")) {
            config.time_span_lifetimes = parse_number(*v, s.path("span_lifetimes"));
        }
        s.finish();
        require(config.time_points >= 2, s.path("points"), "must be >= 2");
        require(config.time_span_lifetimes > 0.0, s.path("span_lifetimes"), "must be positive");
    }

    if (pattern) {
        Section s(*pattern, "pattern");
        if (const json* v = s.find("mode")) config.pattern_mode = parse_int(*v, s.path("mode"));
        if (const json* v = s.find("radius")) {
            config.pattern_radius = parse_quantity(*v, Dimension::length, s.path("radius"), a);
        }
        if (const json* v = s.find("n_angles")) config.pattern_angles = parse_int(*v, s.path("n_angles"));
        s.finish();
    }
    require(config.pattern_mode >= 1 && config.pattern_mode <= config.chain.n_sites, "pattern.mode",
            "must lie in 1..chain.n_sites");
    require(config.pattern_radius > 0.0, "pattern.radius", "must be positive");
    require(config.pattern_angles >= 3 && config.pattern_angles % 2 == 1, "pattern.n_angles",
            "must be odd and >= 3");

    if (physics) {
        Section s(*physics, "physics");
        if (const json* v = s.find("far_field_ratio")) {
            config.far_field_ratio = parse_number(*v, s.path("far_field_ratio"));
        }
        if (const json* v = s.find("linewidth_scale")) {
            config.linewidth_scale = parse_number(*v, s.path("linewidth_scale"));
        }
        s.finish();
        require(config.far_field_ratio > 0.0, s.path("far_field_ratio"), "must be positive");
        require(config.linewidth_scale >= 0.0, s.path("linewidth_scale"), "must be non-negative");
    }

    if (output) {
        Section s(*output, "output");
        if (const json* v = s.find("dir")) config.output_dir = parse_string(*v, s.path("dir"));
        if (const json* v = s.find("format")) {
            const std::string f = parse_string(*v, s.path("format"));
            if (f == "csv") {
                config.format = OutputFormat::csv;
            } else if (f == "json") {
                config.format = OutputFormat::json;
            } else {
                throw ConfigError(s.path("format"), "expected \"csv\" or \"json\"");
            }
        }
        s.finish();
        require(!config.output_dir.empty(), "output.dir", "must not be empty");
    }
    return config;
}

RunConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

nlohmann::ordered_json to_json(const RunConfig& c)
{
    using ojson = nlohmann::ordered_json;
    ojson j;
    j["chain"] = {{"n_sites", c.chain.n_sites},
                  {"lattice_const", c.chain.lattice_const},
                  {"atom_energy", c.chain.atom_energy},
                  {"dipole_mag", c.chain.dipole_mag},
                  {"dipole_angle", c.chain.dipole_angle}};
    j["layout"] = {{"occupancy", c.occupancy}};
    ojson amps = ojson::array();
    for (const StateEntry& e : c.state) {
        amps.push_back({{"occupation", e.occupation}, {"re", e.amplitude.real()}, {"im", e.amplitude.imag()}});
    }
    j["state"] = {{"amplitudes", amps}};
    ojson points = ojson::array();
    for (const Vec3& p : c.observation_points) points.push_back({p.x, p.y, p.z});
    j["observation"] = {{"points", points}};
    j["time"] = {{"points", c.time_points}, {"span_lifetimes", c.time_span_lifetimes}};
    j["pattern"] = {{"mode", c.pattern_mode}, {"radius", c.pattern_radius}, {"n_angles", c.pattern_angles}};
    j["physics"] = {{"far_field_ratio", c.far_field_ratio}, {"linewidth_scale", c.linewidth_scale}};
    j["output"] = {{"dir", c.output_dir}, {"format", to_string(c.format)}};
    return j;
}

std::string serialize_config(const RunConfig& config)
{
    return to_json(config).dump(2) + "\n";
}

}  // namespace exciton
