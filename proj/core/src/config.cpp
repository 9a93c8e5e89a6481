#include "optobec/config.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include "optobec/constants.hpp"

namespace optobec {

namespace {

struct UnitRule {
    const char* suffix;
    double factor;
};

// Hz-family values are ordinary frequencies and convert to angular units.
constexpr UnitRule unit_rules[] = {
    {"GHz", constants::two_pi * 1e9},
    {"MHz", constants::two_pi * 1e6},
    {"kHz", constants::two_pi * 1e3},
    {"Hz", constants::two_pi},
    {"rad/s", 1.0},
    {"nK", 1e-9}, {"uK", 1e-6}, {"mK", 1e-3}, {"K", 1.0},
    {"nm", 1e-9}, {"um", 1e-6}, {"mm", 1e-3}, {"m", 1.0},
    {"uW", 1e-6}, {"mW", 1e-3}, {"W", 1.0},
    {"pg", 1e-15}, {"ng", 1e-12}, {"g", 1e-3}, {"kg", 1.0},
};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return {};
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

using Setter = std::function<void(SystemParams&, double)>;
using Getter = std::function<double(const SystemParams&)>;

double require(const std::optional<double>& v, const char* name) {
    if (!v) throw MissingField(std::string(name) + " is not set");
    return *v;
}

void clear_detunings(SystemParams& p) {
    p.delta.reset();
    p.delta_o.reset();
    p.delta_c.reset();
}

const std::map<std::string, std::pair<Setter, Getter>>& field_table() {
    static const std::map<std::string, std::pair<Setter, Getter>> table = {
        {"cavity_length", {[](SystemParams& p, double v) { p.cavity_length = v; },
                           [](const SystemParams& p) { return p.cavity_length; }}},
        {"wavelength", {[](SystemParams& p, double v) { p.wavelength = v; },
                        [](const SystemParams& p) { return p.wavelength; }}},
        {"finesse", {[](SystemParams& p, double v) { p.finesse = v; p.cavity_decay.reset(); },
                     [](const SystemParams& p) { return require(p.finesse, "finesse"); }}},
        {"cavity_decay", {[](SystemParams& p, double v) { p.cavity_decay = v; p.finesse.reset(); },
                          [](const SystemParams& p) { return require(p.cavity_decay, "cavity_decay"); }}},
        {"power", {[](SystemParams& p, double v) { p.power = v; },
                   [](const SystemParams& p) { return p.power; }}},
        {"mirror_freq", {[](SystemParams& p, double v) { p.mirror_freq = v; },
                         [](const SystemParams& p) { return p.mirror_freq; }}},
        {"mirror_damping", {[](SystemParams& p, double v) { p.mirror_damping = v; },
                            [](const SystemParams& p) { return p.mirror_damping; }}},
        {"mirror_mass", {[](SystemParams& p, double v) { p.mirror_mass = v; },
                         [](const SystemParams& p) { return require(p.mirror_mass, "mirror_mass"); }}},
        {"temperature", {[](SystemParams& p, double v) { p.temperature = v; },
                         [](const SystemParams& p) { return p.temperature; }}},
        {"atom_freq", {[](SystemParams& p, double v) { p.atom_freq = v; p.atom_mass.reset(); },
                       [](const SystemParams& p) { return require(p.atom_freq, "atom_freq"); }}},
        {"atom_mass", {[](SystemParams& p, double v) { p.atom_mass = v; p.atom_freq.reset(); },
                       [](const SystemParams& p) { return require(p.atom_mass, "atom_mass"); }}},
        {"zeta_mc", {[](SystemParams& p, double v) { p.zeta_mc = v; },
                     [](const SystemParams& p) { return require(p.zeta_mc, "zeta_mc"); }}},
        {"zeta_ac", {[](SystemParams& p, double v) { p.zeta_ac = v; },
                     [](const SystemParams& p) { return require(p.zeta_ac, "zeta_ac"); }}},
        {"atom_number", {[](SystemParams& p, double v) { p.atom_number = v; },
                         [](const SystemParams& p) { return require(p.atom_number, "atom_number"); }}},
        {"lattice_depth_per_photon",
         {[](SystemParams& p, double v) { p.lattice_depth_per_photon = v; },
          [](const SystemParams& p) {
              return require(p.lattice_depth_per_photon, "lattice_depth_per_photon");
          }}},
        {"delta", {[](SystemParams& p, double v) { clear_detunings(p); p.delta = v; },
                   [](const SystemParams& p) { return require(p.delta, "delta"); }}},
        {"delta_o", {[](SystemParams& p, double v) { clear_detunings(p); p.delta_o = v; },
                     [](const SystemParams& p) { return require(p.delta_o, "delta_o"); }}},
        {"delta_c", {[](SystemParams& p, double v) { clear_detunings(p); p.delta_c = v; },
                     [](const SystemParams& p) { return require(p.delta_c, "delta_c"); }}},
        {"cavity_freq", {[](SystemParams& p, double v) { p.cavity_freq = v; },
                         [](const SystemParams& p) { return require(p.cavity_freq, "cavity_freq"); }}},
        {"atom_damping", {[](SystemParams& p, double v) { p.atom_damping = v; },
                          [](const SystemParams& p) { return p.atom_damping; }}},
        {"delta_over_omega_m",
         {[](SystemParams& p, double v) { clear_detunings(p); p.delta = v * p.mirror_freq; },
          [](const SystemParams& p) { return require(p.delta, "delta") / p.mirror_freq; }}},
    };
    return table;
}

} // namespace

double parse_quantity(const std::string& text) {
    const std::string s = trim(text);
    if (s.empty()) throw ConfigParseError("empty value");

    size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw ConfigParseError("not a number: '" + s + "'");
    }
    const std::string suffix = trim(s.substr(pos));
    if (suffix.empty()) return value;
    for (const auto& rule : unit_rules) {
        if (suffix == rule.suffix) return value * rule.factor;
    }
    throw ConfigParseError("unknown unit suffix '" + suffix + "'");
}

void set_param(SystemParams& params, const std::string& name, double value) {
    const auto& table = field_table();
    auto it = table.find(name);
    if (it == table.end()) throw UnknownParameter("unknown parameter '" + name + "'");
    it->second.first(params, value);
}

double get_param(const SystemParams& params, const std::string& name) {
    const auto& table = field_table();
    auto it = table.find(name);
    if (it == table.end()) throw UnknownParameter("unknown parameter '" + name + "'");
    return it->second.second(params);
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoFailure("cannot open config file '" + path + "'");

    std::map<std::string, std::string> pairs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const size_t eq = body.find('=');
        if (eq == std::string::npos)
            throw ConfigParseError(path + ":" + std::to_string(lineno) +
                                   ": expected 'key = value'");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigParseError(path + ":" + std::to_string(lineno) +
                                   ": expected 'key = value'");
        pairs[key] = value;
    }
    return pairs;
}

void apply_config_file(SystemParams& params, const std::string& path) {
    const auto pairs = parse_config_file(path);
    // delta_over_omega_m needs mirror_freq, so apply it after everything else
    for (const auto& [key, value] : pairs) {
        if (key == "delta_over_omega_m") continue;
        set_param(params, key, parse_quantity(value));
    }
    auto it = pairs.find("delta_over_omega_m");
    if (it != pairs.end())
        set_param(params, it->first, parse_quantity(it->second));
}

} // namespace optobec
