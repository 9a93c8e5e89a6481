#pragma once

#include <map>
#include <string>

#include "optobec/params.hpp"

namespace optobec {

/// Parse "<number> [unit]" into the library's internal units: frequencies to
/// rad/s (an Hz-family suffix multiplies by 2 pi; the paper mixes the two
/// conventions), lengths to m, temperatures to K, powers to W, masses to kg.
/// A bare number passes through unchanged.
double parse_quantity(const std::string& text);

/// Set a SystemParams field by its config/CLI name. "delta_over_omega_m"
/// sets delta = value * mirror_freq; assigning any detuning variant clears
/// the other two. Throws UnknownParameter for names outside the field set.
void set_param(SystemParams& params, const std::string& name, double value);

/// Read a field by name (optionals that are unset throw MissingField).
double get_param(const SystemParams& params, const std::string& name);

/// Flat "key = value" file, '#' comments. Returns raw key/value text pairs
/// in file order.
std::map<std::string, std::string> parse_config_file(const std::string& path);

/// Parse + apply every key of a config file onto params.
void apply_config_file(SystemParams& params, const std::string& path);

} // namespace optobec
