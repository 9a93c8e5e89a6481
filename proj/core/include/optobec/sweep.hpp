#pragma once

#include <optional>
#include <string>
#include <vector>

#include "optobec/gaussian.hpp"
#include "optobec/params.hpp"
#include "optobec/steadystate.hpp"

namespace optobec {

struct SweepAxis {
    std::string param;           // SystemParams field name or delta_over_omega_m
    std::vector<double> values;  // strictly monotone, non-empty
    bool log_scale = false;      // presentation hint for plots
};

/// Ties one parameter to another before each evaluation, e.g.
/// zeta_ac = 0.7 * zeta_mc.
struct DerivedLink {
    std::string target;
    double factor = 1.0;
    std::string source;
};

struct SweepSpec {
    SystemParams base;
    SweepAxis axis1;
    std::optional<SweepAxis> axis2;
    std::vector<DerivedLink> links;
    std::vector<std::string> outputs;  // empty = all quantity columns
    SignConvention sign = SignConvention::Derived;
};

/// One evaluated grid point. Entanglement cells are empty (nullopt) whenever
/// they were not computed: unstable point, pipeline error, or a partition
/// touching a mode that is exactly decoupled at this point.
struct PointResult {
    std::optional<double> axis1_value;
    std::optional<double> axis2_value;
    std::string stability;  // "stable", "marginal" or "unstable"
    double max_real_part = 0.0;
    double c_s = 0.0;
    std::optional<double> e_mc, e_ac, e_ma;
    std::optional<double> eps_mc, eps_ac, eps_ma;
    std::optional<double> nu_min;
    std::string error;  // failing pipeline stage, empty on success

    bool stable() const { return stability == "stable" && error.empty(); }
};

struct SweepResult {
    std::string axis1_name;
    std::optional<std::string> axis2_name;
    std::vector<std::string> outputs;
    std::vector<PointResult> rows;  // axis2-major order
    size_t axis1_size = 0;
    size_t axis2_size = 1;
    bool axis1_log = false;
    bool axis2_log = false;
};

/// Full pipeline for a single parameter point: derive constants, mean field,
/// drift/diffusion, stability, Lyapunov, three reductions, negativities.
/// Unstable points short-circuit after the stability verdict. A mechanical or
/// atomic mode whose effective coupling is exactly zero has no damping channel
/// and renders the 6x6 system marginal; such a mode is removed and the
/// remaining subsystem is solved, as the reference temperature/zero-coupling
/// curves require. With every coupling zero the marginal verdict is reported
/// as such.
PointResult run_point(const SystemParams& params,
                      SignConvention sign = SignConvention::Derived);

/// Evaluate run_point over the grid, applying derived links before each
/// evaluation. Per-point failures are recorded in-row and never abort the
/// sweep. Row order is axis2-major and deterministic.
SweepResult run_sweep(const SweepSpec& spec);

} // namespace optobec
