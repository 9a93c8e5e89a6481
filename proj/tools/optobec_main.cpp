#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "optobec/config.hpp"
#include "optobec/constants.hpp"
#include "optobec/csv.hpp"
#include "optobec/dynamics.hpp"
#include "optobec/gaussian.hpp"
#include "optobec/meanfield.hpp"
#include "optobec/presets.hpp"
#include "optobec/random_states.hpp"
#include "optobec/steadystate.hpp"
#include "optobec/svg.hpp"
#include "optobec/sweep.hpp"

namespace {

using namespace optobec;

const std::vector<std::string> field_names = {
    "cavity_length", "wavelength", "finesse", "cavity_decay", "power",
    "mirror_freq", "mirror_damping", "mirror_mass", "temperature",
    "atom_freq", "atom_mass", "zeta_mc", "zeta_ac", "atom_number",
    "lattice_depth_per_photon", "delta", "delta_o", "delta_c",
    "cavity_freq", "atom_damping", "delta_over_omega_m"};

struct CommonOpts {
    std::string config;
    std::map<std::string, std::string> fields;
    std::string out_dir = ".";
    std::string format = "csv";
    std::string sign = "derived";
    bool strict = false;
};

void add_field_flags(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config, "key = value parameter file");
    for (const auto& name : field_names) {
        cmd->add_option_function<std::string>(
            "--" + name,
            [&opts, name](const std::string& v) { opts.fields[name] = v; },
            "set " + name + " (value with optional unit suffix)");
    }
}

SystemParams build_params(const CommonOpts& opts) {
    SystemParams p;
    if (!opts.config.empty()) apply_config_file(p, opts.config);
    for (const auto& [key, value] : opts.fields) {
        if (key == "delta_over_omega_m") continue;
        set_param(p, key, parse_quantity(value));
    }
    auto it = opts.fields.find("delta_over_omega_m");
    if (it != opts.fields.end()) set_param(p, it->first, parse_quantity(it->second));
    return p;
}

SignConvention sign_of(const CommonOpts& opts) {
    if (opts.sign == "paper") return SignConvention::Paper;
    if (opts.sign == "derived") return SignConvention::Derived;
    throw ConfigParseError("--sign-convention must be 'paper' or 'derived'");
}

SweepAxis parse_axis(const std::string& text) {
    std::vector<std::string> tok;
    std::stringstream ss(text);
    std::string t;
    while (std::getline(ss, t, ':')) tok.push_back(t);
    if (tok.size() < 3) throw ConfigParseError("axis format: param:lin|log:LO:HI:N or param:list:v1,v2,...");
    SweepAxis axis;
    axis.param = tok[0];
    if (tok[1] == "list") {
        std::stringstream vs(tok[2]);
        std::string v;
        while (std::getline(vs, v, ',')) axis.values.push_back(parse_quantity(v));
    } else if (tok[1] == "lin" || tok[1] == "log") {
        if (tok.size() != 5) throw ConfigParseError("axis format: param:lin|log:LO:HI:N");
        const double lo = parse_quantity(tok[2]);
        const double hi = parse_quantity(tok[3]);
        const int n = std::stoi(tok[4]);
        if (n < 1) throw ConfigParseError("axis needs at least one point");
        axis.log_scale = tok[1] == "log";
        for (int i = 0; i < n; ++i) {
            const double f = n == 1 ? 0.0 : double(i) / double(n - 1);
            axis.values.push_back(axis.log_scale
                                      ? std::pow(10.0, std::log10(lo) + f * (std::log10(hi) - std::log10(lo)))
                                      : lo + f * (hi - lo));
        }
    } else {
        throw ConfigParseError("axis scale must be lin, log or list");
    }
    return axis;
}

DerivedLink parse_link(const std::string& text) {
    // target=FACTOR*source
    const auto eq = text.find('=');
    const auto star = text.find('*', eq == std::string::npos ? 0 : eq);
    if (eq == std::string::npos || star == std::string::npos)
        throw ConfigParseError("link format: target=FACTOR*source");
    DerivedLink link;
    link.target = text.substr(0, eq);
    link.factor = std::stod(text.substr(eq + 1, star - eq - 1));
    link.source = text.substr(star + 1);
    return link;
}

int write_outputs(const SweepResult& result, const CommonOpts& opts,
                  const std::string& stem, const std::vector<std::string>& svg_quantities) {
    std::filesystem::create_directories(opts.out_dir);
    const std::string base = opts.out_dir + "/" + stem;
    if (opts.format == "csv" || opts.format == "both")
        emit_csv(result, base + ".csv");
    if (opts.format == "svg" || opts.format == "both") {
        const bool grid = result.axis2_name && result.axis2_size > 2;
        if (grid) {
            for (const auto& q : svg_quantities)
                emit_svg(result, q, base + "_" + q + ".svg");
        } else {
            emit_svg(result, svg_quantities, base + ".svg");
        }
    }
    if (opts.strict) {
        for (const auto& row : result.rows)
            if (!row.error.empty()) {
                std::cerr << "point error: " << row.error << "\n";
                return 1;
            }
    }
    return 0;
}

SweepResult single_point_result(const SystemParams& p, SignConvention sign) {
    SweepResult r;
    r.axis1_name = "point";
    r.axis1_size = 1;
    PointResult row = run_point(p, sign);
    row.axis1_value = 0.0;
    r.rows.push_back(row);
    return r;
}

int run_validate();

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"steady-state entanglement of a driven cavity coupled to a "
                 "vibrating mirror and a BEC collective mode"};
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_option("--out", opts.out_dir, "output directory")->capture_default_str();
    app.add_option("--format", opts.format, "csv|svg|both")->capture_default_str();
    app.add_option("--sign-convention", opts.sign, "paper|derived")->capture_default_str();
    app.add_flag("--strict", opts.strict, "exit 1 on any per-point pipeline error");

    auto* point_cmd = app.add_subcommand("point", "evaluate a single parameter point");
    add_field_flags(point_cmd, opts);

    auto* sweep_cmd = app.add_subcommand("sweep", "run a parameter sweep");
    add_field_flags(sweep_cmd, opts);
    std::string axis1_text, axis2_text;
    std::vector<std::string> link_texts;
    sweep_cmd->add_option("--axis1", axis1_text, "param:lin|log:LO:HI:N or param:list:v1,v2,...")
        ->required();
    sweep_cmd->add_option("--axis2", axis2_text, "optional second axis");
    sweep_cmd->add_option("--link", link_texts, "derived link target=FACTOR*source");

    auto* preset_cmd = app.add_subcommand("preset", "run a stored figure preset");
    std::string preset_id;
    preset_cmd->add_option("id", preset_id, "figure id (fig1a..fig3)")->required();

    auto* validate_cmd = app.add_subcommand("validate", "run the invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (point_cmd->parsed()) {
            const auto result = single_point_result(build_params(opts), sign_of(opts));
            emit_csv(result, std::cout);
            if (opts.strict && !result.rows.front().error.empty()) return 1;
            return 0;
        }
        if (sweep_cmd->parsed()) {
            SweepSpec spec;
            spec.base = build_params(opts);
            spec.sign = sign_of(opts);
            spec.axis1 = parse_axis(axis1_text);
            if (!axis2_text.empty()) spec.axis2 = parse_axis(axis2_text);
            for (const auto& text : link_texts) spec.links.push_back(parse_link(text));
            return write_outputs(run_sweep(spec), opts, "sweep",
                                 {"E_mc", "E_ac", "E_ma"});
        }
        if (preset_cmd->parsed()) {
            SweepSpec spec = preset(preset_id);
            spec.sign = sign_of(opts);
            static const std::map<std::string, std::vector<std::string>> quantities = {
                {"fig1a", {"E_mc"}}, {"fig1b", {"E_ac"}}, {"fig1c", {"E_ma"}},
                {"fig2a", {"E_mc"}}, {"fig2b", {"E_ac"}}, {"fig2b_caption", {"E_ac"}},
                {"fig2b_text", {"E_ac"}}, {"fig2c", {"E_ma"}},
                {"fig3", {"E_mc", "E_ac", "E_ma"}}};
            return write_outputs(run_sweep(spec), opts, preset_id, quantities.at(preset_id));
        }
        if (validate_cmd->parsed()) return run_validate();
    } catch (const optobec::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return opts.strict ? 1 : 1;
    }
    return 0;
}

namespace {

int run_validate() {
    using namespace optobec;
    int failures = 0;
    auto check = [&](bool ok, const std::string& name) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    std::mt19937_64 rng(12345);

    // negativity: determinant route vs PPT eigenvalue route, and Simon verdict
    {
        bool dual = true, simon = true;
        for (int i = 0; i < 300; ++i) {
            const Eigen::MatrixXd v = random_physical_covariance(rng, 2);
            const Mat4 vr = v;
            if (std::abs(ppt_epsilon(vr) - ppt_epsilon_eig(vr)) > 1e-9) dual = false;
            if (simon_criterion(vr) != (log_negativity(vr).log_negativity > 0.0))
                simon = false;
        }
        check(dual, "epsilon determinant route matches PPT eigen route (300 states)");
        check(simon, "Simon criterion matches E_N > 0 (300 states)");
    }

    // Lyapunov residual + physicality on stable random systems
    {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        bool resid_ok = true, phys_ok = true;
        int accepted = 0;
        while (accepted < 60) {
            SystemParams p;
            p.cavity_length = 1e-3;
            p.wavelength = 1e-6;
            p.finesse = 1.07e4;
            p.power = 50e-3;
            p.mirror_freq = optobec::constants::two_pi * 1e7;
            p.mirror_damping = optobec::constants::two_pi * 100.0;
            p.temperature = u(rng);
            p.atom_freq = (0.5 + u(rng)) * p.mirror_freq;
            p.zeta_mc = 800.0 * u(rng);
            p.zeta_ac = 800.0 * u(rng);
            p.delta = (0.1 + 1.9 * u(rng)) * p.mirror_freq;
            const auto dp = derive_constants(p);
            const auto mf = steady_state_given_delta(dp, *dp.delta);
            const auto drift = build_drift(dp, mf);
            const auto report = stability(drift, default_stability_tol(dp));
            if (!report.eigen_stable) continue;
            ++accepted;
            const auto diffusion = build_diffusion(dp);
            const auto v = solve_lyapunov(drift, diffusion);
            const Mat6 resid = drift.m * v + v * drift.m.transpose() + diffusion.dense();
            if (resid.cwiseAbs().maxCoeff() >
                1e-10 * diffusion.dense().cwiseAbs().maxCoeff())
                resid_ok = false;
            if (!check_physicality(Eigen::MatrixXd(v)).physical) phys_ok = false;
        }
        check(resid_ok, "Lyapunov residual < 1e-10 (60 stable random draws)");
        check(phys_ok, "steady covariances satisfy nu_min >= 1/2 (60 draws)");
    }

    // mean-field consistency between the two detuning modes
    {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        bool ok = true;
        for (int i = 0; i < 60; ++i) {
            SystemParams p;
            p.cavity_length = 1e-3;
            p.wavelength = 1e-6;
            p.finesse = 1.07e4;
            p.power = 50e-3 * u(rng);
            p.mirror_freq = optobec::constants::two_pi * 1e7;
            p.mirror_damping = optobec::constants::two_pi * 100.0;
            p.temperature = 0.1;
            p.atom_freq = p.mirror_freq;
            p.zeta_mc = 500.0 * u(rng);
            p.zeta_ac = 500.0 * u(rng);
            p.delta = (0.1 + u(rng)) * p.mirror_freq;
            const auto dp = derive_constants(p);
            const auto mf = steady_state_given_delta(dp, *dp.delta);
            const double eta = backaction_coefficient(dp);
            const double delta_o = *dp.delta + eta * mf.c_s * mf.c_s;
            bool reproduced = false;
            for (const auto& br : steady_state_given_delta_o(dp, delta_o)) {
                if (std::abs(br.mf.c_s - mf.c_s) <= 1e-8 * std::max(mf.c_s, 1.0))
                    reproduced = true;
            }
            if (!reproduced) ok = false;
        }
        check(ok, "delta and delta_o mean-field routes agree (60 draws)");
    }

    std::cout << (failures == 0 ? "validate: all checks passed\n"
                                : "validate: FAILURES\n");
    return failures == 0 ? 0 : 1;
}

} // namespace
