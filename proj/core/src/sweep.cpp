#include "optobec/sweep.hpp"

#include <algorithm>
#include <cmath>

#include "optobec/config.hpp"
#include "optobec/dynamics.hpp"
#include "optobec/meanfield.hpp"

namespace optobec {

namespace {

MeanField select_mean_field(const DerivedParams& dp, SignConvention sign) {
    if (dp.delta) return steady_state_given_delta(dp, *dp.delta);
    if (!dp.delta_o) throw MissingField("run_point: no detuning available");
    const auto branches = steady_state_given_delta_o(dp, *dp.delta_o, sign);
    // adiabatic ramp from vacuum lands on the lowest stable branch
    for (const auto& br : branches)
        if (br.stable_branch) return br.mf;
    return branches.front().mf;
}

Eigen::MatrixXd principal_submatrix(const Mat6& m, const std::vector<int>& idx) {
    Eigen::MatrixXd out(idx.size(), idx.size());
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < idx.size(); ++j) out(i, j) = m(idx[i], idx[j]);
    return out;
}

} // namespace

PointResult run_point(const SystemParams& params, SignConvention sign) {
    PointResult row;
    std::string stage = "derive_constants";
    try {
        const DerivedParams dp = derive_constants(params);

        stage = "mean_field";
        const MeanField mf = select_mean_field(dp, sign);
        row.c_s = mf.c_s;

        stage = "build_drift";
        const DriftMatrix drift = build_drift(dp, mf);
        const DiffusionMatrix diffusion = build_diffusion(dp);

        const bool mirror_coupled = mf.chi_mc != 0.0;
        const bool atom_coupled = mf.chi_ac != 0.0 || dp.atom_damping > 0.0;

        std::vector<int> active{mode::x_field, mode::y_field};
        if (mirror_coupled)
            active.insert(active.begin(), {mode::q_mirror, mode::p_mirror});
        if (atom_coupled) {
            auto pos = mirror_coupled ? active.begin() + 2 : active.begin();
            active.insert(pos, {mode::q_atom, mode::p_atom});
        }

        stage = "stability";
        const double tol = default_stability_tol(dp);
        StabilityReport report;
        if (!mirror_coupled && !atom_coupled) {
            // fully noninteracting: report the 6x6 verdict (marginal atom block)
            report = stability(drift, tol);
        } else {
            report = stability(principal_submatrix(drift.m, active), tol);
        }
        row.max_real_part = report.max_real_part;
        row.stability = report.eigen_stable ? "stable"
                        : report.marginal  ? "marginal"
                                           : "unstable";
        if (!report.eigen_stable) return row;
        if (!mirror_coupled && !atom_coupled) return row;

        stage = "solve_lyapunov";
        const Eigen::MatrixXd m_active = principal_submatrix(drift.m, active);
        const Eigen::MatrixXd d_active = principal_submatrix(diffusion.dense(), active);
        const Eigen::MatrixXd v = lyapunov_steady_state(m_active, d_active);

        stage = "physicality";
        const auto phys = check_physicality(v);
        row.nu_min = phys.nu_min;
        if (!phys.physical)
            throw UnphysicalState("stable point produced nu_min = " +
                                  std::to_string(phys.nu_min));

        stage = "log_negativity";
        auto compute = [&](int a0, std::optional<double>& e, std::optional<double>& eps) {
            // a0: offset of mode A in the active ordering; field is last
            Mat4 vr;
            const int f0 = int(active.size()) - 2;
            const int ii[4] = {a0, a0 + 1, f0, f0 + 1};
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) vr(i, j) = v(ii[i], ii[j]);
            const auto res = log_negativity(vr);
            e = res.log_negativity;
            eps = res.epsilon;
        };
        if (mirror_coupled) compute(0, row.e_mc, row.eps_mc);
        if (atom_coupled) compute(mirror_coupled ? 2 : 0, row.e_ac, row.eps_ac);
        if (mirror_coupled && atom_coupled) {
            Mat4 vr = v.topLeftCorner<4, 4>();
            const auto res = log_negativity(vr);
            row.e_ma = res.log_negativity;
            row.eps_ma = res.epsilon;
        }
    } catch (const Error& err) {
        row.error = stage + ": " + err.what();
        row.e_mc.reset(); row.e_ac.reset(); row.e_ma.reset();
        row.eps_mc.reset(); row.eps_ac.reset(); row.eps_ma.reset();
    }
    return row;
}

SweepResult run_sweep(const SweepSpec& spec) {
    if (spec.axis1.values.empty())
        throw NonPositiveInput("run_sweep: axis1 grid is empty");
    for (size_t i = 1; i < spec.axis1.values.size(); ++i)
        if (spec.axis1.values[i] <= spec.axis1.values[i - 1])
            throw NonPositiveInput("run_sweep: axis1 grid must be strictly increasing");
    if (spec.axis2) {
        if (spec.axis2->values.empty())
            throw NonPositiveInput("run_sweep: axis2 grid is empty");
        for (size_t i = 1; i < spec.axis2->values.size(); ++i)
            if (spec.axis2->values[i] <= spec.axis2->values[i - 1])
                throw NonPositiveInput("run_sweep: axis2 grid must be strictly increasing");
    }

    SweepResult result;
    result.axis1_name = spec.axis1.param;
    result.outputs = spec.outputs;
    result.axis1_size = spec.axis1.values.size();
    result.axis1_log = spec.axis1.log_scale;
    if (spec.axis2) {
        result.axis2_name = spec.axis2->param;
        result.axis2_size = spec.axis2->values.size();
        result.axis2_log = spec.axis2->log_scale;
    }

    const size_t n2 = spec.axis2 ? spec.axis2->values.size() : 1;
    result.rows.reserve(result.axis1_size * n2);

    for (size_t j = 0; j < n2; ++j) {
        for (size_t i = 0; i < spec.axis1.values.size(); ++i) {
            SystemParams p = spec.base;
            PointResult row;
            row.axis1_value = spec.axis1.values[i];
            if (spec.axis2) row.axis2_value = spec.axis2->values[j];
            try {
                set_param(p, spec.axis1.param, spec.axis1.values[i]);
                if (spec.axis2) set_param(p, spec.axis2->param, spec.axis2->values[j]);
                for (const auto& link : spec.links)
                    set_param(p, link.target, link.factor * get_param(p, link.source));
                PointResult computed = run_point(p, spec.sign);
                computed.axis1_value = row.axis1_value;
                computed.axis2_value = row.axis2_value;
                row = computed;
            } catch (const Error& err) {
                row.error = std::string("setup: ") + err.what();
            }
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

} // namespace optobec
