#include "optobec/meanfield.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace optobec {

namespace {

constexpr double sqrt2 = 1.4142135623730951;

MeanField make_meanfield(const DerivedParams& dp, double c_s, double delta) {
    MeanField mf;
    mf.c_s = c_s;
    const double intensity = c_s * c_s;
    mf.q_ms = dp.zeta_mc * intensity / dp.mirror_freq;
    mf.q_as = -dp.zeta_ac * intensity / dp.atom_freq;
    mf.chi_mc = dp.zeta_mc * c_s * sqrt2;
    mf.chi_ac = dp.zeta_ac * c_s * sqrt2;
    mf.delta_eff = delta;
    return mf;
}

// Real roots of the monic cubic x^3 + a x^2 + b x + c via the companion
// matrix, then a safeguarded long double Newton polish. A near-degenerate
// pair comes out of the eigensolver with imaginary parts of order
// sqrt(eps)*|x|, so the realness filter must be looser than that.
std::vector<double> real_cubic_roots(double a, double b, double c) {
    // substitute x = s y to balance the companion matrix; the eigensolver
    // loses small roots entirely when the entries span tens of decades
    const double s = std::max({1.0, std::abs(a), std::sqrt(std::abs(b)),
                               std::cbrt(std::abs(c))});
    Eigen::Matrix3d companion;
    companion << 0, 0, -c / (s * s * s),
                 1, 0, -b / (s * s),
                 0, 1, -a / s;
    Eigen::EigenSolver<Eigen::Matrix3d> es(companion);
    if (es.info() != Eigen::Success)
        throw EigenSolverFailure("cubic companion eigensolver did not converge");

    const long double la = a, lb = b, lc = c;
    auto f = [&](long double x) { return ((x + la) * x + lb) * x + lc; };
    auto fp = [&](long double x) { return (3.0L * x + 2.0L * la) * x + lb; };

    const auto ev = es.eigenvalues();
    std::vector<double> roots;
    for (int i = 0; i < 3; ++i) {
        if (std::abs(ev(i).imag()) > 1e-6 * std::abs(ev(i))) continue;
        long double x = ev(i).real() * s;
        long double fx = std::abs(f(x));
        for (int it = 0; it < 8; ++it) {
            const long double d = fp(x);
            if (d == 0.0L) break;
            const long double xn = x - f(x) / d;
            const long double fn = std::abs(f(xn));
            if (fn >= fx) break;
            x = xn;
            fx = fn;
        }
        roots.push_back(double(x));
    }
    std::sort(roots.begin(), roots.end());
    std::vector<double> unique;
    for (double r : roots) {
        if (unique.empty() ||
            std::abs(r - unique.back()) > 1e-9 * std::max(std::abs(r), 1.0))
            unique.push_back(r);
    }
    return unique;
}

} // namespace

double backaction_coefficient(const DerivedParams& dp, SignConvention sign) {
    const double mirror_term = dp.zeta_mc * dp.zeta_mc / dp.mirror_freq;
    const double atom_term = dp.zeta_ac * dp.zeta_ac / dp.atom_freq;
    return sign == SignConvention::Derived ? mirror_term + atom_term
                                           : mirror_term - atom_term;
}

MeanField steady_state_given_delta(const DerivedParams& dp, double delta) {
    if (!(dp.kappa > 0.0))
        throw NonPositiveInput("steady_state_given_delta: kappa must be > 0");
    const double c_s = dp.drive_amplitude / std::hypot(dp.kappa, delta);
    return make_meanfield(dp, c_s, delta);
}

std::vector<MeanFieldBranch> steady_state_given_delta_o(const DerivedParams& dp,
                                                        double delta_o,
                                                        SignConvention sign) {
    if (!(dp.kappa > 0.0))
        throw NonPositiveInput("steady_state_given_delta_o: kappa must be > 0");

    const double eta = backaction_coefficient(dp, sign);
    const double e2 = dp.drive_amplitude * dp.drive_amplitude;
    const double k2 = dp.kappa * dp.kappa;

    std::vector<double> intensities;
    if (eta == 0.0) {
        intensities.push_back(e2 / (k2 + delta_o * delta_o));
    } else {
        // eta^2 I^3 - 2 delta_o eta I^2 + (kappa^2 + delta_o^2) I - |E|^2 = 0
        const double eta2 = eta * eta;
        for (double root : real_cubic_roots(-2.0 * delta_o / eta,
                                            (k2 + delta_o * delta_o) / eta2,
                                            -e2 / eta2)) {
            if (root >= 0.0) intensities.push_back(root);
        }
    }
    if (intensities.empty()) {
        if (e2 == 0.0) {
            intensities.push_back(0.0);
        } else {
            throw NoRealRoot("no positive intensity root; cannot occur for kappa > 0");
        }
    }

    std::vector<MeanFieldBranch> branches;
    for (double intensity : intensities) {
        const double delta = delta_o - eta * intensity;
        const long double ld = (long double)delta_o - (long double)eta * intensity;
        const long double residual =
            (long double)intensity * ((long double)k2 + ld * ld) - (long double)e2;
        const double denom = std::max(e2, intensity * k2);
        if (denom > 0.0 && std::abs(double(residual)) > 1e-10 * denom)
            throw SolverTolerance("cubic root residual exceeds 1e-10 relative");

        MeanFieldBranch br;
        br.mf = make_meanfield(dp, std::sqrt(intensity), delta);
        br.intensity = intensity;
        // slope criterion: d|E|^2/dI < 0 marks the unstable middle branch
        const double slope = k2 + delta * delta - 2.0 * eta * intensity * delta;
        br.stable_branch = slope >= 0.0;
        branches.push_back(br);
    }
    return branches;
}

} // namespace optobec
