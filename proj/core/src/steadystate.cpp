#include "optobec/steadystate.hpp"

#include <cmath>
#include <limits>

namespace optobec {

namespace {

// dot V = M V + V M^T + D with M applied through the drift structure.
// V symmetric on entry keeps K exactly symmetric, so no resymmetrization
// is needed inside the loop.
struct DriftKernel {
    double wm, gm, om, ga, kap, del, cm, ca;
    double d_pm, d_x, d_y;  // nonzero diffusion entries

    explicit DriftKernel(const DriftMatrix& m, const DiffusionMatrix& d)
        : wm(m.omega_m), gm(m.gamma_m), om(m.atom_freq), ga(m.gamma_a),
          kap(m.kappa), del(m.delta), cm(m.chi_mc), ca(m.chi_ac),
          d_pm(d.diagonal(mode::p_mirror)), d_x(d.diagonal(mode::x_field)),
          d_y(d.diagonal(mode::y_field)) {}

    void apply(const double* v, double* k) const {
        double w[36];
        const double* r0 = v;
        const double* r1 = v + 6;
        const double* r2 = v + 12;
        const double* r3 = v + 18;
        const double* r4 = v + 24;
        const double* r5 = v + 30;
        for (int j = 0; j < 6; ++j) {
            w[j] = wm * r1[j];
            w[6 + j] = -wm * r0[j] - gm * r1[j] + cm * r4[j];
            w[12 + j] = om * r3[j];
            w[18 + j] = -om * r2[j] - ga * r3[j] - ca * r4[j];
            w[24 + j] = -kap * r4[j] + del * r5[j];
            w[30 + j] = cm * r0[j] - ca * r2[j] - del * r4[j] - kap * r5[j];
        }
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) k[i * 6 + j] = w[i * 6 + j] + w[j * 6 + i];
        k[1 * 6 + 1] += d_pm;
        k[4 * 6 + 4] += d_x;
        k[5 * 6 + 5] += d_y;
    }
};

} // namespace

Eigen::MatrixXd lyapunov_steady_state(const Eigen::MatrixXd& m,
                                      const Eigen::MatrixXd& d) {
    const int n = int(m.rows());
    const int nn = n * n;
    // vec(M V + V M^T) = (I (x) M + M (x) I) vec(V), column-major vec
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(nn, nn);
    for (int j = 0; j < n; ++j)
        a.block(j * n, j * n, n, n) = m;
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l)
            a.block(j * n, l * n, n, n).diagonal().array() += m(j, l);

    Eigen::VectorXd b(nn);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) b(j * n + i) = -d(i, j);

    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (!lu.isInvertible())
        throw SingularSystem(
            "Lyapunov system singular: M has eigenvalue pairs with lambda_i + lambda_j = 0");

    Eigen::VectorXd x = lu.solve(b);
    x += lu.solve(b - a * x);  // one refinement step

    Eigen::MatrixXd v(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) v(i, j) = x(j * n + i);
    v = 0.5 * (v + v.transpose()).eval();

    const double resid = (m * v + v * m.transpose() + d).cwiseAbs().maxCoeff();
    const double dnorm = d.cwiseAbs().maxCoeff();
    if (dnorm > 0.0 && resid > 1e-10 * dnorm)
        throw SingularSystem("Lyapunov residual exceeds 1e-10 relative: system ill-conditioned");
    return v;
}

CovarianceMatrix solve_lyapunov(const DriftMatrix& m, const DiffusionMatrix& d,
                                bool allow_unstable) {
    if (!allow_unstable) {
        const double scale = std::max({m.omega_m, m.atom_freq, m.kappa});
        const double tol = scale > 0.0 ? 1e-6 * scale : 0.0;
        Eigen::EigenSolver<Mat6> es(m.m, false);
        if (es.info() != Eigen::Success)
            throw EigenSolverFailure("solve_lyapunov: eigensolver did not converge");
        if (!(es.eigenvalues().real().maxCoeff() < -tol))
            throw UnstableDrift("solve_lyapunov: drift matrix is not eigen-stable");
    }
    return lyapunov_steady_state(Eigen::MatrixXd(m.m),
                                 Eigen::MatrixXd(d.dense()));
}

CovarianceMatrix integrate_moments(const DriftMatrix& m, const DiffusionMatrix& d,
                                   const CovarianceMatrix& v0, double horizon,
                                   double step) {
    if (!(step > 0.0)) throw NonPositiveInput("integrate_moments: step must be > 0");
    if (horizon < step) throw NonPositiveInput("integrate_moments: horizon must be >= step");

    const DriftKernel kernel(m, d);

    double v[36], k[36], t[36], acc[36];
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) v[i * 6 + j] = 0.5 * (v0(i, j) + v0(j, i));

    double scale0 = 1.0;
    for (int i = 0; i < 36; ++i) scale0 = std::max(scale0, std::abs(v[i]));

    const long nsteps = long(horizon / step);
    const double tail = horizon - double(nsteps) * step;

    auto rk4_step = [&](double h) {
        const double h2 = 0.5 * h;
        kernel.apply(v, k);
        for (int i = 0; i < 36; ++i) { acc[i] = k[i]; t[i] = v[i] + h2 * k[i]; }
        kernel.apply(t, k);
        for (int i = 0; i < 36; ++i) { acc[i] += 2.0 * k[i]; t[i] = v[i] + h2 * k[i]; }
        kernel.apply(t, k);
        for (int i = 0; i < 36; ++i) { acc[i] += 2.0 * k[i]; t[i] = v[i] + h * k[i]; }
        kernel.apply(t, k);
        const double h6 = h / 6.0;
        for (int i = 0; i < 36; ++i) v[i] += h6 * (acc[i] + k[i]);
    };

    for (long n = 0; n < nsteps; ++n) {
        rk4_step(step);
        if ((n & 0x3ff) == 0x3ff) {
            double mx = 0.0;
            for (int i = 0; i < 36; ++i) mx = std::max(mx, std::abs(v[i]));
            if (!(mx < 1e12 * scale0))
                throw StepTooLarge("integrate_moments: norm grew by > 1e12, step too large");
        }
    }
    if (tail > 0.0) rk4_step(tail);

    CovarianceMatrix out;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) out(i, j) = 0.5 * (v[i * 6 + j] + v[j * 6 + i]);
    return out;
}

Eigen::MatrixXd integrate_moments(const Eigen::MatrixXd& m, const Eigen::MatrixXd& d,
                                  const Eigen::MatrixXd& v0, double horizon,
                                  double step) {
    if (!(step > 0.0)) throw NonPositiveInput("integrate_moments: step must be > 0");
    if (horizon < step) throw NonPositiveInput("integrate_moments: horizon must be >= step");

    Eigen::MatrixXd v = 0.5 * (v0 + v0.transpose());
    const double scale0 = std::max(1.0, v.cwiseAbs().maxCoeff());

    auto rhs = [&](const Eigen::MatrixXd& x) -> Eigen::MatrixXd {
        Eigen::MatrixXd w = m * x;
        return w + w.transpose() + d;
    };

    const long nsteps = long(horizon / step);
    const double tail = horizon - double(nsteps) * step;
    auto rk4_step = [&](double h) {
        const Eigen::MatrixXd k1 = rhs(v);
        const Eigen::MatrixXd k2 = rhs(v + 0.5 * h * k1);
        const Eigen::MatrixXd k3 = rhs(v + 0.5 * h * k2);
        const Eigen::MatrixXd k4 = rhs(v + h * k3);
        v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        v = 0.5 * (v + v.transpose()).eval();
    };
    for (long n = 0; n < nsteps; ++n) {
        rk4_step(step);
        if ((n & 0xff) == 0xff && !(v.cwiseAbs().maxCoeff() < 1e12 * scale0))
            throw StepTooLarge("integrate_moments: norm grew by > 1e12, step too large");
    }
    if (tail > 0.0) rk4_step(tail);
    return v;
}

namespace {

double spectral_bounds(const DriftMatrix& m, bool imag_only) {
    Eigen::EigenSolver<Mat6> es(m.m, false);
    if (es.info() != Eigen::Success)
        throw EigenSolverFailure("step selection: eigensolver did not converge");
    double out = 0.0;
    for (int i = 0; i < 6; ++i) {
        const auto lambda = es.eigenvalues()(i);
        out = std::max(out, imag_only ? std::abs(lambda.imag()) : std::abs(lambda));
    }
    return out;
}

} // namespace

double default_step(const DriftMatrix& m) {
    const double omega_max = spectral_bounds(m, true);
    const double from_osc = omega_max > 0.0 ? 0.01 / omega_max : std::numeric_limits<double>::infinity();
    const double from_kappa = m.kappa > 0.0 ? 0.01 / m.kappa : std::numeric_limits<double>::infinity();
    return std::min(from_osc, from_kappa);
}

double stability_bounded_step(const DriftMatrix& m) {
    // Lyapunov operator spectrum is {lambda_i + lambda_j}; keep h within the
    // RK4 stability region along the imaginary axis with margin.
    const double rho = spectral_bounds(m, false);
    if (rho <= 0.0) return std::numeric_limits<double>::infinity();
    return 2.5 / (2.0 * rho);
}

} // namespace optobec
