#include "optobec/dynamics.hpp"

#include <cmath>
#include <vector>

namespace optobec {

namespace {

// Kahan-compensated trace of a long double matrix.
long double compensated_trace(const std::vector<long double>& a, int n) {
    long double sum = 0.0L, comp = 0.0L;
    for (int i = 0; i < n; ++i) {
        const long double y = a[i * n + i] - comp;
        const long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    return sum;
}

// Leading principal minors of the Hurwitz matrix, long double LU with
// partial pivoting, one independent factorization per minor.
std::vector<long double> hurwitz_minors(const std::vector<long double>& coeff) {
    const int n = int(coeff.size()) - 1;
    std::vector<long double> h(n * n, 0.0L);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int k = 2 * (j + 1) - (i + 1);
            if (k >= 0 && k <= n) h[i * n + j] = coeff[k];
        }

    std::vector<long double> minors(n, 0.0L);
    for (int m = 1; m <= n; ++m) {
        std::vector<long double> lu(m * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) lu[i * m + j] = h[i * n + j];
        long double det = 1.0L;
        for (int col = 0; col < m; ++col) {
            int piv = col;
            for (int r = col + 1; r < m; ++r)
                if (std::abs(lu[r * m + col]) > std::abs(lu[piv * m + col])) piv = r;
            if (lu[piv * m + col] == 0.0L) { det = 0.0L; break; }
            if (piv != col) {
                for (int j = 0; j < m; ++j) std::swap(lu[piv * m + j], lu[col * m + j]);
                det = -det;
            }
            det *= lu[col * m + col];
            for (int r = col + 1; r < m; ++r) {
                const long double f = lu[r * m + col] / lu[col * m + col];
                for (int j = col; j < m; ++j) lu[r * m + j] -= f * lu[col * m + j];
            }
        }
        minors[m - 1] = det;
    }
    return minors;
}

} // namespace

double default_stability_tol(const DerivedParams& dp) {
    return 1e-6 * dp.mirror_freq;
}

DriftMatrix build_drift(const DerivedParams& dp, const MeanField& mf) {
    DriftMatrix drift;
    drift.omega_m = dp.mirror_freq;
    drift.gamma_m = dp.mirror_damping;
    drift.atom_freq = dp.atom_freq;
    drift.gamma_a = dp.atom_damping;
    drift.kappa = dp.kappa;
    drift.delta = mf.delta_eff;
    drift.chi_mc = mf.chi_mc;
    drift.chi_ac = mf.chi_ac;

    Mat6& m = drift.m;
    m.setZero();
    m(mode::q_mirror, mode::p_mirror) = drift.omega_m;
    m(mode::p_mirror, mode::q_mirror) = -drift.omega_m;
    m(mode::p_mirror, mode::p_mirror) = -drift.gamma_m;
    m(mode::p_mirror, mode::x_field) = drift.chi_mc;
    m(mode::q_atom, mode::p_atom) = drift.atom_freq;
    m(mode::p_atom, mode::q_atom) = -drift.atom_freq;
    m(mode::p_atom, mode::x_field) = -drift.chi_ac;
    if (drift.gamma_a != 0.0) m(mode::p_atom, mode::p_atom) = -drift.gamma_a;
    m(mode::x_field, mode::x_field) = -drift.kappa;
    m(mode::x_field, mode::y_field) = drift.delta;
    m(mode::y_field, mode::q_mirror) = drift.chi_mc;
    m(mode::y_field, mode::q_atom) = -drift.chi_ac;
    m(mode::y_field, mode::x_field) = -drift.delta;
    m(mode::y_field, mode::y_field) = -drift.kappa;
    return drift;
}

DiffusionMatrix build_diffusion(const DerivedParams& dp) {
    if (!(dp.kappa > 0.0))
        throw NonPositiveInput("build_diffusion: kappa must be > 0");
    if (dp.mirror_damping < 0.0 || dp.n_thermal < 0.0)
        throw NonPositiveInput("build_diffusion: gamma_m and nbar must be >= 0");
    DiffusionMatrix d;
    d.diagonal(mode::p_mirror) = dp.mirror_damping * (2.0 * dp.n_thermal + 1.0);
    d.diagonal(mode::x_field) = dp.kappa;
    d.diagonal(mode::y_field) = dp.kappa;
    return d;
}

std::vector<double> characteristic_polynomial(const Eigen::MatrixXd& m) {
    const int n = int(m.rows());
    std::vector<long double> a(n * n), work(n * n), next(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i * n + j] = (long double)m(i, j);

    // Faddeev-LeVerrier: A_1 = M, c_k = -tr(A_k)/k, A_{k+1} = M (A_k + c_k I)
    std::vector<double> coeff(n + 1);
    coeff[0] = 1.0;
    work = a;
    for (int k = 1; k <= n; ++k) {
        const long double ck = -compensated_trace(work, n) / (long double)k;
        coeff[k] = double(ck);
        if (k == n) break;
        for (int i = 0; i < n; ++i) work[i * n + i] += ck;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long double s = 0.0L, comp = 0.0L;
                for (int l = 0; l < n; ++l) {
                    const long double y = a[i * n + l] * work[l * n + j] - comp;
                    const long double t = s + y;
                    comp = (t - s) - y;
                    s = t;
                }
                next[i * n + j] = s;
            }
        work.swap(next);
    }
    return coeff;
}

namespace {

StabilityReport stability_impl(const Eigen::MatrixXd& m, double tol) {
    if (!(tol > 0.0)) throw NonPositiveInput("stability: tol must be > 0");
    const int n = int(m.rows());

    Eigen::EigenSolver<Eigen::MatrixXd> es(m, /*computeEigenvectors=*/false);
    if (es.info() != Eigen::Success)
        throw EigenSolverFailure("stability: eigensolver did not converge");

    StabilityReport report;
    report.max_real_part = es.eigenvalues().real().maxCoeff();
    report.eigen_stable = report.max_real_part < -tol;
    report.marginal = std::abs(report.max_real_part) <= tol;

    // Scale s -> s/w to tame the coefficient range; each Hurwitz minor picks
    // up the positive factor w^(m(m+1)/2), so signs and verdicts are intact.
    const std::vector<double> coeff = characteristic_polynomial(m);
    long double w = 0.0L;
    for (int k = 1; k <= n; ++k)
        w = std::max(w, (long double)std::pow(std::abs(coeff[k]), 1.0 / k));
    if (w == 0.0L) w = 1.0L;
    std::vector<long double> scaled(n + 1);
    long double wk = 1.0L;
    for (int k = 0; k <= n; ++k) {
        scaled[k] = (long double)coeff[k] / wk;
        wk *= w;
    }

    // minor k of the scaled polynomial differs from the raw one by w^(k(k+1)/2)
    const std::vector<long double> minors = hurwitz_minors(scaled);
    bool hurwitz = true;
    long double scale_back = 1.0L;
    for (int k = 1; k <= n && k <= 6; ++k) {
        for (int j = 0; j < k; ++j) scale_back *= w;
        report.hurwitz_determinants[k - 1] = double(minors[k - 1] * scale_back);
        if (!(minors[k - 1] > 0.0L)) hurwitz = false;
    }
    report.hurwitz_stable = hurwitz;
    return report;
}

} // namespace

StabilityReport stability(const DriftMatrix& m, double tol) {
    return stability_impl(m.m, tol);
}

StabilityReport stability(const Eigen::MatrixXd& m, double tol) {
    return stability_impl(m, tol);
}

} // namespace optobec
