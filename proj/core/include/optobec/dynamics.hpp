#pragma once

#include <array>

#include <Eigen/Dense>

#include "optobec/meanfield.hpp"
#include "optobec/params.hpp"

namespace optobec {

using Mat6 = Eigen::Matrix<double, 6, 6>;
using Vec6 = Eigen::Matrix<double, 6, 1>;

/// Fixed quadrature ordering R = (dq_m, dp_m, dq_a, dp_a, dX, dY) shared by
/// every 6x6 matrix in the pipeline.
namespace mode {
inline constexpr int q_mirror = 0;
inline constexpr int p_mirror = 1;
inline constexpr int q_atom = 2;
inline constexpr int p_atom = 3;
inline constexpr int x_field = 4;
inline constexpr int y_field = 5;
inline constexpr int count = 6;
} // namespace mode

/// Drift matrix of the linearized fluctuation dynamics, dot R = M R + noise.
/// Keeps the generating parameters so hot loops can apply M by structure.
struct DriftMatrix {
    Mat6 m = Mat6::Zero();
    double omega_m = 0.0;
    double gamma_m = 0.0;
    double atom_freq = 0.0;
    double gamma_a = 0.0;
    double kappa = 0.0;
    double delta = 0.0;
    double chi_mc = 0.0;
    double chi_ac = 0.0;
};

/// Diagonal diffusion matrix D = diag(0, gamma_m (2 nbar + 1), 0, 0, kappa, kappa).
struct DiffusionMatrix {
    Vec6 diagonal = Vec6::Zero();
    Mat6 dense() const { return diagonal.asDiagonal(); }
};

struct StabilityReport {
    double max_real_part = 0.0;  // rad/s
    bool eigen_stable = false;   // max Re(lambda) < -tol
    bool hurwitz_stable = false; // all Hurwitz determinants positive
    bool marginal = false;       // |max Re(lambda)| <= tol
    std::array<double, 6> hurwitz_determinants{};
};

/// Default stability tolerance, 1e-6 * omega_m.
double default_stability_tol(const DerivedParams& dp);

DriftMatrix build_drift(const DerivedParams& dp, const MeanField& mf);

DiffusionMatrix build_diffusion(const DerivedParams& dp);

/// Coefficients of det(xI - M), monic, index i holds the coefficient of
/// x^(n-i). Computed by the Faddeev-LeVerrier recursion in long double with
/// compensated trace sums; the coefficients span many orders of magnitude at
/// experimental parameter scales.
std::vector<double> characteristic_polynomial(const Eigen::MatrixXd& m);

/// Eigenvalue and Routh-Hurwitz stability verdicts for the drift matrix.
/// Marginal spectra (|max Re| <= tol) are reported as not eigen-stable with
/// the marginal flag set.
StabilityReport stability(const DriftMatrix& m, double tol);
StabilityReport stability(const Eigen::MatrixXd& m, double tol);

} // namespace optobec
