#pragma once

#include <Eigen/Dense>

#include "optobec/dynamics.hpp"

namespace optobec {

/// Symmetrized covariance matrix over the fixed mode ordering,
/// V_ij = <dR_i dR_j + dR_j dR_i>/2; a single vacuum mode has V = I/2.
using CovarianceMatrix = Mat6;

/// Stationary covariance from M V + V M^T = -D by Kronecker vectorization:
/// a dense 36x36 solve with one step of iterative refinement. Requires an
/// eigen-stable drift unless allow_unstable is set (diagnostics only).
CovarianceMatrix solve_lyapunov(const DriftMatrix& m, const DiffusionMatrix& d,
                                bool allow_unstable = false);

/// Size-generic core used for reduced subsystems. No stability precheck.
Eigen::MatrixXd lyapunov_steady_state(const Eigen::MatrixXd& m,
                                      const Eigen::MatrixXd& d);

/// Classical RK4 integration of dot V = M V + V M^T + D from V0, the
/// independent oracle for solve_lyapunov. The result is symmetric by
/// construction at every stage. Throws StepTooLarge when the norm grows by
/// more than 1e12 over the run.
CovarianceMatrix integrate_moments(const DriftMatrix& m, const DiffusionMatrix& d,
                                   const CovarianceMatrix& v0, double horizon,
                                   double step);

/// Size-generic RK4 for small blocks (tests, reduced systems).
Eigen::MatrixXd integrate_moments(const Eigen::MatrixXd& m, const Eigen::MatrixXd& d,
                                  const Eigen::MatrixXd& v0, double horizon,
                                  double step);

/// Accuracy-conservative default step, min(0.01/omega_max, 0.01/kappa) with
/// omega_max the largest |Im lambda| of M: resolves the fastest oscillation
/// by >= 100 steps.
double default_step(const DriftMatrix& m);

/// Largest step for which the RK4 map remains a contraction onto the exact
/// fixed point, bounded by the stability interval of the method on the
/// spectrum of the Lyapunov operator (pairs lambda_i + lambda_j).
double stability_bounded_step(const DriftMatrix& m);

} // namespace optobec
