#pragma once

#include <random>

#include <Eigen/Dense>

namespace optobec {

/// Matrix exponential by scaling-and-squaring with a Taylor core; intended
/// for the small matrices used in state sampling.
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);

/// Random symplectic matrix exp(sigma H) with H symmetric, entry scale s.
Eigen::MatrixXd random_symplectic(std::mt19937_64& rng, int n_modes, double scale);

/// Random physical covariance via the Williamson form V = S diag(nu) S^T
/// with symplectic eigenvalues nu_i >= 1/2. Squeezing across the modes makes
/// a sizable fraction of the two-mode samples entangled.
Eigen::MatrixXd random_physical_covariance(std::mt19937_64& rng, int n_modes,
                                           double nu_max = 2.0,
                                           double squeeze = 0.6);

} // namespace optobec
