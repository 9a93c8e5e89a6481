#pragma once

#include <array>

#include <Eigen/Dense>

#include "optobec/dynamics.hpp"

namespace optobec {

using Mat4 = Eigen::Matrix<double, 4, 4>;

/// The three bipartitions of the (mirror, atom, field) system obtained by
/// tracing out the third mode.
enum class BipartitePartition { MirrorField, AtomField, MirrorAtom };

/// Retained mode indices (mode A pair first) for a partition.
std::array<int, 4> partition_indices(BipartitePartition p);

/// 4x4 principal submatrix on the retained indices, mode-A block first.
Mat4 reduce(const Mat6& v, BipartitePartition p);

struct NegativityResult {
    double log_negativity = 0.0;  // E_N = max(0, -ln 2 eps)
    double epsilon = 0.0;         // smallest PPT symplectic eigenvalue
};

/// Smallest partial-transpose symplectic eigenvalue from the determinant
/// formula: eps = 2^{-1/2} sqrt(Sigma - sqrt(Sigma^2 - 4 det V)) with
/// Sigma = det X + det Y - 2 det Z. No physicality check.
double ppt_epsilon(const Mat4& vr);

/// Cross-check route: eps as the smallest symplectic eigenvalue of the
/// momentum-flipped (mode B) covariance.
double ppt_epsilon_eig(const Mat4& vr);

/// Logarithmic negativity of a reduced two-mode covariance. Throws
/// UnphysicalState when vr violates the uncertainty bound; that signals an
/// upstream solver or stability bug, not a property of the state.
NegativityResult log_negativity(const Mat4& vr);

/// Simon PPT separability test; true iff entangled. Shares the epsilon
/// computation with log_negativity, so the two verdicts agree exactly.
bool simon_criterion(const Mat4& vr);

struct PhysicalityResult {
    bool physical = false;
    double nu_min = 0.0;  // smallest symplectic eigenvalue
};

/// Symplectic eigenvalues as |eig(i sigma V)|; physical iff all
/// >= 1/2 - 1e-9. Throws OddDimension for odd-sized input.
PhysicalityResult check_physicality(const Eigen::MatrixXd& v);

} // namespace optobec
