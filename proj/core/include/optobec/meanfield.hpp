#pragma once

#include <vector>

#include "optobec/params.hpp"

namespace optobec {

/// Sign of the atomic back-action term in the effective detuning
/// Delta = Delta_o - |c_s|^2 (zeta_mc^2/omega_m +/- zeta_ac^2/Omega).
/// Derived: the plus sign that follows from the Langevin fixed point.
/// Paper: the minus sign as printed.
enum class SignConvention { Derived, Paper };

/// Classical fixed point of the Langevin equations, with the effective
/// fluctuation couplings that enter the drift matrix.
struct MeanField {
    double c_s = 0.0;        // intracavity amplitude, real >= 0 by phase choice
    double q_ms = 0.0;       // mirror displacement
    double q_as = 0.0;       // atomic displacement
    double chi_mc = 0.0;     // zeta_mc * c_s * sqrt(2), rad/s
    double chi_ac = 0.0;     // zeta_ac * c_s * sqrt(2), rad/s
    double delta_eff = 0.0;  // effective cavity detuning, rad/s
};

struct MeanFieldBranch {
    MeanField mf;
    double intensity = 0.0;     // I = c_s^2
    bool stable_branch = true;  // slope criterion; middle branch of a triple is false
};

/// Back-action coefficient eta = zeta_mc^2/omega_m (+/-) zeta_ac^2/Omega.
double backaction_coefficient(const DerivedParams& dp,
                              SignConvention sign = SignConvention::Derived);

/// Fixed point with the effective detuning treated as the independent variable.
MeanField steady_state_given_delta(const DerivedParams& dp, double delta);

/// Fixed points for a given bare detuning: all real positive intensity roots of
/// I (kappa^2 + (delta_o - eta I)^2) = |E|^2, ordered by increasing intensity.
std::vector<MeanFieldBranch> steady_state_given_delta_o(
    const DerivedParams& dp, double delta_o,
    SignConvention sign = SignConvention::Derived);

} // namespace optobec
