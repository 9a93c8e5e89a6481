#pragma once

#include <optional>

#include "optobec/errors.hpp"

namespace optobec {

// All frequencies and rates are angular (rad/s) throughout the library.
// Configuration inputs tagged with an "Hz" suffix are multiplied by 2*pi
// on parsing (see config.hpp); internally there is one convention only.

/// Experiment-level inputs. Exactly one of {finesse, cavity_decay}, one of
/// {atom_freq, atom_mass}, and one of {delta, delta_o, delta_c} must be set.
struct SystemParams {
    double cavity_length = 0.0;  // m
    double wavelength = 0.0;     // m
    std::optional<double> finesse;
    std::optional<double> cavity_decay;  // kappa, rad/s
    double power = 0.0;          // W
    double mirror_freq = 0.0;    // omega_m, rad/s
    double mirror_damping = 0.0; // gamma_m, rad/s
    std::optional<double> mirror_mass;  // kg, needed only when zeta_mc is derived
    double temperature = 0.0;    // K
    std::optional<double> atom_freq;    // Omega, rad/s
    std::optional<double> atom_mass;    // kg, gives Omega = 2 hbar k^2 / m_a
    std::optional<double> zeta_mc;      // rad/s, overrides the geometric value
    std::optional<double> zeta_ac;      // rad/s, overrides sqrt(N) U_o / 2
    std::optional<double> atom_number;
    std::optional<double> lattice_depth_per_photon;  // U_o, rad/s
    std::optional<double> delta;    // effective detuning, rad/s
    std::optional<double> delta_o;  // back-action-shifted detuning, rad/s
    std::optional<double> delta_c;  // bare cavity-laser detuning, rad/s
    std::optional<double> cavity_freq;  // omega_c override for zeta_mc
    double atom_damping = 0.0;   // gamma_a regularization, default off

    /// Throws MissingField / NonPositiveInput when the invariants fail.
    void validate() const;
};

/// Derived physical quantities in consistent angular-frequency units.
struct DerivedParams {
    double kappa = 0.0;            // rad/s
    double laser_freq = 0.0;       // omega_L, rad/s
    double wavenumber = 0.0;       // k, 1/m
    double drive_amplitude = 0.0;  // |E|, rad/s
    double zeta_mc = 0.0;          // rad/s
    double zeta_ac = 0.0;          // rad/s
    double atom_freq = 0.0;        // Omega, rad/s
    double n_thermal = 0.0;        // nbar
    // pass-through
    double mirror_freq = 0.0;
    double mirror_damping = 0.0;
    double temperature = 0.0;
    double atom_damping = 0.0;
    std::optional<double> delta;
    std::optional<double> delta_o;
};

/// Equilibrium phonon occupation nbar = 1/(exp(hbar w / kB T) - 1); 0 at T = 0.
double thermal_occupation(double omega, double temperature);

/// Convert experiment inputs into the derived set used by the dynamics.
DerivedParams derive_constants(const SystemParams& params);

} // namespace optobec
