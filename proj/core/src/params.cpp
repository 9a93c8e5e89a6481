#include "optobec/params.hpp"

#include <cmath>

#include "optobec/constants.hpp"

namespace optobec {

namespace {

void require_positive(double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw NonPositiveInput(std::string(name) + " must be strictly positive");
}

} // namespace

void SystemParams::validate() const {
    require_positive(cavity_length, "cavity_length");
    require_positive(wavelength, "wavelength");
    require_positive(mirror_freq, "mirror_freq");
    if (mirror_damping < 0.0)
        throw NonPositiveInput("mirror_damping must be >= 0");
    if (power < 0.0)
        throw NonPositiveInput("power must be >= 0");
    if (temperature < 0.0)
        throw NonPositiveInput("temperature must be >= 0");
    if (atom_damping < 0.0)
        throw NonPositiveInput("atom_damping must be >= 0");

    if (finesse.has_value() == cavity_decay.has_value())
        throw MissingField("exactly one of {finesse, cavity_decay} must be given");
    if (finesse && *finesse <= 0.0) throw NonPositiveInput("finesse must be > 0");
    if (cavity_decay && *cavity_decay <= 0.0) throw NonPositiveInput("cavity_decay must be > 0");

    if (atom_freq.has_value() == atom_mass.has_value())
        throw MissingField("exactly one of {atom_freq, atom_mass} must be given");
    if (atom_freq && *atom_freq <= 0.0) throw NonPositiveInput("atom_freq must be > 0");
    if (atom_mass && *atom_mass <= 0.0) throw NonPositiveInput("atom_mass must be > 0");

    const int ndet = int(delta.has_value()) + int(delta_o.has_value()) + int(delta_c.has_value());
    if (ndet != 1)
        throw MissingField("exactly one of {delta, delta_o, delta_c} must be given");
    if (delta_c && !(atom_number && lattice_depth_per_photon))
        throw MissingField("delta_c requires atom_number and lattice_depth_per_photon");

    if (!zeta_mc && !mirror_mass)
        throw MissingField("zeta_mc absent and mirror_mass absent");
    if (zeta_mc && *zeta_mc < 0.0) throw NonPositiveInput("zeta_mc must be >= 0");
    if (zeta_ac && *zeta_ac < 0.0) throw NonPositiveInput("zeta_ac must be >= 0");
    if (mirror_mass && *mirror_mass <= 0.0) throw NonPositiveInput("mirror_mass must be > 0");
}

double thermal_occupation(double omega, double temperature) {
    if (!(omega > 0.0))
        throw NonPositiveFrequency("thermal_occupation: omega must be > 0");
    if (temperature < 0.0)
        throw NonPositiveInput("thermal_occupation: temperature must be >= 0");
    if (temperature == 0.0) return 0.0;
    const double x = constants::hbar * omega / (constants::k_boltzmann * temperature);
    // expm1 keeps the Rayleigh-Jeans limit accurate; 1/inf underflows to 0.
    return 1.0 / std::expm1(x);
}

DerivedParams derive_constants(const SystemParams& p) {
    p.validate();
    using namespace constants;

    DerivedParams d;
    d.kappa = p.cavity_decay ? *p.cavity_decay
                             : pi * c_light / (2.0 * p.cavity_length * *p.finesse);
    d.laser_freq = two_pi * c_light / p.wavelength;
    d.wavenumber = two_pi / p.wavelength;
    d.drive_amplitude = std::sqrt(p.power * d.kappa / (hbar * d.laser_freq));

    if (p.zeta_mc) {
        d.zeta_mc = *p.zeta_mc;
    } else {
        // omega_c ~ omega_L: MHz detunings are negligible against optical scales.
        const double omega_c = p.cavity_freq ? *p.cavity_freq : d.laser_freq;
        d.zeta_mc = omega_c * std::sqrt(hbar / (*p.mirror_mass * p.mirror_freq)) / p.cavity_length;
    }

    if (p.zeta_ac) {
        d.zeta_ac = *p.zeta_ac;
    } else if (p.atom_number && p.lattice_depth_per_photon) {
        d.zeta_ac = std::sqrt(*p.atom_number) * *p.lattice_depth_per_photon / 2.0;
    } else {
        throw MissingField("zeta_ac absent and {atom_number, lattice_depth_per_photon} absent");
    }

    if (p.atom_freq) {
        d.atom_freq = *p.atom_freq;
    } else {
        d.atom_freq = 2.0 * hbar * d.wavenumber * d.wavenumber / *p.atom_mass;
    }

    d.n_thermal = thermal_occupation(p.mirror_freq, p.temperature);
    d.mirror_freq = p.mirror_freq;
    d.mirror_damping = p.mirror_damping;
    d.temperature = p.temperature;
    d.atom_damping = p.atom_damping;
    d.delta = p.delta;
    if (p.delta_o) {
        d.delta_o = *p.delta_o;
    } else if (p.delta_c) {
        d.delta_o = *p.delta_c + *p.atom_number * *p.lattice_depth_per_photon / 2.0;
    }
    return d;
}

} // namespace optobec
