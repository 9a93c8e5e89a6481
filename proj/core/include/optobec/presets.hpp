#pragma once

#include <string>
#include <vector>

#include "optobec/sweep.hpp"

namespace optobec {

/// Sweep definitions reproducing the reference parameter scans:
///   fig1a  E_mc over detuning x mirror coupling (zeta_ac = 0.7 zeta_mc)
///   fig1b  E_ac over detuning x atomic coupling (near-decoupled mirror)
///   fig1c  E_ma over the two normalized couplings at fixed detuning
///   fig2a  E_mc vs temperature (atom off / weakly attached)
///   fig2b  E_ac vs temperature (two mirror-coupling variants; "fig2b" is
///          the caption variant, "fig2b_text" the body-text variant)
///   fig2c  E_ma vs temperature
///   fig3   all three negativities vs detuning
/// Throws UnknownFigure for anything else.
SweepSpec preset(const std::string& figure_id);

std::vector<std::string> preset_ids();

} // namespace optobec
