#pragma once

#include <string>
#include <vector>

#include "optobec/sweep.hpp"

namespace optobec {

/// Standalone SVG rendering of a sweep. A 2D grid becomes a heatmap of the
/// first requested quantity with unstable cells hatched; a 1D scan becomes a
/// line plot with one polyline per quantity and axis2 variant. The color
/// scale runs linearly from 0 to the column maximum; an all-zero column
/// degenerates to a single color.
void emit_svg(const SweepResult& result, const std::vector<std::string>& quantities,
              const std::string& path);

void emit_svg(const SweepResult& result, const std::string& quantity,
              const std::string& path);

} // namespace optobec
