#pragma once

#include <string>
#include <string_view>

#include "panofold/compose.hpp"

namespace panofold {

// SVG 1.1 in millimetre units. Coordinates use fixed 3-decimal formatting, element ids are
// sequential (e1, e2, ...) and rasters are embedded as base64 PNG, so equal documents always
// serialize to equal bytes.
std::string emit_svg(const VectorDoc& doc);

// "%.3f" without locale dependence; -0.000 prints as 0.000.
std::string format_mm(double v);

std::string dash_pattern(StrokeStyle style);  // "" for solid

std::string base64_encode(std::string_view bytes);

}  // namespace panofold
