#pragma once

// Deterministic SVG rendering of 2-D barcodes: each interval drawn as its
// unit cells in one color, with a legend. Byte-for-byte stable for a fixed
// input.

#include <string>
#include <utility>
#include <vector>

#include "pmod/intervals.hpp"

namespace pmod {

std::string render_svg(const std::vector<std::pair<std::string, barcode>>& modules);

}  // namespace pmod
