#pragma once

// Parametric generators: the two named module pairs used throughout the
// tests (a hook that separates Hausdorff from interleaving distance, and a
// hexagon family approaching the factor-2 bound), plus seeded random
// families of rectangles and uppersets.

#include <cstdint>
#include <optional>

#include "pmod/intervals.hpp"

namespace pmod {

struct module_pair {
  barcode m;
  barcode n;
};

// M = {I, J}: two a x a squares placed anti-diagonally; N = {K}: the same
// squares joined by a diagonally thin staircase band into one interval.
// The band keeps K connected while leaving its 2-shift core split between
// the two square ends, which is what lets a 1-interleaving of the modules
// coexist with pairwise distances of ceil(a/2).
module_pair instability_instance(coord_t a);

struct tightness_params {
  coord_t delta_num = 1;
  coord_t delta_den = 1;
  coord_t scale = 2;
  // Tail size in multiples of 2*scale; any value >= 2 yields the same
  // distances.
  std::optional<coord_t> ray_steps;
};

// M = {I, J}, N = {K} at resolution `scale`: I is the strict interior of a
// square of side (4 - 2*delta)*scale; K covers the double-shift core of I
// and runs through a diagonally thin ramp into a far square tail; J is the
// intersection of K's two scale-shifts, i.e. the eroded tail. The module
// distance comes out to exactly `scale` while the Hausdorff distance tracks
// (2 - delta) * scale, pinned by the square's lifetime.
module_pair tightness_instance(const tightness_params& params);

// Deterministic pseudo-random rectangles. Generator id "splitmix64-rect-v1":
// a splitmix64 stream seeded as given, consumed bar-major then axis-major,
// drawing for each axis first the lower corner uniformly in
// [coord_min, coord_max] and then the extent uniformly in
// [0, min(max_side, coord_max - lo)].
barcode random_rect_barcode(std::size_t count, coord_t coord_min, coord_t coord_max,
                            coord_t max_side, std::uint64_t seed, std::size_t dim = 2);

// Deterministic pseudo-random window-truncated uppersets. Generator id
// "splitmix64-upperset-v1": for each bar, 1 + (draw % max_generators)
// generators, each drawn axis-major uniformly inside the window.
barcode random_upperset_barcode(std::size_t count, const grid_point& window_lo,
                                const grid_point& window_hi, std::size_t max_generators,
                                std::uint64_t seed);

struct splitmix64 {
  std::uint64_t state;
  explicit splitmix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9E3779B97f4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  // Uniform draw in [lo, hi].
  coord_t range(coord_t lo, coord_t hi) {
    return lo + static_cast<coord_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

}  // namespace pmod
