#include "pmod/constructions.hpp"

#include <algorithm>

namespace pmod {

module_pair instability_instance(coord_t a) {
  if (a < 1) throw error("instability parameter must be >= 1");
  if (a == 1) {
    interval_set unit = make_rect(grid_point{0, 0}, grid_point{1, 1});
    return {{unit, unit}, {unit}};
  }

  const coord_t d = a + 2;       // anti-diagonal offset between the squares
  const coord_t c = d + a - 1;   // the inner staircase hugs x + y = c

  interval_set i = make_rect(grid_point{0, d}, grid_point{a - 1, d + a - 1});
  interval_set j = make_rect(grid_point{d, 0}, grid_point{d + a - 1, a - 1});

  // K column by column: the upper-left square, a two-cell-thick staircase
  // down the anti-diagonal, then the lower-right square. The staircase has
  // no diagonal pair of its own, so the core of K splits into the two
  // square cores.
  std::vector<grid_point> pts;
  for (coord_t x = 0; x <= d + a - 1; ++x) {
    coord_t lo, hi;
    if (x <= a - 1) {
      lo = d;
      hi = d + a - 1;
    } else if (x <= d - 1) {
      lo = c - x;
      hi = c - x + 1;
    } else if (x == d) {
      lo = 0;
      hi = a;  // the square column plus the last staircase cell
    } else {
      lo = 0;
      hi = a - 1;
    }
    for (coord_t y = lo; y <= hi; ++y) pts.push_back(grid_point{x, y});
  }
  interval_set k = interval_set::validate(2, std::move(pts));
  return {{i, j}, {k}};
}

module_pair tightness_instance(const tightness_params& params) {
  const coord_t num = params.delta_num, den = params.delta_den, sigma = params.scale;
  if (num < 1 || den < 1 || sigma < 1) throw error("tightness parameters must be positive");
  if (num >= 2 * den) throw error("delta must lie in (0, 2)");
  if ((sigma * num) % den != 0)
    throw error("delta * scale must be integral; refine the scale");
  const coord_t d = sigma * num / den;
  const coord_t side = 4 * sigma - 2 * d;  // square side in grid units
  if (side < 2)
    throw validation_error("square degenerates at this scale; increase the scale");

  interval_set i = make_rect(grid_point{1, 1}, grid_point{side - 1, side - 1});

  // Tail size in multiples of 2*scale; any value >= 2 yields the same
  // distances, the tail just grows.
  const coord_t k = params.ray_steps.value_or(2);
  if (k < 2) throw error("ray steps must be at least 2");
  const coord_t tail = 2 * sigma * k;

  // K column by column. When the inner core of I is alive at shift 2*scale
  // (side >= 2*scale + 2), K needs a body block covering exactly that core;
  // a diagonally thin staircase ramp then drops to a far square tail whose
  // erosion by the scale is the second bar J. The ramp has no diagonal pair
  // of its own, so the double-shift core of K splits cleanly into body and
  // tail parts and the eroded set stays one interval.
  const bool body = side >= 2 * sigma + 2;
  const coord_t ramp = sigma;
  std::vector<grid_point> pts;
  auto add_column = [&pts](coord_t x, coord_t ylo, coord_t yhi) {
    for (coord_t y = ylo; y <= yhi; ++y) pts.push_back(grid_point{x, y});
  };
  coord_t tail_x, tail_top;
  if (body) {
    for (coord_t x = sigma + 1; x <= side - sigma - 1; ++x)
      add_column(x, sigma + 1, side - sigma - 1);
    for (coord_t step = 0; step < ramp; ++step)
      add_column(side - sigma + step, sigma - step, sigma + 1 - step);
    tail_x = side - sigma + ramp;
    tail_top = sigma + 1 - ramp;
  } else {
    // The core of I dies before 2*scale; K is the bare tail anchored just
    // below-right of the corner (scale, side - scale).
    tail_x = sigma + 1;
    tail_top = side - sigma - 1;
  }
  for (coord_t x = tail_x; x <= tail_x + tail; ++x) add_column(x, tail_top - tail, tail_top);
  interval_set kk = interval_set::validate(2, std::move(pts));

  convex_subset j_raw = intersect(shift(kk, sigma), shift(kk, -sigma));
  auto j_comps = components(j_raw);
  if (j_comps.size() != 1)
    throw validation_error("eroded tail is not a single interval; increase the scale");
  interval_set j = j_comps.front();

  if (!intersect(i, j).empty())
    throw validation_error("square and eroded tail are expected to be disjoint");

  return {{i, j}, {kk}};
}

barcode random_rect_barcode(std::size_t count, coord_t coord_min, coord_t coord_max,
                            coord_t max_side, std::uint64_t seed, std::size_t dim) {
  if (coord_min > coord_max) throw error("empty coordinate range");
  if (max_side < 0) throw error("max_side must be >= 0");
  splitmix64 rng(seed);
  barcode out;
  out.reserve(count);
  for (std::size_t b = 0; b < count; ++b) {
    grid_point lo(std::vector<coord_t>(dim, 0)), hi(std::vector<coord_t>(dim, 0));
    for (std::size_t ax = 0; ax < dim; ++ax) {
      coord_t l = rng.range(coord_min, coord_max);
      coord_t e = rng.range(0, std::min(max_side, coord_max - l));
      lo.xs[ax] = l;
      hi.xs[ax] = l + e;
    }
    out.push_back(make_rect(lo, hi));
  }
  return out;
}

barcode random_upperset_barcode(std::size_t count, const grid_point& window_lo,
                                const grid_point& window_hi, std::size_t max_generators,
                                std::uint64_t seed) {
  if (max_generators == 0) throw error("need at least one generator");
  splitmix64 rng(seed);
  barcode out;
  out.reserve(count);
  for (std::size_t b = 0; b < count; ++b) {
    std::size_t gens = 1 + static_cast<std::size_t>(rng.next() % max_generators);
    std::vector<grid_point> gen_pts;
    for (std::size_t g = 0; g < gens; ++g) {
      grid_point p(std::vector<coord_t>(window_lo.dim(), 0));
      for (std::size_t ax = 0; ax < window_lo.dim(); ++ax)
        p.xs[ax] = rng.range(window_lo.xs[ax], window_hi.xs[ax]);
      gen_pts.push_back(std::move(p));
    }
    out.push_back(make_upperset_in_window(gen_pts, window_lo, window_hi));
  }
  return out;
}

}  // namespace pmod
