#include "pmod/intervals.hpp"

#include <algorithm>
#include <numeric>

namespace pmod {

namespace {

struct union_find {
  std::vector<std::size_t> parent;
  explicit union_find(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void merge(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

coord_t compute_diag_extent(const point_set& s) {
  // Diagonal slices of a convex set are contiguous, so walking up from each
  // point finds the longest run.
  coord_t best = 0;
  for (const auto& p : s) {
    coord_t t = best + 1;
    while (true) {
      grid_point q = flow(p, t);
      if (!s.contains(q)) break;
      best = t;
      ++t;
    }
  }
  return best;
}

}  // namespace

point_set::point_set(std::size_t dim, std::vector<grid_point> pts)
    : dim_(dim), pts_(std::move(pts)) {
  for (const auto& p : pts_)
    if (p.dim() != dim_)
      throw dimension_mismatch("point " + to_string(p) + " does not have dimension " +
                               std::to_string(dim_));
  std::sort(pts_.begin(), pts_.end());
  pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

bool point_set::contains(const grid_point& p) const {
  return std::binary_search(pts_.begin(), pts_.end(), p);
}

bool is_poset_convex(const point_set& s) {
  // Equivalent local form of box containment: for every ordered pair p <= q
  // in S and every coordinate where they differ, q minus one step in that
  // coordinate is again in S. Descending induction recovers the full box.
  const auto& pts = s.points();
  const std::size_t n = pts.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq(pts[a], pts[b])) continue;
      for (std::size_t i = 0; i < s.dim(); ++i) {
        if (pts[b].xs[i] > pts[a].xs[i]) {
          grid_point r = pts[b];
          --r.xs[i];
          if (!s.contains(r)) return false;
        }
      }
    }
  }
  return true;
}

bool is_poset_connected(const point_set& s) {
  const auto& pts = s.points();
  if (pts.size() <= 1) return true;
  union_find uf(pts.size());
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      if (comparable(pts[a], pts[b])) uf.merge(a, b);
  const std::size_t root = uf.find(0);
  for (std::size_t a = 1; a < pts.size(); ++a)
    if (uf.find(a) != root) return false;
  return true;
}

convex_subset convex_subset::validate(point_set s) {
  if (!is_poset_convex(s)) throw validation_error("point set is not poset-convex");
  return convex_subset(std::move(s));
}

interval_set interval_set::validate(point_set s) {
  if (s.empty()) throw validation_error("interval must be nonempty");
  if (!is_poset_convex(s)) throw validation_error("point set is not poset-convex");
  if (!is_poset_connected(s)) throw validation_error("point set is not poset-connected");
  grid_point lo = s.points().front(), hi = s.points().front();
  for (const auto& p : s) {
    for (std::size_t i = 0; i < s.dim(); ++i) {
      lo.xs[i] = std::min(lo.xs[i], p.xs[i]);
      hi.xs[i] = std::max(hi.xs[i], p.xs[i]);
    }
  }
  coord_t ext = compute_diag_extent(s);
  return interval_set(std::move(s), std::move(lo), std::move(hi), ext);
}

interval_set interval_set::validate(std::size_t dim, std::vector<grid_point> pts) {
  return validate(point_set(dim, std::move(pts)));
}

std::vector<interval_set> components(const convex_subset& s) {
  const auto& pts = s.points().points();
  if (pts.empty()) return {};
  union_find uf(pts.size());
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      if (comparable(pts[a], pts[b])) uf.merge(a, b);
  std::vector<std::vector<grid_point>> groups(pts.size());
  for (std::size_t a = 0; a < pts.size(); ++a) groups[uf.find(a)].push_back(pts[a]);
  std::vector<interval_set> out;
  for (auto& g : groups) {
    if (g.empty()) continue;
    out.push_back(interval_set::validate(s.dim(), std::move(g)));
  }
  std::sort(out.begin(), out.end(), [](const interval_set& x, const interval_set& y) {
    return x.points().points().front() < y.points().points().front();
  });
  return out;
}

convex_subset intersect(const interval_set& a, const interval_set& b) {
  if (a.dim() != b.dim()) throw dimension_mismatch("intersecting intervals of different dimension");
  std::vector<grid_point> out;
  std::set_intersection(a.points().begin(), a.points().end(), b.points().begin(),
                        b.points().end(), std::back_inserter(out));
  return convex_subset::validate(point_set(a.dim(), std::move(out)));
}

point_set shift(const point_set& s, coord_t t) {
  std::vector<grid_point> out;
  out.reserve(s.size());
  for (const auto& p : s) out.push_back(flow(p, -t));
  return point_set(s.dim(), std::move(out));
}

interval_set shift(const interval_set& i, coord_t t) {
  // Translation by a poset isomorphism; revalidation cannot fail, but the
  // cached data must be rebuilt.
  return interval_set::validate(shift(i.points(), t));
}

bool diag_shift_disjoint(const interval_set& i, coord_t eps) {
  if (eps < 0) throw error("diagonal shift test needs eps >= 0");
  return eps > i.diag_extent();
}

interval_set make_rect(const grid_point& lo, const grid_point& hi) {
  return interval_set::validate(lo.dim(), box(lo, hi));
}

namespace {

interval_set make_generated_set(const std::vector<grid_point>& generators,
                                const grid_point& lo, const grid_point& hi, bool upper) {
  if (!leq(lo, hi)) throw error("window corners not ordered");
  if (generators.empty()) throw error("need at least one generator");
  for (const auto& g : generators) require_same_dim(g, lo);
  std::vector<grid_point> pts;
  for (const auto& p : box(lo, hi)) {
    for (const auto& g : generators) {
      if (upper ? leq(g, p) : leq(p, g)) {
        pts.push_back(p);
        break;
      }
    }
  }
  if (pts.empty())
    throw validation_error(upper ? "upperset misses the window" : "downset misses the window");
  return interval_set::validate(lo.dim(), std::move(pts));
}

}  // namespace

interval_set make_upperset_in_window(const std::vector<grid_point>& generators,
                                     const grid_point& window_lo, const grid_point& window_hi) {
  return make_generated_set(generators, window_lo, window_hi, /*upper=*/true);
}

interval_set make_downset_in_window(const std::vector<grid_point>& generators,
                                    const grid_point& window_lo, const grid_point& window_hi) {
  return make_generated_set(generators, window_lo, window_hi, /*upper=*/false);
}

namespace {

using wide = __int128;

// Sign of the cross product (b - a) x (p - a) for integer points.
int cross_sign(coord_t ax, coord_t ay, coord_t bx, coord_t by, coord_t px, coord_t py) {
  wide v = wide(bx - ax) * wide(py - ay) - wide(by - ay) * wide(px - ax);
  return v > 0 ? 1 : v < 0 ? -1 : 0;
}

}  // namespace

std::vector<grid_point> lattice_points_strictly_inside(const std::vector<grid_point>& poly) {
  if (poly.size() < 3) throw error("polygon needs at least 3 vertices");
  for (const auto& v : poly)
    if (v.dim() != 2) throw dimension_mismatch("polygon vertices must be 2-D");

  // Drop consecutive duplicates (degenerate instances collapse vertices).
  std::vector<grid_point> vs;
  for (const auto& v : poly)
    if (vs.empty() || !(vs.back() == v)) vs.push_back(v);
  while (vs.size() > 1 && vs.front() == vs.back()) vs.pop_back();
  if (vs.size() < 3) throw validation_error("polygon degenerates to a segment");

  // Orientation from the doubled signed area.
  wide area2 = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto& a = vs[i];
    const auto& b = vs[(i + 1) % vs.size()];
    area2 += wide(a.xs[0]) * wide(b.xs[1]) - wide(b.xs[0]) * wide(a.xs[1]);
  }
  if (area2 == 0) throw validation_error("polygon has no interior");
  const int orient = area2 > 0 ? 1 : -1;

  coord_t xmin = vs[0].xs[0], xmax = xmin, ymin = vs[0].xs[1], ymax = ymin;
  for (const auto& v : vs) {
    xmin = std::min(xmin, v.xs[0]);
    xmax = std::max(xmax, v.xs[0]);
    ymin = std::min(ymin, v.xs[1]);
    ymax = std::max(ymax, v.xs[1]);
  }

  std::vector<grid_point> pts;
  for (coord_t x = xmin + 1; x <= xmax - 1; ++x) {
    for (coord_t y = ymin + 1; y <= ymax - 1; ++y) {
      bool inside = true;
      for (std::size_t i = 0; i < vs.size() && inside; ++i) {
        const auto& a = vs[i];
        const auto& b = vs[(i + 1) % vs.size()];
        if (a == b) continue;
        if (cross_sign(a.xs[0], a.xs[1], b.xs[0], b.xs[1], x, y) * orient <= 0) inside = false;
      }
      if (inside) pts.push_back(grid_point{x, y});
    }
  }
  return pts;
}

interval_set rasterize_convex_polygon(const std::vector<polygon_vertex>& vertices,
                                      coord_t scale) {
  if (scale <= 0) throw error("scale must be positive");
  if (vertices.size() < 3) throw error("polygon needs at least 3 vertices");

  // Scale to a common integer grid: vertex (n/d) * scale lands on the lattice
  // refined by L = lcm of denominators; we test lattice points of the
  // original grid, i.e. multiples of L on the refined grid.
  coord_t lcm = 1;
  for (const auto& [x, y] : vertices) {
    if (x.den <= 0 || y.den <= 0) throw error("rational denominators must be positive");
    lcm = std::lcm(lcm, std::lcm(x.den, y.den));
  }
  std::vector<grid_point> refined;
  refined.reserve(vertices.size());
  for (const auto& [x, y] : vertices)
    refined.push_back(grid_point{x.num * (lcm / x.den) * scale, y.num * (lcm / y.den) * scale});

  // Strict interior test on the refined lattice, keeping only points whose
  // both coordinates are divisible by L.
  std::vector<grid_point> inside = lattice_points_strictly_inside(refined);
  std::vector<grid_point> pts;
  for (const auto& p : inside)
    if (p.xs[0] % lcm == 0 && p.xs[1] % lcm == 0)
      pts.push_back(grid_point{p.xs[0] / lcm, p.xs[1] / lcm});

  if (pts.empty()) throw validation_error("rasterization is empty; increase the scale");
  return interval_set::validate(2, std::move(pts));
}

closure_report is_intersection_closed(const barcode& family) {
  for (std::size_t a = 0; a < family.size(); ++a) {
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      if (components(intersect(family[a], family[b])).size() >= 2)
        return {false, std::make_pair(a, b)};
    }
  }
  return {true, std::nullopt};
}

}  // namespace pmod
