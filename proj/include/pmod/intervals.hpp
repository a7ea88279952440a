#pragma once

// Finite intervals of Z^n: validated point sets that are poset-convex and
// poset-connected, plus constructors (rectangles, truncated uppersets and
// downsets, rasterized convex polygons) and family-level checks.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pmod/grid_poset.hpp"

namespace pmod {

// Canonical finite subset of Z^n: lexicographically sorted, duplicate-free,
// all points of one dimension. May be empty (then the dimension is whatever
// the caller declared).
class point_set {
 public:
  point_set(std::size_t dim, std::vector<grid_point> pts);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  bool contains(const grid_point& p) const;

  const std::vector<grid_point>& points() const { return pts_; }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

  friend bool operator==(const point_set&, const point_set&) = default;

 private:
  std::size_t dim_;
  std::vector<grid_point> pts_;
};

// True iff every box between comparable members stays inside the set.
bool is_poset_convex(const point_set& s);

// True iff the comparability graph of the set is connected. The empty set
// and singletons count as connected.
bool is_poset_connected(const point_set& s);

// Poset-convex point set (connectivity not required). The canonical home of
// intersections before they are split into interval components.
class convex_subset {
 public:
  static convex_subset validate(point_set s);

  const point_set& points() const { return pts_; }
  std::size_t dim() const { return pts_.dim(); }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  bool contains(const grid_point& p) const { return pts_.contains(p); }

  friend bool operator==(const convex_subset&, const convex_subset&) = default;

 private:
  explicit convex_subset(point_set s) : pts_(std::move(s)) {}
  point_set pts_;
};

// Nonempty validated interval: poset-convex and poset-connected.
class interval_set {
 public:
  static interval_set validate(point_set s);
  static interval_set validate(std::size_t dim, std::vector<grid_point> pts);

  const point_set& points() const { return pts_; }
  std::size_t dim() const { return pts_.dim(); }
  std::size_t size() const { return pts_.size(); }
  bool contains(const grid_point& p) const { return pts_.contains(p); }

  // Componentwise min / max over the support.
  const grid_point& bbox_min() const { return bbox_min_; }
  const grid_point& bbox_max() const { return bbox_max_; }

  // Largest t >= 0 with I and its diagonal shift by t still meeting.
  coord_t diag_extent() const { return diag_extent_; }

  friend bool operator==(const interval_set&, const interval_set&) = default;

 private:
  interval_set(point_set s, grid_point lo, grid_point hi, coord_t ext)
      : pts_(std::move(s)), bbox_min_(std::move(lo)), bbox_max_(std::move(hi)), diag_extent_(ext) {}
  point_set pts_;
  grid_point bbox_min_, bbox_max_;
  coord_t diag_extent_;
};

using barcode = std::vector<interval_set>;

// Interval components of a poset-convex set, in increasing order of their
// lexicographically least point. Their disjoint union is the input.
std::vector<interval_set> components(const convex_subset& s);

// Set intersection; always poset-convex.
convex_subset intersect(const interval_set& a, const interval_set& b);

// { p : p + t*(1,..,1) in I }, i.e. I translated by -t along the diagonal.
interval_set shift(const interval_set& i, coord_t t);
point_set shift(const point_set& s, coord_t t);

// True iff I meets its diagonal shift by eps nowhere. eps >= 0.
bool diag_shift_disjoint(const interval_set& i, coord_t eps);

interval_set make_rect(const grid_point& lo, const grid_point& hi);

// Points of box(window_lo, window_hi) dominating at least one generator.
// Throws if the result is empty or truncation disconnects it.
interval_set make_upperset_in_window(const std::vector<grid_point>& generators,
                                     const grid_point& window_lo,
                                     const grid_point& window_hi);

// Dual: points dominated by at least one generator.
interval_set make_downset_in_window(const std::vector<grid_point>& generators,
                                    const grid_point& window_lo,
                                    const grid_point& window_hi);

struct rational {
  coord_t num = 0;
  coord_t den = 1;
  friend bool operator==(const rational&, const rational&) = default;
};

using polygon_vertex = std::pair<rational, rational>;

// Lattice points strictly inside the convex polygon scaled by `scale`
// (2-D only), validated as an interval. Throws when the rasterization is
// empty or fails validation; callers increase the scale in that case.
interval_set rasterize_convex_polygon(const std::vector<polygon_vertex>& vertices,
                                      coord_t scale);

// Lattice points strictly inside an integer convex polygon (no scaling).
std::vector<grid_point> lattice_points_strictly_inside(const std::vector<grid_point>& poly);

struct closure_report {
  bool closed = true;
  // Indices of the first pair whose intersection splits into >= 2 interval
  // components, when not closed.
  std::optional<std::pair<std::size_t, std::size_t>> violating;
};

// Geometric pairwise check: every intersection is empty or one interval.
closure_report is_intersection_closed(const barcode& family);

}  // namespace pmod
