#pragma once

// The ambient poset: Z^n with the coordinatewise order and the diagonal
// flow p |-> p + t*(1,...,1).

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pmod/errors.hpp"

namespace pmod {

using coord_t = std::int64_t;

struct grid_point {
  std::vector<coord_t> xs;

  grid_point() = default;
  explicit grid_point(std::vector<coord_t> coords) : xs(std::move(coords)) {}
  grid_point(std::initializer_list<coord_t> coords) : xs(coords) {}

  std::size_t dim() const { return xs.size(); }
  coord_t operator[](std::size_t i) const { return xs[i]; }
  coord_t& operator[](std::size_t i) { return xs[i]; }

  // Lexicographic order; used only as a container/canonicalization order,
  // not as the poset order.
  friend auto operator<=>(const grid_point&, const grid_point&) = default;
};

std::string to_string(const grid_point& p);

void require_same_dim(const grid_point& p, const grid_point& q);

// Coordinatewise partial order p <= q.
bool leq(const grid_point& p, const grid_point& q);

// Strict comparability in either direction.
bool comparable(const grid_point& p, const grid_point& q);

// All r with p <= r <= q (the integer box between comparable endpoints).
// Throws if !leq(p, q).
std::vector<grid_point> box(const grid_point& p, const grid_point& q);

// Diagonal flow: adds t to every coordinate. Checked for overflow.
grid_point flow(const grid_point& p, coord_t t);

// Number of points in box(p, q) without materializing it.
std::uint64_t box_volume(const grid_point& p, const grid_point& q);

}  // namespace pmod
