#include "pmod/grid_poset.hpp"

#include <sstream>

namespace pmod {

std::string to_string(const grid_point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (i) os << ',';
    os << p.xs[i];
  }
  os << ')';
  return os.str();
}

void require_same_dim(const grid_point& p, const grid_point& q) {
  if (p.dim() != q.dim())
    throw dimension_mismatch("points of dimension " + std::to_string(p.dim()) +
                             " and " + std::to_string(q.dim()) + " mixed");
}

bool leq(const grid_point& p, const grid_point& q) {
  require_same_dim(p, q);
  for (std::size_t i = 0; i < p.dim(); ++i)
    if (p.xs[i] > q.xs[i]) return false;
  return true;
}

bool comparable(const grid_point& p, const grid_point& q) {
  return leq(p, q) || leq(q, p);
}

std::uint64_t box_volume(const grid_point& p, const grid_point& q) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < p.dim(); ++i) {
    std::uint64_t side = static_cast<std::uint64_t>(q.xs[i] - p.xs[i]) + 1;
    if (v > UINT64_MAX / side) throw coordinate_overflow("box too large");
    v *= side;
  }
  return v;
}

std::vector<grid_point> box(const grid_point& p, const grid_point& q) {
  if (!leq(p, q))
    throw error("box endpoints not ordered: " + to_string(p) + " !<= " + to_string(q));
  const std::size_t n = p.dim();
  std::vector<grid_point> out;
  out.reserve(static_cast<std::size_t>(box_volume(p, q)));
  grid_point cur = p;
  while (true) {
    out.push_back(cur);
    std::size_t i = 0;
    for (; i < n; ++i) {
      if (cur.xs[i] < q.xs[i]) {
        ++cur.xs[i];
        for (std::size_t j = 0; j < i; ++j) cur.xs[j] = p.xs[j];
        break;
      }
    }
    if (i == n) break;
  }
  return out;
}

grid_point flow(const grid_point& p, coord_t t) {
  grid_point out = p;
  for (auto& x : out.xs) {
    coord_t r;
    if (__builtin_add_overflow(x, t, &r))
      throw coordinate_overflow("flow overflows coordinate range");
    x = r;
  }
  return out;
}

}  // namespace pmod
