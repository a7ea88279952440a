#include "pmod/morphisms.hpp"

#include <algorithm>
#include <numeric>

namespace pmod {

namespace {

bool is_component_of(const interval_set& q, const convex_subset& x) {
  if (q.size() > x.size() || q.size() == 0) return false;
  for (const auto& p : q.points())
    if (!x.contains(p)) return false;
  for (const auto& c : components(x))
    if (c == q) return true;
  return false;
}

}  // namespace

bool is_valid_component(const interval_set& q, const interval_set& i, const interval_set& j) {
  convex_subset x = intersect(i, j);
  if (!is_component_of(q, x))
    throw error("set is not an interval component of the intersection");
  for (const auto& p : q.points()) {
    for (const auto& below : i.points())
      if (leq(below, p) && !j.contains(below)) return false;
    for (const auto& above : j.points())
      if (leq(p, above) && !i.contains(above)) return false;
  }
  return true;
}

bool hom_exists(const interval_set& i, const interval_set& j) {
  convex_subset x = intersect(i, j);
  if (x.empty()) return false;
  auto comps = components(x);
  if (comps.size() >= 2)
    throw multi_component_error("intersection has " + std::to_string(comps.size()) +
                                " components; scalar calculus needs at most one");
  return is_valid_component(comps.front(), i, j);
}

std::size_t hom_dimension_bruteforce(const interval_set& i, const interval_set& j) {
  convex_subset x = intersect(i, j);
  const auto& pts = x.points().points();
  if (pts.empty()) return 0;

  // Union-find over equality constraints f_p = f_q for comparable p, q in
  // the intersection.
  std::vector<std::size_t> parent(pts.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      if (comparable(pts[a], pts[b])) parent[find(a)] = find(b);

  // Forced zeros: a square with one leg outside the intersection.
  std::vector<char> zero(pts.size(), 0);
  for (std::size_t a = 0; a < pts.size(); ++a) {
    for (const auto& below : i.points()) {
      if (leq(below, pts[a]) && !j.contains(below)) {
        zero[a] = 1;
        break;
      }
    }
    if (zero[a]) continue;
    for (const auto& above : j.points()) {
      if (leq(pts[a], above) && !i.contains(above)) {
        zero[a] = 1;
        break;
      }
    }
  }

  std::vector<char> class_zero(pts.size(), 0), seen(pts.size(), 0);
  for (std::size_t a = 0; a < pts.size(); ++a)
    if (zero[a]) class_zero[find(a)] = 1;
  std::size_t dim = 0;
  for (std::size_t a = 0; a < pts.size(); ++a) {
    std::size_t r = find(a);
    if (!seen[r]) {
      seen[r] = 1;
      if (!class_zero[r]) ++dim;
    }
  }
  return dim;
}

scalar_morphism make_scalar_morphism(const interval_set& source, const interval_set& target,
                                     scalar_t omega) {
  if (omega != 0 && !hom_exists(source, target))
    throw validation_error("no nonzero morphism exists between these intervals");
  return scalar_morphism{source, target, omega};
}

scalar_morphism compose(const scalar_morphism& f, const scalar_morphism& g,
                        const prime_field& field) {
  if (!(f.target == g.source)) throw error("composition targets do not match");
  const interval_set& i = f.source;
  const interval_set& j = f.target;
  const interval_set& k = g.target;
  if (components(intersect(i, j)).size() >= 2 || components(intersect(j, k)).size() >= 2 ||
      components(intersect(i, k)).size() >= 2)
    throw multi_component_error("composition outside the single-component setting");

  scalar_t omega = 0;
  if (f.omega != 0 && g.omega != 0) {
    convex_subset ik = intersect(i, k);
    if (!ik.empty()) {
      bool contained = true;
      for (const auto& p : ik.points())
        if (!j.contains(p)) {
          contained = false;
          break;
        }
      if (contained) omega = field.mul(f.omega, g.omega);
    }
  }
  return scalar_morphism{i, k, omega};
}

morphism_matrix::morphism_matrix(barcode source, barcode target, prime_field field)
    : src_(std::move(source)), dst_(std::move(target)), field_(field) {}

void morphism_matrix::set(std::size_t i, std::size_t j, scalar_t omega) {
  if (i >= src_.size() || j >= dst_.size()) throw error("morphism matrix index out of range");
  if (omega == 0) {
    entries_.erase({i, j});
    return;
  }
  if (!hom_exists(src_[i], dst_[j]))
    throw validation_error("nonzero entry requires a valid intersection component");
  entries_[{i, j}] = field_.reduce(omega);
}

scalar_t morphism_matrix::at(std::size_t i, std::size_t j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? scalar_t{0} : it->second;
}

morphism_matrix matrix_compose(const morphism_matrix& f, const morphism_matrix& g) {
  if (!(f.target() == g.source())) throw error("matrix composition barcodes do not match");
  if (!(f.field() == g.field())) throw error("matrix composition fields do not match");
  const prime_field& field = f.field();
  morphism_matrix out(f.source(), g.target(), field);
  for (std::size_t i = 0; i < f.source().size(); ++i) {
    for (std::size_t k = 0; k < g.target().size(); ++k) {
      scalar_t acc = 0;
      for (std::size_t j = 0; j < f.target().size(); ++j) {
        scalar_t a = f.at(i, j), b = g.at(j, k);
        if (a == 0 || b == 0) continue;
        scalar_morphism c = compose(scalar_morphism{f.source()[i], f.target()[j], a},
                                    scalar_morphism{g.source()[j], g.target()[k], b}, field);
        acc = field.add(acc, c.omega);
      }
      if (acc != 0) out.set(i, k, acc);
    }
  }
  return out;
}

}  // namespace pmod
