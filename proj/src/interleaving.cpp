#include "pmod/interleaving.hpp"

#include <algorithm>
#include <cmath>

namespace pmod {

bool is_trivial(const interval_set& i, epsilon_t eps) {
  if (eps < 0) throw error("triviality test needs eps >= 0");
  return eps > i.diag_extent();
}

morphism_matrix transition_matrix(const barcode& m, epsilon_t delta, const prime_field& field) {
  barcode shifted;
  shifted.reserve(m.size());
  for (const auto& bar : m) shifted.push_back(shift(bar, delta));
  morphism_matrix out(m, std::move(shifted), field);
  for (std::size_t i = 0; i < m.size(); ++i)
    if (!is_trivial(m[i], delta)) out.set(i, i, 1);
  return out;
}

namespace {

// Nonempty containment test: S subset of T, with S known nonempty.
bool subset_of(const point_set& s, const interval_set& t) {
  for (const auto& p : s)
    if (!t.contains(p)) return false;
  return true;
}

}  // namespace

bool left_interleaved(const interval_set& i, const interval_set& j, epsilon_t eps) {
  if (eps < 0) throw error("interleaving test needs eps >= 0");
  if (is_trivial(i, 2 * eps)) return true;
  interval_set j_eps = shift(j, eps);
  interval_set i_eps = shift(i, eps);
  if (!hom_exists(i, j_eps)) return false;
  if (!hom_exists(j, i_eps)) return false;
  convex_subset core = intersect(i, shift(i, 2 * eps));
  return !core.empty() && subset_of(core.points(), j_eps);
}

bool pair_interleaved(const interval_set& i, const interval_set& j, epsilon_t eps) {
  return left_interleaved(i, j, eps) && left_interleaved(j, i, eps);
}

bool pair_interleaved_with_zero(const interval_set& i, epsilon_t eps) {
  return is_trivial(i, 2 * eps);
}

namespace {

epsilon_t zero_threshold(const interval_set& i) {
  // Smallest eps with 2*eps exceeding the diagonal extent.
  return (i.diag_extent() + 2) / 2;
}

}  // namespace

epsilon_t pair_search_bound(const interval_set& i, const interval_set& j) {
  return 1 + std::max(zero_threshold(i), zero_threshold(j));
}

epsilon_t pair_distance(const interval_set& i, const interval_set& j) {
  const epsilon_t bound = pair_search_bound(i, j);
  for (epsilon_t eps = 0; eps <= bound; ++eps)
    if (pair_interleaved(i, j, eps)) return eps;
  throw error("pair distance scan exceeded its bound");  // unreachable
}

epsilon_t pair_distance_to_zero(const interval_set& i) { return zero_threshold(i); }

// ---------------------------------------------------------------------------
// Module-level oracle.

namespace {

struct bilinear_term {
  int x;  // index into f-entries
  int y;  // index into g-entries
};

struct equation {
  std::vector<bilinear_term> terms;
  scalar_t rhs = 0;
};

struct entry_key {
  std::size_t src, dst;
};

// Admissible entries of a matrix between two bar lists: indices where a
// nonzero morphism exists. Throws on multi-component intersections.
std::vector<std::vector<int>> admissible_entries(const barcode& rows, const barcode& cols,
                                                 std::vector<entry_key>& keys) {
  std::vector<std::vector<int>> idx(rows.size(), std::vector<int>(cols.size(), -1));
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b)
      if (hom_exists(rows[a], cols[b])) {
        idx[a][b] = static_cast<int>(keys.size());
        keys.push_back({a, b});
      }
  return idx;
}

// Coefficient of a composite through `mid` on the support component `q`:
// 1 when q lies inside mid, 0 when disjoint. A partial overlap would
// contradict consistency of composite morphisms, so it is a hard error.
int component_coefficient(const interval_set& q, const interval_set& mid) {
  std::size_t inside = 0;
  for (const auto& p : q.points())
    if (mid.contains(p)) ++inside;
  if (inside == 0) return 0;
  if (inside == q.size()) return 1;
  throw error("triangle support component straddles a middle interval");
}

struct oracle_problem {
  std::vector<entry_key> f_keys, g_keys;
  std::vector<std::vector<int>> f_idx, g_idx;  // [i][j] and [j][i]
  std::vector<equation> equations;
  bool trivially_infeasible = false;
};

oracle_problem build_problem(const barcode& m, const barcode& n, epsilon_t eps) {
  oracle_problem pr;
  barcode n_eps, m_eps, m_2eps, n_2eps;
  for (const auto& bar : n) n_eps.push_back(shift(bar, eps));
  for (const auto& bar : m) m_eps.push_back(shift(bar, eps));
  for (const auto& bar : m) m_2eps.push_back(shift(bar, 2 * eps));
  for (const auto& bar : n) n_2eps.push_back(shift(bar, 2 * eps));

  pr.f_idx = admissible_entries(m, n_eps, pr.f_keys);
  pr.g_idx = admissible_entries(n, m_eps, pr.g_keys);

  // Left triangle: g(eps) after f equals the 2eps transition of M.
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t i2 = 0; i2 < m.size(); ++i2) {
      convex_subset support = intersect(m[i], m_2eps[i2]);
      if (support.empty()) continue;
      for (const auto& q : components(support)) {
        equation eq;
        eq.rhs = (i == i2) ? 1 : 0;
        for (std::size_t j = 0; j < n.size(); ++j) {
          int xv = pr.f_idx[i][j], yv = pr.g_idx[j][i2];
          if (xv < 0 || yv < 0) continue;
          if (component_coefficient(q, n_eps[j]) == 1) eq.terms.push_back({xv, yv});
        }
        if (eq.terms.empty()) {
          if (eq.rhs != 0) pr.trivially_infeasible = true;
        } else {
          pr.equations.push_back(std::move(eq));
        }
      }
    }
  }

  // Right triangle: f(eps) after g equals the 2eps transition of N.
  for (std::size_t j = 0; j < n.size(); ++j) {
    for (std::size_t j2 = 0; j2 < n.size(); ++j2) {
      convex_subset support = intersect(n[j], n_2eps[j2]);
      if (support.empty()) continue;
      for (const auto& q : components(support)) {
        equation eq;
        eq.rhs = (j == j2) ? 1 : 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
          int yv = pr.g_idx[j][i], xv = pr.f_idx[i][j2];
          if (xv < 0 || yv < 0) continue;
          if (component_coefficient(q, m_eps[i]) == 1) eq.terms.push_back({xv, yv});
        }
        if (eq.terms.empty()) {
          if (eq.rhs != 0) pr.trivially_infeasible = true;
        } else {
          pr.equations.push_back(std::move(eq));
        }
      }
    }
  }
  return pr;
}

// Row-reduce and report whether the system A y = b over F_p is solvable.
bool gaussian_feasible(std::vector<std::vector<scalar_t>> rows, std::size_t nvars,
                       const prime_field& field) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < nvars && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    scalar_t inv = field.inv(rows[rank][col]);
    for (auto& v : rows[rank]) v = field.mul(v, inv);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      scalar_t factor = rows[r][col];
      for (std::size_t c = 0; c <= nvars; ++c)
        rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[rank][c]));
    }
    ++rank;
  }
  for (const auto& r : rows) {
    bool all_zero = true;
    for (std::size_t c = 0; c < nvars; ++c)
      if (r[c] != 0) {
        all_zero = false;
        break;
      }
    if (all_zero && r[nvars] != 0) return false;
  }
  return true;
}

// Lexicographically least solution of a feasible system, fixing variables
// one at a time.
std::vector<scalar_t> lex_min_solution(const std::vector<std::vector<scalar_t>>& base,
                                       std::size_t nvars, const prime_field& field) {
  std::vector<std::vector<scalar_t>> rows = base;
  std::vector<scalar_t> fixed(nvars, 0);
  for (std::size_t v = 0; v < nvars; ++v) {
    bool done = false;
    for (scalar_t val = 0; val < field.characteristic() && !done; ++val) {
      auto trial = rows;
      std::vector<scalar_t> pin(nvars + 1, 0);
      pin[v] = 1;
      pin[nvars] = val;
      trial.push_back(pin);
      if (gaussian_feasible(trial, nvars, field)) {
        rows = std::move(trial);
        fixed[v] = val;
        done = true;
      }
    }
    if (!done) throw error("lex-min extraction on infeasible system");
  }
  return fixed;
}

std::uint64_t checked_pow(std::uint64_t base, std::size_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t k = 0; k < e; ++k) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace

epsilon_t module_search_bound(const barcode& m, const barcode& n) {
  epsilon_t bound = 0;
  bool any = false;
  for (const auto* bc : {&m, &n})
    for (const auto& bar : *bc) {
      bound = std::max(bound, zero_threshold(bar));
      any = true;
    }
  return any ? bound + 1 : 0;
}

oracle_result oracle_interleaving_exists(const barcode& m, const barcode& n, epsilon_t eps,
                                         const oracle_options& opts) {
  if (eps < 0) throw error("interleaving test needs eps >= 0");
  const prime_field& field = opts.field;
  oracle_problem pr = build_problem(m, n, eps);
  if (pr.trivially_infeasible) return {false, std::nullopt};

  const std::size_t nx = pr.f_keys.size(), ny = pr.g_keys.size();
  if (nx + ny > opts.entry_budget)
    throw budget_exceeded("oracle would need " + std::to_string(nx + ny) +
                          " free entries, budget is " + std::to_string(opts.entry_budget));

  // Enumerate the smaller side; the other side then satisfies a linear
  // system. Enumerating f first keeps the documented witness order except
  // when g is strictly smaller.
  const bool enumerate_f = nx <= ny;
  const std::size_t n_outer = enumerate_f ? nx : ny;
  const std::size_t n_inner = enumerate_f ? ny : nx;
  if (checked_pow(field.characteristic(), n_outer, opts.enumeration_cap) > opts.enumeration_cap)
    throw budget_exceeded("oracle enumeration space exceeds the cap");

  std::vector<scalar_t> outer(n_outer, 0);
  auto outer_of = [&](const bilinear_term& t) { return enumerate_f ? t.x : t.y; };
  auto inner_of = [&](const bilinear_term& t) { return enumerate_f ? t.y : t.x; };

  while (true) {
    // Linear system over the inner side for this outer assignment.
    std::vector<std::vector<scalar_t>> rows;
    bool consistent = true;
    for (const auto& eq : pr.equations) {
      std::vector<scalar_t> row(n_inner + 1, 0);
      for (const auto& t : eq.terms) {
        std::size_t iv = static_cast<std::size_t>(inner_of(t));
        row[iv] = field.add(row[iv], outer[static_cast<std::size_t>(outer_of(t))]);
      }
      row[n_inner] = eq.rhs;
      bool empty = true;
      for (std::size_t c = 0; c < n_inner; ++c)
        if (row[c] != 0) {
          empty = false;
          break;
        }
      if (empty) {
        if (eq.rhs != 0) {
          consistent = false;
          break;
        }
      } else {
        rows.push_back(std::move(row));
      }
    }

    if (consistent && gaussian_feasible(rows, n_inner, field)) {
      std::vector<scalar_t> inner =
          n_inner ? lex_min_solution(rows, n_inner, field) : std::vector<scalar_t>{};
      const std::vector<scalar_t>& xs = enumerate_f ? outer : inner;
      const std::vector<scalar_t>& ys = enumerate_f ? inner : outer;

      barcode n_eps, m_eps;
      for (const auto& bar : n) n_eps.push_back(shift(bar, eps));
      for (const auto& bar : m) m_eps.push_back(shift(bar, eps));
      morphism_matrix f(m, n_eps, field), g(n, m_eps, field);
      for (std::size_t k = 0; k < nx; ++k)
        if (xs[k] != 0) f.set(pr.f_keys[k].src, pr.f_keys[k].dst, xs[k]);
      for (std::size_t k = 0; k < ny; ++k)
        if (ys[k] != 0) g.set(pr.g_keys[k].src, pr.g_keys[k].dst, ys[k]);

      // Re-evaluate every equation against the chosen scalars.
      for (const auto& eq : pr.equations) {
        scalar_t acc = 0;
        for (const auto& t : eq.terms)
          acc = field.add(acc, field.mul(xs[static_cast<std::size_t>(t.x)],
                                         ys[static_cast<std::size_t>(t.y)]));
        if (acc != eq.rhs) throw error("oracle witness failed re-evaluation");
      }
      return {true, interleaving_witness{std::move(f), std::move(g)}};
    }

    // Advance the odometer (lexicographic ascent).
    std::size_t pos = n_outer;
    while (pos > 0) {
      --pos;
      if (outer[pos] + 1 < field.characteristic()) {
        ++outer[pos];
        std::fill(outer.begin() + static_cast<std::ptrdiff_t>(pos) + 1, outer.end(), 0);
        break;
      }
      if (pos == 0) return {false, std::nullopt};
    }
    if (n_outer == 0) return {false, std::nullopt};
  }
}

epsilon_t oracle_module_distance(const barcode& m, const barcode& n, const oracle_options& opts) {
  const epsilon_t bound = module_search_bound(m, n);
  for (epsilon_t eps = 0; eps <= bound; ++eps)
    if (oracle_interleaving_exists(m, n, eps, opts).exists) return eps;
  throw error("module distance scan exceeded its bound");  // unreachable
}

}  // namespace pmod
