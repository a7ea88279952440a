#pragma once

// Interleavings of interval modules: triviality tests, the geometric
// criterion for pairs of intervals, pairwise interleaving distance, and the
// exhaustive module-level oracle that searches scalar matrices over a small
// prime field.

#include <cstdint>
#include <optional>

#include "pmod/intervals.hpp"
#include "pmod/morphisms.hpp"

namespace pmod {

using epsilon_t = coord_t;  // interleaving shifts, in grid units

// The eps-transition morphism of C(I) is zero exactly when I misses its
// diagonal shift by eps.
bool is_trivial(const interval_set& i, epsilon_t eps);

// Diagonal matrix of transition morphisms M -> M(delta): entry (i, i) is 1
// when bar i is delta-significant, else absent.
morphism_matrix transition_matrix(const barcode& m, epsilon_t delta, const prime_field& field);

// One-sided (left-triangle) interleaving criterion for the ordered pair
// (C(I), C(J)). Requires single-component intersections in the two
// morphism-existence tests; throws multi_component_error otherwise.
bool left_interleaved(const interval_set& i, const interval_set& j, epsilon_t eps);

// Full interleaving of C(I) and C(J); both one-sided triangles.
bool pair_interleaved(const interval_set& i, const interval_set& j, epsilon_t eps);

// Interleaving with the zero module.
bool pair_interleaved_with_zero(const interval_set& i, epsilon_t eps);

// Past this eps the two intervals (or either one alone) are interleaved
// through zero morphisms, so distance scans may stop.
epsilon_t pair_search_bound(const interval_set& i, const interval_set& j);

epsilon_t pair_distance(const interval_set& i, const interval_set& j);
epsilon_t pair_distance_to_zero(const interval_set& i);

struct oracle_options {
  prime_field field{2};
  std::size_t entry_budget = 24;           // max number of free scalar entries
  std::uint64_t enumeration_cap = 1u << 24;  // max assignments on the enumerated side
};

struct interleaving_witness {
  morphism_matrix f;  // M -> N(eps)
  morphism_matrix g;  // N -> M(eps)
};

struct oracle_result {
  bool exists = false;
  std::optional<interleaving_witness> witness;
};

// Ground-truth module-level test: does any assignment of field scalars to
// the admissible entries of f: M -> N(eps) and g: N -> M(eps) satisfy both
// triangle identities? Entries are admissible where a nonzero morphism
// exists between the bars. Equations are evaluated per interval component of
// each triangle support. Deterministic: the witness returned is the
// lexicographically first over the enumerated side, entries ordered by
// (source index, target index).
oracle_result oracle_interleaving_exists(const barcode& m, const barcode& n, epsilon_t eps,
                                         const oracle_options& opts);

epsilon_t module_search_bound(const barcode& m, const barcode& n);

// Smallest eps in [0, bound] with an interleaving; the bound always admits
// one because every bar is by then trivial at 2*eps.
epsilon_t oracle_module_distance(const barcode& m, const barcode& n, const oracle_options& opts);

}  // namespace pmod
