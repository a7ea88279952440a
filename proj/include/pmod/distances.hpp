#pragma once

// Barcode-level distances: Hausdorff (each bar close to some bar or to
// zero), bottleneck (injective matching of bars, leftovers close to zero),
// and the stability check hausdorff <= 2 * interleaving.

#include <optional>
#include <string>
#include <vector>

#include "pmod/interleaving.hpp"

namespace pmod {

// Matrix of pairwise interval interleaving distances (rows: bars of m,
// cols: bars of n). Honors the PMOD_THREADS row parallelism cap.
std::vector<std::vector<epsilon_t>> pair_distance_matrix(const barcode& m, const barcode& n);

epsilon_t hausdorff(const barcode& m, const barcode& n);

// Does an eps-matching exist: an injective pairing of eps-interleaved bars
// in which every unmatched bar is eps-interleaved with zero. Decided as a
// flow problem where droppable bars route through slack nodes.
bool eps_matching_exists(const barcode& m, const barcode& n, epsilon_t eps);

// Smallest eps admitting an eps-matching.
epsilon_t bottleneck(const barcode& m, const barcode& n);

struct hb_report {
  epsilon_t hausdorff = 0;
  epsilon_t bottleneck = 0;
};

// Computes both and enforces hausdorff <= bottleneck.
hb_report check_hausdorff_le_bottleneck(const barcode& m, const barcode& n);

enum class stability_status { pass, fail, inconclusive };

struct stability_report {
  epsilon_t hausdorff = 0;
  std::optional<epsilon_t> interleaving;  // exact oracle value when affordable
  epsilon_t interleaving_lower = 0;       // bracket when the oracle is out of budget
  epsilon_t interleaving_upper = 0;
  stability_status status = stability_status::pass;
  // hausdorff / interleaving with 0/0 resolved to 0; uses the exact value
  // when present, otherwise the upper end of the bracket.
  double ratio = 0.0;
};

std::string to_string(stability_status s);

stability_report verify_stability(const barcode& m, const barcode& n, const oracle_options& opts);

}  // namespace pmod
