#include <doctest.h>

#include "pmod/constructions.hpp"
#include "pmod/distances.hpp"

using namespace pmod;

namespace {

interval_set rect(coord_t x0, coord_t y0, coord_t x1, coord_t y1) {
  return make_rect(grid_point{x0, y0}, grid_point{x1, y1});
}

barcode random_bc(splitmix64& rng, std::size_t max_bars) {
  std::size_t bars = 1 + rng.next() % max_bars;
  return random_rect_barcode(bars, -6, 6, 4, rng.next());
}

}  // namespace

TEST_CASE("hausdorff basics") {
  barcode m = {rect(0, 0, 3, 3), rect(2, 2, 6, 6)};
  CHECK(hausdorff(m, m) == 0);
  CHECK(hausdorff({rect(0, 0, 3, 3)}, {rect(1, 1, 4, 4)}) == 1);
  CHECK(hausdorff({}, {}) == 0);
  CHECK(hausdorff(m, {}) == 3);  // the longest bar dies last
}

TEST_CASE("bottleneck basics") {
  barcode m = {rect(0, 0, 3, 3), rect(2, 2, 6, 6)};
  CHECK(bottleneck(m, m) == 0);
  CHECK(bottleneck({rect(0, 0, 3, 3)}, {rect(1, 1, 4, 4)}) == 1);
  CHECK(bottleneck(m, {}) == 3);

  // Multiplicity forces the second copy to die rather than share a partner.
  barcode two = {rect(0, 0, 4, 4), rect(0, 0, 4, 4)};
  barcode one = {rect(0, 0, 4, 4)};
  CHECK(hausdorff(two, one) == 0);
  CHECK(bottleneck(two, one) == 3);
}

TEST_CASE("hausdorff never exceeds bottleneck on samples") {
  splitmix64 rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    barcode m = random_bc(rng, 3), n = random_bc(rng, 3);
    hb_report r = check_hausdorff_le_bottleneck(m, n);
    CHECK(r.hausdorff <= r.bottleneck);
  }
}

TEST_CASE("metric axioms on samples") {
  splitmix64 rng(103);
  for (int trial = 0; trial < 25; ++trial) {
    barcode m = random_bc(rng, 3), n = random_bc(rng, 3), l = random_bc(rng, 3);
    epsilon_t hmn = hausdorff(m, n), hnm = hausdorff(n, m);
    CHECK(hmn == hnm);
    CHECK(hausdorff(m, m) == 0);
    CHECK(hausdorff(m, l) <= hmn + hausdorff(n, l));

    epsilon_t bmn = bottleneck(m, n);
    CHECK(bmn == bottleneck(n, m));
    CHECK(bottleneck(m, l) <= bmn + bottleneck(n, l));
  }
}

TEST_CASE("distances are shift-invariant") {
  splitmix64 rng(107);
  for (int trial = 0; trial < 20; ++trial) {
    barcode m = random_bc(rng, 3), n = random_bc(rng, 3);
    coord_t t = rng.range(-5, 5);
    barcode ms, ns;
    for (const auto& bar : m) ms.push_back(shift(bar, t));
    for (const auto& bar : n) ns.push_back(shift(bar, t));
    CHECK(hausdorff(ms, ns) == hausdorff(m, n));
    CHECK(bottleneck(ms, ns) == bottleneck(m, n));
  }
}

TEST_CASE("matching feasibility is monotone in eps") {
  splitmix64 rng(109);
  for (int trial = 0; trial < 20; ++trial) {
    barcode m = random_bc(rng, 3), n = random_bc(rng, 3);
    epsilon_t bound = module_search_bound(m, n);
    bool prev = false;
    for (epsilon_t eps = 0; eps <= bound; ++eps) {
      bool now = eps_matching_exists(m, n, eps);
      if (prev) CHECK(now);
      prev = now;
    }
    CHECK(prev);
  }
}

TEST_CASE("row parallelism does not change results") {
  splitmix64 rng(127);
  barcode m = random_bc(rng, 4), n = random_bc(rng, 4);
  epsilon_t sequential = hausdorff(m, n);
  setenv("PMOD_THREADS", "4", 1);
  epsilon_t parallel = hausdorff(m, n);
  unsetenv("PMOD_THREADS");
  CHECK(sequential == parallel);
}

TEST_CASE("stability verdicts") {
  oracle_options opts;
  barcode m = {rect(0, 0, 3, 3), rect(2, 2, 6, 6)};
  stability_report self = verify_stability(m, m, opts);
  CHECK(self.hausdorff == 0);
  REQUIRE(self.interleaving.has_value());
  CHECK(*self.interleaving == 0);
  CHECK(self.ratio == 0.0);
  CHECK(self.status == stability_status::pass);

  // Out-of-budget pairs degrade to a one-sided bracket.
  oracle_options tiny;
  tiny.entry_budget = 0;
  stability_report bracket = verify_stability(m, {rect(0, 0, 3, 3)}, tiny);
  CHECK_FALSE(bracket.interleaving.has_value());
  CHECK(bracket.status == stability_status::inconclusive);
  CHECK(bracket.interleaving_lower == 0);
  CHECK(bracket.interleaving_upper == bottleneck(m, {rect(0, 0, 3, 3)}));
}
