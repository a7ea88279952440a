#include <doctest.h>

#include "pmod/constructions.hpp"
#include "pmod/interleaving.hpp"

using namespace pmod;

namespace {

interval_set rect(coord_t x0, coord_t y0, coord_t x1, coord_t y1) {
  return make_rect(grid_point{x0, y0}, grid_point{x1, y1});
}

}  // namespace

TEST_CASE("triviality thresholds") {
  interval_set unit = rect(0, 0, 1, 1);
  CHECK_FALSE(is_trivial(unit, 0));
  CHECK_FALSE(is_trivial(unit, 1));
  CHECK(is_trivial(unit, 2));
  CHECK(is_trivial(rect(0, 0, 0, 9), 1));
}

TEST_CASE("transition matrices") {
  prime_field f2(2);
  barcode m = {rect(0, 0, 1, 1), rect(3, 3, 5, 5)};

  morphism_matrix t0 = transition_matrix(m, 0, f2);
  CHECK(t0.at(0, 0) == 1);
  CHECK(t0.at(1, 1) == 1);
  CHECK(t0.at(0, 1) == 0);
  CHECK(t0.target() == m);

  morphism_matrix t2 = transition_matrix({rect(0, 0, 1, 1)}, 2, f2);
  CHECK(t2.entries().empty());

  morphism_matrix t1 = transition_matrix({rect(0, 0, 1, 1)}, 1, f2);
  CHECK(t1.at(0, 0) == 1);
}

TEST_CASE("left and full interleaving criteria") {
  interval_set a = rect(0, 0, 3, 3);
  interval_set b = rect(1, 1, 4, 4);

  CHECK(left_interleaved(a, a, 0));
  CHECK(pair_interleaved(a, a, 0));

  // A short bar is left-interleaved with anything once its double shift dies.
  CHECK(left_interleaved(rect(0, 0, 1, 1), rect(40, 40, 45, 45), 1));

  CHECK(left_interleaved(a, b, 1));
  CHECK(pair_interleaved(a, b, 1));
  CHECK_FALSE(pair_interleaved(a, b, 0));

  CHECK(pair_interleaved_with_zero(rect(0, 0, 1, 1), 1));
  CHECK_FALSE(pair_interleaved_with_zero(rect(0, 0, 1, 1), 0));
}

TEST_CASE("pairwise distances") {
  interval_set a = rect(0, 0, 3, 3);
  interval_set b = rect(1, 1, 4, 4);
  CHECK(pair_distance(a, a) == 0);
  CHECK(pair_distance(a, b) == 1);
  CHECK(pair_distance_to_zero(rect(0, 0, 1, 1)) == 1);
  CHECK(pair_distance_to_zero(rect(0, 0, 5, 5)) == 3);
}

TEST_CASE("interleaving is monotone and symmetric on samples") {
  splitmix64 rng(67);
  for (int trial = 0; trial < 120; ++trial) {
    coord_t ax = rng.range(-6, 6), ay = rng.range(-6, 6);
    coord_t bx = rng.range(-6, 6), by = rng.range(-6, 6);
    interval_set a = rect(ax, ay, ax + rng.range(0, 4), ay + rng.range(0, 4));
    interval_set b = rect(bx, by, bx + rng.range(0, 4), by + rng.range(0, 4));
    epsilon_t bound = pair_search_bound(a, b);
    bool prev = false;
    for (epsilon_t eps = 0; eps <= bound; ++eps) {
      bool now = pair_interleaved(a, b, eps);
      CHECK(now == pair_interleaved(b, a, eps));
      if (prev) CHECK(now);  // once interleaved, stays interleaved
      prev = now;
    }
    CHECK(prev);  // interleaved at the bound
    CHECK(pair_distance(a, b) == pair_distance(b, a));

    coord_t t = rng.range(-4, 4);
    CHECK(pair_distance(shift(a, t), shift(b, t)) == pair_distance(a, b));
  }
}

TEST_CASE("one-sided interleavings of long-lived bars upgrade to full ones") {
  splitmix64 rng(71);
  int upgraded = 0;
  for (int trial = 0; trial < 400; ++trial) {
    // Correlated pairs: b perturbs a's corners, so one-sided interleavings
    // actually occur.
    coord_t ax = rng.range(-6, 6), ay = rng.range(-6, 6);
    coord_t sx = rng.range(3, 7), sy = rng.range(3, 7);
    interval_set a = rect(ax, ay, ax + sx, ay + sy);
    coord_t bx = ax + rng.range(-2, 2), by = ay + rng.range(-2, 2);
    coord_t tx = ax + sx + rng.range(-2, 2), ty = ay + sy + rng.range(-2, 2);
    if (bx > tx || by > ty) continue;
    interval_set b = rect(bx, by, tx, ty);
    for (epsilon_t eps = 0; eps <= 3; ++eps) {
      if (is_trivial(a, 4 * eps)) continue;
      if (!left_interleaved(a, b, eps)) continue;
      CHECK(pair_interleaved(a, b, eps));
      ++upgraded;
    }
  }
  CHECK(upgraded >= 5);  // the property must not hold vacuously
}

TEST_CASE("module oracle on identical barcodes") {
  oracle_options opts;
  barcode m = {rect(0, 0, 3, 3), rect(2, 2, 6, 6)};
  oracle_result r = oracle_interleaving_exists(m, m, 0, opts);
  REQUIRE(r.exists);
  REQUIRE(r.witness.has_value());
  // The lexicographically first witness is the identity pair.
  CHECK(r.witness->f.at(0, 0) == 1);
  CHECK(r.witness->f.at(1, 1) == 1);
  CHECK(r.witness->f.at(0, 1) == 0);
  CHECK(r.witness->g.at(0, 0) == 1);
  CHECK(r.witness->g.at(1, 1) == 1);
  CHECK(oracle_module_distance(m, m, opts) == 0);
}

TEST_CASE("module oracle against the pair criterion on single bars") {
  splitmix64 rng(79);
  for (unsigned p : {2u, 3u}) {
    oracle_options opts;
    opts.field = prime_field(p);
    for (int trial = 0; trial < 60; ++trial) {
      coord_t ax = rng.range(-8, 8), ay = rng.range(-8, 8);
      coord_t bx = rng.range(-8, 8), by = rng.range(-8, 8);
      interval_set a = rect(ax, ay, ax + rng.range(0, 6), ay + rng.range(0, 6));
      interval_set b = rect(bx, by, bx + rng.range(0, 6), by + rng.range(0, 6));
      for (epsilon_t eps = 0; eps <= pair_search_bound(a, b); ++eps) {
        CHECK(pair_interleaved(a, b, eps) ==
              oracle_interleaving_exists({a}, {b}, eps, opts).exists);
      }
    }
  }
}

TEST_CASE("module oracle with an empty side") {
  oracle_options opts;
  barcode m = {rect(0, 0, 1, 1), rect(0, 0, 5, 5)};
  CHECK(oracle_module_distance(m, {}, opts) == 3);
  CHECK(oracle_module_distance({}, {}, opts) == 0);
  CHECK(oracle_interleaving_exists(m, {}, 3, opts).exists);
  CHECK_FALSE(oracle_interleaving_exists(m, {}, 2, opts).exists);
}

TEST_CASE("oracle budget") {
  oracle_options opts;
  opts.entry_budget = 1;
  barcode m = {rect(0, 0, 3, 3), rect(0, 0, 2, 2)};
  CHECK_THROWS_AS(oracle_interleaving_exists(m, m, 0, opts), budget_exceeded);
}

TEST_CASE("oracle is deterministic") {
  oracle_options opts;
  barcode m = {rect(0, 0, 4, 4), rect(1, 1, 3, 3)};
  barcode n = {rect(0, 0, 3, 3)};
  auto r1 = oracle_interleaving_exists(m, n, 1, opts);
  auto r2 = oracle_interleaving_exists(m, n, 1, opts);
  REQUIRE(r1.exists == r2.exists);
  if (r1.exists) {
    CHECK(r1.witness->f == r2.witness->f);
    CHECK(r1.witness->g == r2.witness->g);
  }
}
