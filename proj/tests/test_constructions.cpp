#include <doctest.h>

#include "pmod/constructions.hpp"
#include "pmod/distances.hpp"

using namespace pmod;

TEST_CASE("instability instance shape") {
  module_pair inst = instability_instance(4);
  REQUIRE(inst.m.size() == 2);
  REQUIRE(inst.n.size() == 1);
  const interval_set& k = inst.n.front();

  // Every support validates, including the staircase join, and the family of
  // supports is pairwise intersection-closed.
  for (coord_t a : {2, 3, 4, 8, 16, 64}) {
    module_pair mp = instability_instance(a);
    barcode all = mp.m;
    all.push_back(mp.n.front());
    for (const auto& bar : all) {
      CHECK(is_poset_convex(bar.points()));
      CHECK(is_poset_connected(bar.points()));
    }
    CHECK(is_intersection_closed(all).closed);
    for (const auto& bar : all) CHECK(bar.diag_extent() == (a == 1 ? 1 : a - 1));
  }

  // The join lives to the same diagonal age as the squares, but its double
  // shift core splits over the two square ends.
  CHECK(k.diag_extent() == 3);
  auto core = components(intersect(k, shift(k, 2)));
  REQUIRE(core.size() == 2);

  // The two squares are diagonally out of each other's double shift.
  CHECK(intersect(inst.m[0], shift(inst.m[1], 2)).empty());
  CHECK(intersect(inst.m[1], shift(inst.m[0], 2)).empty());
}

TEST_CASE("instability distances") {
  for (coord_t a : {2, 4}) {
    module_pair inst = instability_instance(a);
    oracle_options opts;
    CHECK(oracle_interleaving_exists(inst.m, inst.n, 1, opts).exists);
    CHECK_FALSE(oracle_interleaving_exists(inst.m, inst.n, 0, opts).exists);
    CHECK(oracle_module_distance(inst.m, inst.n, opts) == 1);
    CHECK(hausdorff(inst.m, inst.n) == (a + 1) / 2);
    CHECK(bottleneck(inst.m, inst.n) == (a + 1) / 2);

    // Each square is far from the join as a pair, even though the module
    // interleaving is cheap.
    CHECK(pair_distance(inst.m[0], inst.n[0]) == (a + 1) / 2);
  }

  module_pair degenerate = instability_instance(1);
  CHECK(hausdorff(degenerate.m, degenerate.n) == 0);
}

TEST_CASE("tightness instance shape") {
  tightness_params params;  // delta = 1, scale = 2
  module_pair t = tightness_instance(params);
  REQUIRE(t.m.size() == 2);
  REQUIRE(t.n.size() == 1);
  const interval_set& i = t.m[0];
  const interval_set& j = t.m[1];
  const interval_set& k = t.n[0];

  CHECK(intersect(i, j).empty());
  barcode all = {i, j, k};
  CHECK(is_intersection_closed(all).closed);
  // The square is significant up to the designed threshold, the hexagon
  // body feeds a long tail.
  CHECK(i.diag_extent() == 2 * params.scale - 2);
  CHECK(k.diag_extent() >= 2 * params.scale);
}

TEST_CASE("tightness distances at delta 1") {
  for (coord_t scale : {2, 4}) {
    tightness_params params;
    params.scale = scale;
    module_pair t = tightness_instance(params);
    oracle_options opts;
    CHECK(oracle_module_distance(t.m, t.n, opts) == scale);
    epsilon_t h = hausdorff(t.m, t.n);
    CHECK(h >= scale - 2);
    CHECK(h <= scale + 2);
  }
}

TEST_CASE("tightness ray length does not change the distances") {
  tightness_params base;
  base.scale = 2;
  module_pair t1 = tightness_instance(base);
  tightness_params longer = base;
  longer.ray_steps = 8;
  module_pair t2 = tightness_instance(longer);
  oracle_options opts;
  CHECK(oracle_module_distance(t1.m, t1.n, opts) == oracle_module_distance(t2.m, t2.n, opts));
  CHECK(hausdorff(t1.m, t1.n) == hausdorff(t2.m, t2.n));
}

TEST_CASE("tightness parameter validation") {
  tightness_params bad;
  bad.delta_num = 1;
  bad.delta_den = 3;
  bad.scale = 2;  // delta * scale is not integral
  CHECK_THROWS(tightness_instance(bad));

  tightness_params too_large;
  too_large.delta_num = 2;
  too_large.delta_den = 1;
  CHECK_THROWS(tightness_instance(too_large));

  // delta -> 2: the square shrinks but stays a valid interval.
  tightness_params near_two;
  near_two.delta_num = 3;
  near_two.delta_den = 2;
  near_two.scale = 4;
  module_pair t = tightness_instance(near_two);
  CHECK(t.m[0].diag_extent() == 4 * 4 - 2 * 6 - 2);
}

TEST_CASE("random generators are deterministic") {
  barcode a = random_rect_barcode(3, -8, 8, 6, 42);
  barcode b = random_rect_barcode(3, -8, 8, 6, 42);
  REQUIRE(a.size() == 3);
  CHECK(a[0] == b[0]);
  CHECK(a[1] == b[1]);
  CHECK(a[2] == b[2]);

  // Frozen output of generator splitmix64-rect-v1 at seed 42.
  CHECK(a[0] == make_rect(grid_point{5, -2}, grid_point{8, 0}));
  CHECK(a[1] == make_rect(grid_point{4, 6}, grid_point{6, 8}));
  CHECK(a[2] == make_rect(grid_point{-2, -8}, grid_point{3, -2}));
  CHECK(random_rect_barcode(0, -8, 8, 6, 1).empty());

  // Degenerate coordinate range collapses to singletons.
  barcode s = random_rect_barcode(2, 3, 3, 6, 7);
  CHECK(s[0].size() == 1);
  CHECK(s[1].size() == 1);

  barcode u1 = random_upperset_barcode(3, grid_point{0, 0}, grid_point{6, 6}, 3, 5);
  barcode u2 = random_upperset_barcode(3, grid_point{0, 0}, grid_point{6, 6}, 3, 5);
  for (std::size_t k = 0; k < 3; ++k) CHECK(u1[k] == u2[k]);
}
