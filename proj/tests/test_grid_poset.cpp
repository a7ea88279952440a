#include <doctest.h>

#include <limits>

#include "pmod/constructions.hpp"
#include "pmod/grid_poset.hpp"

using namespace pmod;

TEST_CASE("coordinatewise order") {
  CHECK(leq(grid_point{0, 0}, grid_point{1, 2}));
  CHECK_FALSE(leq(grid_point{0, 3}, grid_point{1, 2}));
  CHECK(leq(grid_point{1, 1, 1}, grid_point{1, 1, 1}));
  CHECK_THROWS_AS(leq(grid_point{0, 0}, grid_point{0, 0, 0}), dimension_mismatch);
}

TEST_CASE("box enumeration") {
  auto b = box(grid_point{0, 0}, grid_point{1, 1});
  REQUIRE(b.size() == 4);
  CHECK(b[0] == grid_point{0, 0});
  CHECK(b[3] == grid_point{1, 1});

  CHECK(box(grid_point{2, 2}, grid_point{2, 2}).size() == 1);
  CHECK(box(grid_point{0, 0}, grid_point{2, 0}).size() == 3);
  CHECK_THROWS(box(grid_point{1, 0}, grid_point{0, 1}));
}

TEST_CASE("flow is the diagonal translation") {
  CHECK(flow(grid_point{0, 0}, 1) == grid_point{1, 1});
  CHECK(flow(grid_point{3, -1}, 0) == grid_point{3, -1});
  CHECK(flow(flow(grid_point{2, 2}, 3), -3) == grid_point{2, 2});
  CHECK_THROWS_AS(flow(grid_point{std::numeric_limits<coord_t>::max()}, 1), coordinate_overflow);
}

TEST_CASE("poset axioms and flow compatibility on sampled points") {
  splitmix64 rng(7);
  auto pt = [&]() {
    return grid_point{rng.range(-10, 10), rng.range(-10, 10)};
  };
  for (int trial = 0; trial < 300; ++trial) {
    grid_point p = pt(), q = pt(), r = pt();
    CHECK(leq(p, p));
    if (leq(p, q) && leq(q, p)) CHECK(p == q);
    if (leq(p, q) && leq(q, r)) CHECK(leq(p, r));
    coord_t t = rng.range(-5, 5);
    CHECK(leq(p, q) == leq(flow(p, t), flow(q, t)));
    coord_t s = rng.range(t, t + 5);
    CHECK(leq(flow(p, t), flow(p, s)));
  }
}
