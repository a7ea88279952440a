#include <doctest.h>

#include "pmod/barcode_io.hpp"
#include "pmod/constructions.hpp"
#include "pmod/render_svg.hpp"

using namespace pmod;

namespace {

barcode_file sample_file() {
  barcode_file f;
  f.dim = 2;
  module_entry m{"M", {}};
  m.intervals.push_back(rect_spec{grid_point{0, 0}, grid_point{3, 3}});
  m.intervals.push_back(points_spec{box(grid_point{1, 1}, grid_point{2, 2})});
  m.intervals.push_back(
      upperset_spec{{grid_point{0, 2}, grid_point{2, 0}}, grid_point{0, 0}, grid_point{3, 3}});
  m.intervals.push_back(
      downset_spec{{grid_point{3, 1}, grid_point{1, 3}}, grid_point{0, 0}, grid_point{3, 3}});
  m.intervals.push_back(polygon_spec{
      {{{0, 1}, {0, 1}}, {{1, 1}, {0, 1}}, {{1, 1}, {1, 1}}, {{0, 1}, {1, 1}}}, 4});
  f.modules.push_back(std::move(m));
  return f;
}

}  // namespace

TEST_CASE("barcode files round-trip") {
  barcode_file f = sample_file();
  CHECK(parse_barcode_file(print_barcode_file(f)) == f);

  // Randomized rect files round-trip too.
  splitmix64 rng(113);
  for (int trial = 0; trial < 20; ++trial) {
    barcode_file rf;
    rf.dim = 2;
    module_entry entry{"R", {}};
    for (const auto& bar : random_rect_barcode(1 + rng.next() % 4, -8, 8, 5, rng.next()))
      entry.intervals.push_back(rect_spec{bar.bbox_min(), bar.bbox_max()});
    rf.modules.push_back(entry);
    CHECK(parse_barcode_file(print_barcode_file(rf)) == rf);
  }
}

TEST_CASE("materialization matches the constructors") {
  barcode_file f = sample_file();
  barcode bars = materialize(f.modules[0], f.dim);
  REQUIRE(bars.size() == 5);
  CHECK(bars[0] == make_rect(grid_point{0, 0}, grid_point{3, 3}));
  CHECK(bars[1] == make_rect(grid_point{1, 1}, grid_point{2, 2}));
  CHECK(bars[2].size() == 12);
  CHECK(bars[3].size() == 12);
  CHECK(bars[4] == make_rect(grid_point{1, 1}, grid_point{3, 3}));
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_barcode_file("not json"), io_error);
  CHECK_THROWS_AS(parse_barcode_file("{}"), io_error);
  CHECK_THROWS_AS(parse_barcode_file(R"({"version":2,"dim":2,"modules":[]})"), io_error);
  CHECK_THROWS_AS(
      parse_barcode_file(R"({"version":1,"dim":2,"modules":[{"name":"x","intervals":[{}]}]})"),
      io_error);
  CHECK_THROWS_AS(
      parse_barcode_file(
          R"({"version":1,"dim":2,"modules":[{"name":"x","intervals":[{"points":[[1]]}]}]})"),
      io_error);
}

TEST_CASE("module selection") {
  barcode_file f = sample_file();
  CHECK(select_module(f, "").name == "M");
  CHECK(select_module(f, "M").name == "M");
  CHECK_THROWS_AS(select_module(f, "missing"), io_error);
}

TEST_CASE("svg rendering is deterministic and 2-D only") {
  module_pair inst = instability_instance(4);
  std::vector<std::pair<std::string, barcode>> mods = {{"M", inst.m}, {"N", inst.n}};
  std::string svg1 = render_svg(mods);
  std::string svg2 = render_svg(mods);
  CHECK(svg1 == svg2);
  CHECK(svg1.find("<svg") == 0);
  CHECK(svg1.find("M[0]") != std::string::npos);
  CHECK(svg1.find("N[0]") != std::string::npos);

  std::string empty_svg = render_svg({{"E", {}}});
  CHECK(empty_svg.find("line") != std::string::npos);  // axes only
  CHECK(empty_svg.find("fill-opacity") == std::string::npos);

  barcode three_d = {interval_set::validate(3, box(grid_point{0, 0, 0}, grid_point{1, 1, 1}))};
  CHECK_THROWS(render_svg({{"X", three_d}}));
}
