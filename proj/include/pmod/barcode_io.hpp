#pragma once

// Versioned JSON container for barcodes. An interval is stored either as an
// explicit point list or as a constructor form (rect / upperset / downset /
// polygon); rationals travel as [numerator, denominator] pairs so files stay
// float-free.

#include <string>
#include <variant>
#include <vector>

#include "pmod/intervals.hpp"

namespace pmod {

struct points_spec {
  std::vector<grid_point> points;
  friend bool operator==(const points_spec&, const points_spec&) = default;
};

struct rect_spec {
  grid_point lo, hi;
  friend bool operator==(const rect_spec&, const rect_spec&) = default;
};

struct upperset_spec {
  std::vector<grid_point> generators;
  grid_point window_lo, window_hi;
  friend bool operator==(const upperset_spec&, const upperset_spec&) = default;
};

struct downset_spec {
  std::vector<grid_point> generators;
  grid_point window_lo, window_hi;
  friend bool operator==(const downset_spec&, const downset_spec&) = default;
};

struct polygon_spec {
  std::vector<polygon_vertex> vertices;
  coord_t scale = 1;
  friend bool operator==(const polygon_spec&, const polygon_spec&) = default;
};

using interval_spec =
    std::variant<points_spec, rect_spec, upperset_spec, downset_spec, polygon_spec>;

struct module_entry {
  std::string name;
  std::vector<interval_spec> intervals;
  friend bool operator==(const module_entry&, const module_entry&) = default;
};

struct barcode_file {
  int version = 1;
  std::size_t dim = 2;
  std::vector<module_entry> modules;
  friend bool operator==(const barcode_file&, const barcode_file&) = default;
};

interval_set materialize(const interval_spec& spec, std::size_t dim);
barcode materialize(const module_entry& entry, std::size_t dim);

barcode_file parse_barcode_file(const std::string& json_text);
std::string print_barcode_file(const barcode_file& file);

barcode_file load_barcode_file(const std::string& path);
void save_barcode_file(const barcode_file& file, const std::string& path);

// Finds a module by name; empty name selects the first module.
const module_entry& select_module(const barcode_file& file, const std::string& name);

}  // namespace pmod
