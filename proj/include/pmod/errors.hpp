#pragma once

#include <stdexcept>
#include <string>

namespace pmod {

struct error : std::runtime_error {
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Two points (or sets) of different ambient dimension were mixed.
struct dimension_mismatch : error {
  explicit dimension_mismatch(const std::string& what) : error(what) {}
};

// A point set failed poset-convexity or poset-connectivity validation.
struct validation_error : error {
  explicit validation_error(const std::string& what) : error(what) {}
};

// An intersection had two or more interval components where the scalar
// calculus requires at most one.
struct multi_component_error : error {
  explicit multi_component_error(const std::string& what) : error(what) {}
};

// The exhaustive interleaving search would exceed its enumeration budget.
struct budget_exceeded : error {
  explicit budget_exceeded(const std::string& what) : error(what) {}
};

// Coordinate arithmetic left the representable range.
struct coordinate_overflow : error {
  explicit coordinate_overflow(const std::string& what) : error(what) {}
};

// Malformed input file.
struct io_error : error {
  explicit io_error(const std::string& what) : error(what) {}
};

}  // namespace pmod
