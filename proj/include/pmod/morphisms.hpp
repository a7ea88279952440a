#pragma once

// Morphisms between interval modules. For intervals whose intersection is a
// single interval, a morphism C(I) -> C(J) is one scalar supported on I n J,
// and it is nonzero exactly when that intersection is (I,J)-valid. A
// morphism between interval-decomposable modules is a matrix of such
// scalars indexed by bars.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "pmod/field.hpp"
#include "pmod/intervals.hpp"

namespace pmod {

// Validity of a component Q of I n J: everything in I below Q must already
// lie in J, and everything in J above Q must already lie in I. Q must be an
// interval component of the intersection.
bool is_valid_component(const interval_set& q, const interval_set& i, const interval_set& j);

// Existence of a nonzero morphism C(I) -> C(J). Requires the intersection
// to have at most one component; throws multi_component_error otherwise.
bool hom_exists(const interval_set& i, const interval_set& j);

// Dimension of the space of module morphisms C(I) -> C(J), computed by
// solving the naturality constraints directly: unknowns are the pointwise
// scalars on I n J, equal along comparable pairs inside the intersection and
// forced to zero where a structure map enters from I \ J below or exits to
// J \ I above. Handles any number of intersection components, so it doubles
// as an independent oracle for hom_exists.
std::size_t hom_dimension_bruteforce(const interval_set& i, const interval_set& j);

struct scalar_morphism {
  interval_set source;
  interval_set target;
  scalar_t omega = 0;  // scalar carried on the single component of source n target
};

// Make a scalar morphism, enforcing that a nonzero scalar sits on a single
// valid intersection component.
scalar_morphism make_scalar_morphism(const interval_set& source, const interval_set& target,
                                     scalar_t omega);

// Composition scalar for C(I) -f-> C(J) -g-> C(K): nonzero exactly when both
// factors are nonzero and the (single-component) intersection I n K is
// nonempty and contained in J; the scalar is then the product. All three
// pairwise intersections must have at most one component.
scalar_morphism compose(const scalar_morphism& f, const scalar_morphism& g,
                        const prime_field& field);

class morphism_matrix {
 public:
  morphism_matrix(barcode source, barcode target, prime_field field);

  const barcode& source() const { return src_; }
  const barcode& target() const { return dst_; }
  const prime_field& field() const { return field_; }

  void set(std::size_t i, std::size_t j, scalar_t omega);  // validates nonzero entries
  scalar_t at(std::size_t i, std::size_t j) const;         // 0 when absent

  const std::map<std::pair<std::size_t, std::size_t>, scalar_t>& entries() const {
    return entries_;
  }

  bool operator==(const morphism_matrix& o) const {
    return src_ == o.src_ && dst_ == o.dst_ && field_ == o.field_ && entries_ == o.entries_;
  }

 private:
  barcode src_, dst_;
  prime_field field_;
  std::map<std::pair<std::size_t, std::size_t>, scalar_t> entries_;
};

// Blockwise composition: entry (i,k) of G after F is the field sum over j of
// the composition scalars through the middle barcode.
morphism_matrix matrix_compose(const morphism_matrix& f, const morphism_matrix& g);

}  // namespace pmod
