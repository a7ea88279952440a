#pragma once

// Arithmetic in a small prime field. Scalars are kept as plain integers in
// [0, p); the characteristic travels alongside them.

#include <cstdint>

#include "pmod/errors.hpp"

namespace pmod {

using scalar_t = std::uint16_t;

class prime_field {
 public:
  explicit prime_field(unsigned p = 2) : p_(static_cast<scalar_t>(p)) {
    if (p != 2 && p != 3 && p != 5 && p != 7)
      throw error("field characteristic must be a prime <= 7");
  }

  scalar_t characteristic() const { return p_; }

  scalar_t reduce(std::int64_t v) const {
    std::int64_t r = v % p_;
    return static_cast<scalar_t>(r < 0 ? r + p_ : r);
  }
  scalar_t add(scalar_t a, scalar_t b) const { return static_cast<scalar_t>((a + b) % p_); }
  scalar_t sub(scalar_t a, scalar_t b) const { return static_cast<scalar_t>((a + p_ - b) % p_); }
  scalar_t mul(scalar_t a, scalar_t b) const { return static_cast<scalar_t>((a * b) % p_); }
  scalar_t neg(scalar_t a) const { return static_cast<scalar_t>((p_ - a) % p_); }

  scalar_t inv(scalar_t a) const {
    if (a == 0) throw error("inverting zero");
    scalar_t r = 1, base = a;
    unsigned e = p_ - 2u;
    while (e) {
      if (e & 1u) r = mul(r, base);
      base = mul(base, base);
      e >>= 1u;
    }
    return r;
  }

  friend bool operator==(const prime_field&, const prime_field&) = default;

 private:
  scalar_t p_;
};

}  // namespace pmod
