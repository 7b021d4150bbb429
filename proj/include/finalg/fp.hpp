#pragma once

// Arithmetic in the prime field F_p for a runtime modulus p.
// Residues are stored as uint64_t values in [0, p).  p is limited to 32 bits
// so that products fit in uint64_t without overflow.

#include <cstdint>
#include <string>
#include <vector>

#include "finalg/errors.hpp"

namespace finalg {

class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 2 || p > 0xffffffffULL) {
      throw input_error("field modulus must be a prime below 2^32, got " + std::to_string(p));
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) throw input_error("field modulus " + std::to_string(p) + " is not prime");
    }
  }

  std::uint64_t p() const { return p_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % p_; }

  /// Reduce an arbitrary signed value into [0, p).
  std::uint64_t from_int(long long v) const {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += static_cast<long long>(p_);
    return static_cast<std::uint64_t>(m);
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p_;
    a %= p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  std::uint64_t inv(std::uint64_t a) const {
    if (a % p_ == 0) throw input_error("division by zero in F_" + std::to_string(p_));
    return pow(a, p_ - 2);  // Fermat; p prime by construction
  }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

 private:
  std::uint64_t p_;
};

/// Coordinate row over F_p (residues in [0, p)).
using Row = std::vector<std::uint64_t>;

}  // namespace finalg
