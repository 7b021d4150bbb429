#pragma once

// Exact integer matrices (arbitrary-precision entries) and the two integral
// invariants used downstream: rank after reduction mod p, and congruence of
// 2x2 symmetric positive definite matrices over Z (unimodular change of
// basis, determinant +-1 allowed).

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "finalg/mat.hpp"

namespace finalg {

using BigInt = boost::multiprecision::cpp_int;

struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<BigInt> a;  // row-major

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  BigInt& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static IntMatrix from_ints(const std::vector<std::vector<long long>>& m);

  bool operator==(const IntMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

IntMatrix mul(const IntMatrix& x, const IntMatrix& y);
IntMatrix transpose(const IntMatrix& m);
IntMatrix scale(const BigInt& c, const IntMatrix& m);
std::string to_string(const IntMatrix& m);

/// Entry-wise reduction into F_p.
Mat reduce_mod_p(const IntMatrix& m, const PrimeField& F);

/// Rank of m over F_p.
std::size_t p_rank(const IntMatrix& m, std::uint64_t p);

/// Binary quadratic form a x^2 + b xy + c y^2 (b may be odd: forms coming
/// from symmetric matrices via b = 2 M_12 are always even, but reduction is
/// written for general b).
struct BQForm {
  BigInt a, b, c;
  bool operator==(const BQForm& o) const { return a == o.a && b == o.b && c == o.c; }
};

/// Gauss reduction of a positive definite form to the unique reduced
/// representative with |b| <= a <= c, b >= 0 if |b| == a or a == c.
BQForm reduce_form(BQForm f);

/// Whether U^T M U = N for some integer U with det +-1.  Requires both
/// matrices 2x2, symmetric, positive definite; throws input_error otherwise.
bool congruent_over_Z_2x2(const IntMatrix& M, const IntMatrix& N);

/// The reduced form of a 2x2 symmetric positive definite matrix (exposed for
/// reporting; congruence compares reduced forms of N and of N reflected).
BQForm reduced_form_of(const IntMatrix& M);

}  // namespace finalg
