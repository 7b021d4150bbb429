#pragma once

// Dense matrices over F_p with exact reduced row echelon form.
// The RREF is canonical (unique per row space): pivot columns scanned left to
// right, leading entries normalized to 1, pivot columns cleared above and
// below.  For p = 2 elimination runs on bit-packed rows; the result is
// identical to the generic path because the algorithm (and therefore the
// unique RREF) is the same.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "finalg/fp.hpp"

namespace finalg {

struct Mat {
  PrimeField F;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> a;  // row-major, values in [0, p)

  Mat(PrimeField f, std::size_t r, std::size_t c) : F(f), rows(r), cols(c), a(r * c, 0) {}

  std::uint64_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  Row row(std::size_t r) const { return Row(a.begin() + r * cols, a.begin() + (r + 1) * cols); }
  void set_row(std::size_t r, const Row& v);

  static Mat identity(PrimeField f, std::size_t n);
  static Mat from_rows(PrimeField f, const std::vector<Row>& rws, std::size_t ncols);
  /// Entry-wise reduction of signed integers into F_p.
  static Mat from_ints(PrimeField f, const std::vector<std::vector<long long>>& m);

  bool operator==(const Mat& o) const { return F == o.F && rows == o.rows && cols == o.cols && a == o.a; }
};

Mat mul(const Mat& x, const Mat& y);
Mat transpose(const Mat& m);
Row mul_row(const Row& v, const Mat& m);  // v * m (v has m.rows entries)

Row row_add(const PrimeField& F, const Row& x, const Row& y);
Row row_sub(const PrimeField& F, const Row& x, const Row& y);
Row row_scale(const PrimeField& F, std::uint64_t c, const Row& x);
bool row_is_zero(const Row& x);

struct RrefResult {
  std::size_t rank = 0;
  Mat mat;                         // RREF, all `rows` kept (zero rows at the bottom)
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
};

RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);

/// Solve A * X = RHS exactly; requires the solution to exist and be unique
/// (rank A = A.cols).  Throws input_error otherwise.
Mat solve_many(const Mat& A, const Mat& RHS);

}  // namespace finalg
