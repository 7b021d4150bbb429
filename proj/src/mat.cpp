#include "finalg/mat.hpp"

#include <algorithm>
#include <string>

namespace finalg {

void Mat::set_row(std::size_t r, const Row& v) {
  if (v.size() != cols) throw input_error("row length mismatch in set_row");
  std::copy(v.begin(), v.end(), a.begin() + r * cols);
}

Mat Mat::identity(PrimeField f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(PrimeField f, const std::vector<Row>& rws, std::size_t ncols) {
  Mat m(f, rws.size(), ncols);
  for (std::size_t i = 0; i < rws.size(); ++i) m.set_row(i, rws[i]);
  return m;
}

Mat Mat::from_ints(PrimeField f, const std::vector<std::vector<long long>>& rows_in) {
  std::size_t nc = rows_in.empty() ? 0 : rows_in[0].size();
  Mat m(f, rows_in.size(), nc);
  for (std::size_t i = 0; i < rows_in.size(); ++i) {
    if (rows_in[i].size() != nc) throw input_error("ragged integer matrix");
    for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = f.from_int(rows_in[i][j]);
  }
  return m;
}

Mat mul(const Mat& x, const Mat& y) {
  if (x.F != y.F || x.cols != y.rows) throw input_error("matrix shape mismatch in mul");
  Mat r(x.F, x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t k = 0; k < x.cols; ++k) {
      std::uint64_t c = x.at(i, k);
      if (c == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) {
        r.at(i, j) = x.F.add(r.at(i, j), x.F.mul(c, y.at(k, j)));
      }
    }
  }
  return r;
}

Mat transpose(const Mat& m) {
  Mat t(m.F, m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

Row mul_row(const Row& v, const Mat& m) {
  if (v.size() != m.rows) throw input_error("shape mismatch in mul_row");
  Row r(m.cols, 0);
  for (std::size_t k = 0; k < m.rows; ++k) {
    std::uint64_t c = v[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j < m.cols; ++j) r[j] = m.F.add(r[j], m.F.mul(c, m.at(k, j)));
  }
  return r;
}

Row row_add(const PrimeField& F, const Row& x, const Row& y) {
  Row r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = F.add(x[i], y[i]);
  return r;
}

Row row_sub(const PrimeField& F, const Row& x, const Row& y) {
  Row r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = F.sub(x[i], y[i]);
  return r;
}

Row row_scale(const PrimeField& F, std::uint64_t c, const Row& x) {
  Row r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = F.mul(c, x[i]);
  return r;
}

bool row_is_zero(const Row& x) {
  for (auto v : x)
    if (v) return false;
  return true;
}

namespace {

// Bit-packed elimination for p = 2.  Same pivot order and normalization as
// the generic path below, so the (unique) RREF comes out identical.
RrefResult rref_gf2(const Mat& m) {
  const std::size_t words = (m.cols + 63) / 64;
  std::vector<std::uint64_t> bits(m.rows * words, 0);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m.at(i, j)) bits[i * words + (j >> 6)] |= (1ULL << (j & 63));

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    const std::size_t w = c >> 6;
    const std::uint64_t mask = 1ULL << (c & 63);
    std::size_t sel = m.rows;
    for (std::size_t i = r; i < m.rows; ++i) {
      if (bits[i * words + w] & mask) { sel = i; break; }
    }
    if (sel == m.rows) continue;
    if (sel != r) {
      for (std::size_t k = 0; k < words; ++k) std::swap(bits[sel * words + k], bits[r * words + k]);
    }
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i != r && (bits[i * words + w] & mask)) {
        for (std::size_t k = 0; k < words; ++k) bits[i * words + k] ^= bits[r * words + k];
      }
    }
    pivots.push_back(c);
    ++r;
  }

  RrefResult res{r, Mat(m.F, m.rows, m.cols), pivots};
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      res.mat.at(i, j) = (bits[i * words + (j >> 6)] >> (j & 63)) & 1;
  return res;
}

}  // namespace

RrefResult rref(const Mat& m) {
  if (m.F.p() == 2) return rref_gf2(m);

  Mat w = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < w.cols && r < w.rows; ++c) {
    std::size_t sel = w.rows;
    for (std::size_t i = r; i < w.rows; ++i) {
      if (w.at(i, c) != 0) { sel = i; break; }
    }
    if (sel == w.rows) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < w.cols; ++j) std::swap(w.at(sel, j), w.at(r, j));
    }
    const std::uint64_t piv_inv = w.F.inv(w.at(r, c));
    for (std::size_t j = c; j < w.cols; ++j) w.at(r, j) = w.F.mul(piv_inv, w.at(r, j));
    for (std::size_t i = 0; i < w.rows; ++i) {
      if (i == r) continue;
      const std::uint64_t f = w.at(i, c);
      if (f == 0) continue;
      for (std::size_t j = c; j < w.cols; ++j) {
        w.at(i, j) = w.F.sub(w.at(i, j), w.F.mul(f, w.at(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return RrefResult{r, std::move(w), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat solve_many(const Mat& A, const Mat& RHS) {
  if (A.F != RHS.F || A.rows != RHS.rows) throw input_error("shape mismatch in solve_many");
  Mat aug(A.F, A.rows, A.cols + RHS.cols);
  for (std::size_t i = 0; i < A.rows; ++i) {
    for (std::size_t j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    for (std::size_t j = 0; j < RHS.cols; ++j) aug.at(i, A.cols + j) = RHS.at(i, j);
  }
  RrefResult r = rref(aug);
  // Unique solution iff every pivot falls in the coefficient block and the
  // coefficient block has full column rank.
  std::size_t coeff_rank = 0;
  for (auto p : r.pivots) {
    if (p < A.cols) ++coeff_rank;
    else throw input_error("inconsistent linear system in solve_many");
  }
  if (coeff_rank != A.cols) throw input_error("underdetermined linear system in solve_many");
  Mat X(A.F, A.cols, RHS.cols);
  for (std::size_t i = 0; i < coeff_rank; ++i) {
    for (std::size_t j = 0; j < RHS.cols; ++j) X.at(r.pivots[i], j) = r.mat.at(i, A.cols + j);
  }
  return X;
}

}  // namespace finalg
