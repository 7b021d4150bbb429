#include "finalg/subspace.hpp"

#include <string>

namespace finalg {

namespace {

void check_ambient(const Subspace& u, const Subspace& w) {
  if (u.F != w.F || u.ambient != w.ambient) {
    throw input_error("ambient dimension mismatch: " + std::to_string(u.ambient) + " vs " +
                      std::to_string(w.ambient));
  }
}

}  // namespace

Subspace Subspace::span(PrimeField f, std::size_t ambient, const std::vector<Row>& vectors) {
  for (const Row& v : vectors) {
    if (v.size() != ambient) throw input_error("vector length differs from ambient dimension");
  }
  RrefResult r = rref(Mat::from_rows(f, vectors, ambient));
  Mat b(f, r.rank, ambient);
  for (std::size_t i = 0; i < r.rank; ++i) b.set_row(i, r.mat.row(i));
  return Subspace{f, ambient, std::move(b), std::move(r.pivots)};
}

Subspace Subspace::full(PrimeField f, std::size_t ambient) {
  Subspace s{f, ambient, Mat::identity(f, ambient), {}};
  for (std::size_t i = 0; i < ambient; ++i) s.pivots.push_back(i);
  return s;
}

Row reduce_mod(const Subspace& u, Row v) {
  if (v.size() != u.ambient) throw input_error("ambient dimension mismatch in reduce_mod");
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const std::uint64_t c = v[u.pivots[i]];
    if (c == 0) continue;
    for (std::size_t j = u.pivots[i]; j < u.ambient; ++j) {
      v[j] = u.F.sub(v[j], u.F.mul(c, u.basis.at(i, j)));
    }
  }
  return v;
}

bool member(const Subspace& u, const Row& v) { return row_is_zero(reduce_mod(u, v)); }

std::optional<Row> coords_in(const Subspace& u, const Row& v) {
  if (!member(u, v)) return std::nullopt;
  Row c(u.dim(), 0);
  for (std::size_t i = 0; i < u.dim(); ++i) c[i] = v[u.pivots[i]];
  return c;
}

Subspace sum(const Subspace& u, const Subspace& w) {
  check_ambient(u, w);
  std::vector<Row> rows;
  rows.reserve(u.dim() + w.dim());
  for (std::size_t i = 0; i < u.dim(); ++i) rows.push_back(u.basis.row(i));
  for (std::size_t i = 0; i < w.dim(); ++i) rows.push_back(w.basis.row(i));
  return Subspace::span(u.F, u.ambient, rows);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  check_ambient(u, w);
  // x in U cap W  <=>  x = lambda U = mu W; solve for (lambda, mu) in the
  // kernel of the stacked bases [U^T | -W^T], then map lambda back.
  Mat stacked(u.F, u.ambient, u.dim() + w.dim());
  for (std::size_t r = 0; r < u.ambient; ++r) {
    for (std::size_t i = 0; i < u.dim(); ++i) stacked.at(r, i) = u.basis.at(i, r);
    for (std::size_t i = 0; i < w.dim(); ++i) stacked.at(r, u.dim() + i) = u.F.neg(w.basis.at(i, r));
  }
  Subspace pairs = kernel(stacked);
  std::vector<Row> rows;
  for (std::size_t i = 0; i < pairs.dim(); ++i) {
    Row pair_row = pairs.basis.row(i);
    Row lambda(pair_row.begin(), pair_row.begin() + u.dim());
    rows.push_back(mul_row(lambda, u.basis));
  }
  return Subspace::span(u.F, u.ambient, rows);
}

Subspace kernel(const Mat& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Row> rows;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    Row v(m.cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = m.F.neg(r.mat.at(i, f));
    rows.push_back(std::move(v));
  }
  return Subspace::span(m.F, m.cols, rows);
}

}  // namespace finalg
