#pragma once
// Packed GF(2) row utilities backing the p = 2 fast paths (row-echelon
// accumulation, membership tests, XOR-combination of table rows).  Rank and
// membership only; canonical RREF stays in mat.cpp.

#include <bit>
#include <cstdint>
#include <vector>

#include "finalg/mat.hpp"

namespace finalg::gf2 {

inline std::size_t words_for(std::size_t cols) { return (cols + 63) / 64; }

inline void pack_row_into(const Row& r, std::uint64_t* dst, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) dst[w] = 0;
  for (std::size_t c = 0; c < r.size(); ++c) {
    if (r[c]) dst[c >> 6] |= 1ULL << (c & 63);
  }
}

inline Row unpack_row(const std::uint64_t* src, std::size_t cols) {
  Row r(cols, 0);
  for (std::size_t c = 0; c < cols; ++c) r[c] = (src[c >> 6] >> (c & 63)) & 1;
  return r;
}

/// Row-echelon accumulator over GF(2): rows are reduced on insertion, rank
/// and membership queries are O(rank * words).  Not canonical.
struct Echelon {
  std::size_t cols = 0, words = 0;
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<std::size_t> pivots;  // lowest set bit of each stored row

  explicit Echelon(std::size_t c) : cols(c), words(words_for(c)) {}

  // Reduce `row` in place; returns its pivot bit or SIZE_MAX if it vanished.
  // Stored rows are mutually reduced at their own pivots in insertion order,
  // so one ascending pass suffices.
  std::size_t reduce(std::vector<std::uint64_t>& row) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      std::size_t p = pivots[i];
      if ((row[p >> 6] >> (p & 63)) & 1) {
        for (std::size_t w = 0; w < words; ++w) row[w] ^= rows[i][w];
      }
    }
    for (std::size_t w = 0; w < words; ++w) {
      if (row[w]) return (w << 6) + static_cast<std::size_t>(std::countr_zero(row[w]));
    }
    return SIZE_MAX;
  }

  bool insert(std::vector<std::uint64_t> row) {
    std::size_t p = reduce(row);
    if (p == SIZE_MAX) return false;
    rows.push_back(std::move(row));
    pivots.push_back(p);
    return true;
  }

  bool member(std::vector<std::uint64_t> row) const { return reduce(row) == SIZE_MAX; }

  std::size_t rank() const { return rows.size(); }

  std::vector<Row> unpacked() const {
    std::vector<Row> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(unpack_row(r.data(), cols));
    return out;
  }
};

}  // namespace finalg::gf2
