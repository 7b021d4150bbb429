#pragma once

// Subspaces of F_p^n held in canonical form: the basis matrix is the RREF of
// any spanning set, so two subspaces are equal exactly when their basis
// matrices are entry-wise identical.

#include <optional>
#include <vector>

#include "finalg/mat.hpp"

namespace finalg {

struct Subspace {
  PrimeField F;
  std::size_t ambient = 0;
  Mat basis;                        // dim() rows in RREF, no zero rows
  std::vector<std::size_t> pivots;  // pivot column of each basis row

  std::size_t dim() const { return basis.rows; }

  static Subspace span(PrimeField f, std::size_t ambient, const std::vector<Row>& vectors);
  static Subspace zero(PrimeField f, std::size_t ambient) { return span(f, ambient, {}); }
  static Subspace full(PrimeField f, std::size_t ambient);

  bool operator==(const Subspace& o) const {
    return F == o.F && ambient == o.ambient && basis == o.basis;
  }
};

bool member(const Subspace& u, const Row& v);
Subspace sum(const Subspace& u, const Subspace& w);
Subspace intersect(const Subspace& u, const Subspace& w);

/// v minus its projection onto u along the non-pivot coordinates: the unique
/// representative of v + u whose pivot coordinates vanish.  Zero iff v in u.
Row reduce_mod(const Subspace& u, Row v);

/// Coordinates of v in u's canonical basis (read off the pivot columns), or
/// nullopt if v is not a member.
std::optional<Row> coords_in(const Subspace& u, const Row& v);

/// Kernel of m acting on column vectors: {x : m x = 0} as a canonical subspace
/// of F_p^cols.
Subspace kernel(const Mat& m);

}  // namespace finalg
