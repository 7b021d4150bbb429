#pragma once

// Finite-dimensional associative unital algebras over F_p, given by labeled
// structure constants.  Everything downstream (trivial extensions, tensor
// products, endomorphism rings, center/Cartan invariants) reduces to this
// type plus exact linear algebra.
//
// Values are immutable once constructed; operations are pure functions, so
// concurrent readers are safe.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "finalg/intmat.hpp"
#include "finalg/mat.hpp"
#include "finalg/subspace.hpp"

namespace finalg {

/// A "no applicable method" condition (e.g. radical strategy missing); always
/// raised explicitly, never silently worked around.  CLI maps it to exit 2.
struct unsupported_error : input_error {
  explicit unsupported_error(const std::string& what) : input_error(what) {}
};

/// Multiplication table of a finite group: table[g][h] = index of g*h.
struct GroupData {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table;
  int identity = 0;
  std::vector<int> inverse;
};

struct Idempotent {
  std::string label;
  Row coords;
};

struct StructureAlgebra {
  PrimeField F;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  Row unit;
  std::vector<Row> table;  // table[i*dim+j] = coordinates of b_i * b_j

  /// Complete orthogonal idempotent list (sums to the unit) when one is
  /// distinguished by the construction (quiver vertices, tensor factors, ...).
  std::optional<std::vector<Idempotent>> idempotents;

  /// Non-negative degree per basis element when the construction provides a
  /// grading (path length).  graded_radical_ok records that the degree-zero
  /// part is certified split semisimple, so the radical is the positive part.
  std::optional<std::vector<int>> grading;
  bool graded_radical_ok = false;

  /// Construction-carried radical, certified during validation.
  std::optional<Subspace> radical_basis;

  /// Set when the basis is the element list of a group (group algebra).
  std::optional<GroupData> group;

  std::string provenance;

  const Row& prod(std::size_t i, std::size_t j) const { return table[i * dim + j]; }
};

using AlgebraHandle = std::shared_ptr<const StructureAlgebra>;

struct ValidationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Full structural validation: unit laws, associativity on every basis
/// triple (bit-packed path for p = 2), idempotent list axioms, grading
/// compatibility, and certification of a carried radical (two-sided ideal,
/// nilpotent, split semisimple quotient).
ValidationReport validate(const StructureAlgebra& A);

/// validate() and throw on failure; `as_input` selects input_error (user
/// data) over logic_error (internal construction bug).
void require_valid(const StructureAlgebra& A, bool as_input = false);

Row mult(const StructureAlgebra& A, const Row& x, const Row& y);
Row element_pow(const StructureAlgebra& A, Row x, std::uint64_t e);

/// Matrix of y |-> x*y on column coordinates: left_regular(x) * coords(y) =
/// coords(x*y).
Mat left_regular(const StructureAlgebra& A, const Row& x);
/// Matrix of y |-> y*x on column coordinates.
Mat right_regular(const StructureAlgebra& A, const Row& x);

/// Span of the products u*w, u and w running over basis rows of U and W.
Subspace product_span(const StructureAlgebra& A, const Subspace& U, const Subspace& W);

struct CenterResult {
  Subspace space;
  StructureAlgebra algebra;  // the center as an algebra in its own right
};

/// Z(A) as the kernel of the stacked commutation constraints
/// (left_regular(b_i) - right_regular(b_i) for every basis element).
CenterResult center(const StructureAlgebra& A);

/// K(A) = span{ b_i b_j - b_j b_i }.
Subspace commutator_subspace(const StructureAlgebra& A);

/// Jacobson radical by the first applicable strategy:
///  (1) carried (certified at validation),
///  (2) graded with certified degree-zero part: span of positive degrees,
///  (3) commutative: iterated kernel of the p-power (Frobenius) map.
/// Throws unsupported_error when none applies.
Subspace radical(const StructureAlgebra& A);

/// Dimensions of rad^k(A)/rad^(k+1)(A), k = 0, 1, ...; sums to dim A.
std::vector<std::size_t> loewy_layers(const StructureAlgebra& A);

struct Predicates {
  bool is_local = false;
  bool is_commutative = false;
  bool rad_square_zero = false;
};
Predicates predicates(const StructureAlgebra& A);

/// The algebra structure induced on a subspace U that contains the unit and
/// is closed under multiplication (throws input_error with a witness pair
/// otherwise).  A grading of A induces one on U when U's canonical basis is
/// homogeneous.
StructureAlgebra subalgebra(const StructureAlgebra& A, const Subspace& U);

/// Cartan matrix C[i][j] = dim e_i A e_j over the complete idempotent list.
/// Requires every diagonal Peirce block of A/rad to be one-dimensional
/// (basic split algebra); violations raise input_error, never pass silently.
IntMatrix peirce_cartan(const StructureAlgebra& A);

}  // namespace finalg
