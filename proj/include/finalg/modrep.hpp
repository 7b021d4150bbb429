#pragma once

// Finite-dimensional left modules over a structure algebra, presented by one
// action matrix per algebra basis element.  Provides regular modules,
// action-closed sub- and quotient modules, direct sums, Hom spaces by exact
// intertwiner solving, and endomorphism algebras under the opposite
// composition product (so End of the regular module recovers the algebra
// itself).  Over group algebras: dual modules, diagonal tensor products, the
// norm rank, and the endotriviality test for p-groups.

#include <cstdint>
#include <string>
#include <vector>

#include "finalg/algebra.hpp"

namespace finalg {

/// Left module over A on column coordinates:
/// action[i] * coords(m) = coords(b_i . m).
struct ModuleRep {
  AlgebraHandle algebra;
  std::size_t dim = 0;
  std::vector<Mat> action;  // one dim x dim matrix per algebra basis element
  std::string tag;
};

/// act * m with m as a coordinate row (column-vector convention).
Row module_apply(const Mat& act, const Row& m);

/// Action matrix of an arbitrary algebra element x = sum x_i b_i.
Mat action_of(const ModuleRep& M, const Row& x);

/// Shape and field consistency; the unit acts as the identity; and
/// action(b_i) action(b_j) agrees with the action of b_i b_j for every basis
/// pair (bilinearity of the table makes basis pairs sufficient).
ValidationReport validate_module(const ModuleRep& M);

/// validate_module() and throw on failure; `as_input` selects input_error
/// (user data) over logic_error (internal construction bug).
void require_valid_module(const ModuleRep& M, bool as_input = false);

/// A as a left module over itself: action = left multiplication.
ModuleRep regular_module(const AlgebraHandle& A, const std::string& tag = "regular");

/// Smallest action-closed subspace of M containing the given rows.
Subspace generated_submodule(const ModuleRep& M, const std::vector<Row>& generators);

/// Module structure induced on an action-closed subspace U, in the
/// coordinates of U's canonical basis.  input_error (naming the offending
/// algebra basis element) if U is not closed under the action.
ModuleRep submodule(const ModuleRep& M, const Subspace& U, const std::string& tag);

/// Image of an M-coordinate row in M/U coordinates: the non-pivot entries of
/// the canonical representative of v + U.
Row quotient_coords(const Subspace& U, const Row& v);

/// M/U for an action-closed subspace U, on the non-pivot coordinates of U.
ModuleRep quotient_module(const ModuleRep& M, const Subspace& U, const std::string& tag);

struct DirectSum {
  ModuleRep module;
  std::vector<std::size_t> offsets;    // start of each summand block
  std::vector<std::size_t> part_dims;  // summand dimensions
  std::vector<std::string> part_tags;  // summand tags; idempotent labels
};

/// External direct sum with block-diagonal action.  All parts must live over
/// the same algebra (same field, dimension, labels, and table).
DirectSum direct_sum(const std::vector<ModuleRep>& parts, const std::string& tag);

/// Basis of Hom_A(M, N) = { T : T act_M(b) = act_N(b) T for all b }, solved
/// exactly as the kernel of the stacked intertwiner constraints; canonical
/// via the RREF of the row-major vectorized solution space.
std::vector<Mat> hom_basis(const ModuleRep& M, const ModuleRep& N);

/// End_A(M) under the opposite product f.g := g o f (matrix product g f),
/// the convention under which End of the regular module recovers the algebra
/// itself via x -> (m -> m x).  The summand projections are carried as the
/// complete idempotent list.  When every summand pair is certified
/// non-isomorphic (exhaustive invertibility search, at most `iso_budget`
/// candidates per pair) and every summand has a split local endomorphism
/// ring, the radical -- off-diagonal Hom blocks plus the per-summand
/// non-units -- is carried and certified during validation; if certification
/// is not available the result simply carries no radical.
AlgebraHandle end_algebra_op(const DirectSum& S, std::uint64_t iso_budget = 1u << 16);
AlgebraHandle end_algebra_op(const ModuleRep& M);

// ---- modules over group algebras ----

/// Dual module: g acts as act(g^{-1})^T.  unsupported_error when the
/// algebra carries no group data.
ModuleRep dual_module(const ModuleRep& M);

/// M (x) N with the diagonal action g -> act_M(g) (x) act_N(g), basis index
/// (i,j) -> i*dim(N)+j.  Group algebras only.
ModuleRep tensor_diagonal(const ModuleRep& M, const ModuleRep& N);

/// Rank of the norm element (sum of all group elements) acting on M.  Over
/// F_p with G a p-group this counts the free direct summands of M.
std::size_t norm_rank(const ModuleRep& M);

/// Endotriviality of M over a p-group algebra in characteristic p.
/// E = D(M) (x) M decomposes as (free) + (projective-free part), the free
/// rank being norm_rank(E); M is endotrivial exactly when the projective-
/// free part is one-dimensional (hence trivial): dim E - |G| * norm_rank(E)
/// == 1.  unsupported_error unless the algebra is a group algebra with |G| a
/// power of the characteristic.
bool is_endotrivial(const ModuleRep& M);

}  // namespace finalg
