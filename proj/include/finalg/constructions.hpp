#pragma once
// Constructions on structure algebras: the bimodule action on the dual,
// trivial extensions A ⋉ D(A), tensor products, lower-triangular 2x2 matrix
// algebras, group algebras, annihilator subspaces, symmetrizing forms, and
// certified linear isomorphisms between the composite constructions.
//
// Every constructed algebra is fully validated (require_valid) before it is
// returned, including certification of any carried radical basis.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finalg/algebra.hpp"

namespace finalg {

/// D(A) carries the A-bimodule structure (a.f)(x) = f(xa), (f.a)(x) = f(ax).
/// Functionals are coordinate rows against the dual basis: f[i] = f(b_i).
Row dual_act_left(const StructureAlgebra& A, const Row& a, const Row& f);
Row dual_act_right(const StructureAlgebra& A, const Row& f, const Row& a);

/// Trivial extension T(A) = A ⋉ D(A) with (a,f)(b,g) = (ab, a.g + f.b).
/// Basis: the basis of A followed by the dual basis (labels "<name>^*").
/// Carries the idempotents of A (lifted as (e,0)), and the certified radical
/// rad(A) ⊕ D(A) when rad(A) is computable.
AlgebraHandle trivial_extension(const AlgebraHandle& A);

/// A ⊗ B with the A-major basis b_i ⊗ c_j at index i*dim(B)+j.  Carries
/// product idempotents when both factors carry lists, the sum grading when
/// both factors are graded, and the certified radical
/// rad(A) ⊗ B + A ⊗ rad(B) when both factor radicals are computable.
AlgebraHandle tensor_product(const AlgebraHandle& A, const AlgebraHandle& B);

/// Lower-triangular 2x2 matrices over A; basis position-major over the
/// positions (1,1),(2,1),(2,2), each block carrying the basis of A.
AlgebraHandle triangular2(const AlgebraHandle& A);

// ---- small factory ----
AlgebraHandle field_algebra(std::uint64_t p);
AlgebraHandle dual_numbers(std::uint64_t p);  // k[x]/(x^2), graded by degree
/// Group algebra kG from an explicit multiplication table.  For p-groups the
/// augmentation ideal is attached as the certified radical and the unit as
/// the (unique) idempotent.
AlgebraHandle group_algebra(std::uint64_t p, const GroupData& G, const std::string& tag);
AlgebraHandle cyclic_group_algebra(std::uint64_t p, std::size_t n);
/// The dihedral group of order 8: elements 1, r, r2, r3, s, rs, r2s, r3s
/// with r^4 = s^2 = 1 and s r = r^-1 s.
GroupData dihedral8_group();

/// Ann_{D(A)}(K) = { f : f(K) = 0 } as a subspace of D(A) in dual
/// coordinates, for a subspace K of A.
Subspace annihilator_in_dual(const StructureAlgebra& A, const Subspace& K);

/// Center of a trivial extension two ways: the block formula
/// Z(A) ⊕ Ann_{D(A)}(K(A)) embedded in T(A), and the direct kernel
/// computation on T(A) itself.  Throws logic_error if they disagree.
struct CenterComparison {
  Subspace block_formula;
  Subspace direct;
};
CenterComparison trivial_extension_center(const AlgebraHandle& A, const AlgebraHandle& TA);

/// Is the functional f a symmetrizing form on A, i.e. is the bilinear form
/// (x,y) -> f(xy) symmetric and nondegenerate?  (Associativity of the form
/// is automatic from associativity of A.)
bool is_symmetrizing_form(const StructureAlgebra& A, const Row& f);

/// Gram matrix G[i][j] = f(b_i b_j) of the trace form of f.
Mat gram_matrix(const StructureAlgebra& A, const Row& f);

/// The canonical symmetrizing functional lambda(a,f) = f(1) on a trivial
/// extension of A, as a dual-coordinate row of length 2*dim(A).
Row canonical_extension_form(const StructureAlgebra& A);

/// Deterministic search for a symmetrizing form.  Any symmetrizing form is
/// symmetric as a functional, hence lies in Ann_{D(A)}(K(A)); that subspace
/// is enumerated completely in base-p coefficient order (first basis row =
/// least significant digit).  `form` empty means certified nonexistence.
/// Throws limit_error if the space exceeds `budget` candidates.
struct FormSearch {
  std::optional<Row> form;
  std::uint64_t tested = 0;
};
FormSearch find_symmetrizing_form(const StructureAlgebra& A, std::uint64_t budget = 1u << 20);

/// A linear map between algebras: row i of `rows` is the image of the i-th
/// domain basis element in codomain coordinates.
struct LinearAlgebraMap {
  AlgebraHandle domain;
  AlgebraHandle codomain;
  Mat rows;
};

/// Certify that the map is a unital algebra isomorphism: F(1) = 1,
/// F(b_i b_j) = F(b_i) F(b_j) for all pairs, and rows invertible.  Returns
/// the list of failures (empty = certified).
std::vector<std::string> verify_algebra_map(const LinearAlgebraMap& f);

/// For symmetric A with symmetrizing form f, the isomorphism
/// A ⊗ k[x]/(x^2) -> T(A) given by b_i ⊗ 1 -> (b_i, 0) and
/// b_i ⊗ x -> (0, b_i.f).  The returned map is fully verified; throws
/// logic_error if verification fails, input_error if f is not symmetrizing.
LinearAlgebraMap tensor_to_extension_iso(const AlgebraHandle& tensorAD, const AlgebraHandle& TA,
                                         const AlgebraHandle& A, const Row& form);

/// The index permutation A ⊗ T2(k) -> T2(A), fully verified.
LinearAlgebraMap tensor_to_triangular_iso(const AlgebraHandle& tensorAT, const AlgebraHandle& t2A,
                                          const AlgebraHandle& A);

/// dim Z(A) minus the p-rank of the Cartan matrix of A.  Valid for symmetric
/// algebras only: `form` must be a symmetrizing form on A (verified here).
std::size_t stable_center_dim(const AlgebraHandle& A, const Row& form);

}  // namespace finalg
