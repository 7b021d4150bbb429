// Module layer: regular/sub/quotient/sum modules, exact Hom solving, the
// opposite-composition endomorphism algebra (with its carried idempotents
// and certified radical), and the group-algebra toolkit (duals, diagonal
// tensors, norm rank, endotriviality).  Pins the two endomorphism oracles:
// End(A + S) matches the 11-dimensional two-vertex preset and End(A + X1)
// matches the corrected 16-dimensional preset, invariant by invariant.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "finalg/modrep.hpp"
#include "finalg/presets.hpp"

using namespace finalg;

namespace {

Row ind(std::size_t n, std::size_t i) {
  Row r(n, 0);
  r[i] = 1;
  return r;
}

Subspace nth_radical_power(const StructureAlgebra& A, int n) {
  Subspace J = radical(A);
  Subspace P = J;
  for (int k = 1; k < n; ++k) P = product_span(A, P, J);
  return P;
}

/// Coordinates of an endomorphism matrix in the basis end_algebra_op uses
/// (the canonical basis of the vectorized Hom space).
Row end_coords(const std::vector<Mat>& homs, const Mat& f) {
  std::vector<Row> vecs;
  for (const Mat& h : homs) vecs.push_back(h.a);
  Subspace V = Subspace::span(f.F, f.rows * f.cols, vecs);
  auto cc = coords_in(V, f.a);
  REQUIRE(cc.has_value());
  return *cc;
}

struct EndInvariants {
  std::size_t dim = 0;
  std::string cartan;
  std::size_t center_dim = 0;
  bool center_local = false;
  bool center_rad_square_zero = false;
  std::size_t commutator_dim = 0;
  std::size_t annihilator_dim = 0;
  std::vector<std::size_t> loewy;
};

EndInvariants invariants_of(const AlgebraHandle& E) {
  EndInvariants inv;
  inv.dim = E->dim;
  inv.cartan = to_string(peirce_cartan(*E));
  CenterResult z = center(*E);
  inv.center_dim = z.space.dim();
  Predicates zp = predicates(z.algebra);
  inv.center_local = zp.is_local;
  inv.center_rad_square_zero = zp.rad_square_zero;
  inv.commutator_dim = commutator_subspace(*E).dim();
  inv.annihilator_dim = annihilator_in_dual(*E, commutator_subspace(*E)).dim();
  inv.loewy = loewy_layers(*E);
  return inv;
}

}  // namespace

TEST_CASE("regular module validates and End of it recovers the algebra") {
  AlgebraHandle A = preset_algebra("kd8");
  ModuleRep reg = regular_module(A);
  CHECK(reg.dim == 8);
  CHECK(validate_module(reg).ok());

  std::vector<Mat> homs = hom_basis(reg, reg);
  CHECK(homs.size() == 8);  // homs of the regular module = right multiplications

  AlgebraHandle E = end_algebra_op(reg);
  CHECK(E->dim == 8);
  // x -> (m -> m x) is an algebra isomorphism onto End^op of the regular
  // module; certify it explicitly.
  Mat rows(A->F, A->dim, E->dim);
  for (std::size_t i = 0; i < A->dim; ++i) {
    rows.set_row(i, end_coords(homs, right_regular(*A, ind(A->dim, i))));
  }
  CHECK(verify_algebra_map(LinearAlgebraMap{A, E, rows}).empty());

  // Carried idempotent (the identity) and certified radical give the full
  // invariant set of the algebra itself.
  CHECK(to_string(peirce_cartan(*E)) == "[[8]]");
  CHECK(loewy_layers(*E) == std::vector<std::size_t>{1, 2, 2, 2, 1});
  CHECK(center(*E).space.dim() == 5);
}

TEST_CASE("trivial simple and the uniserial summands of rad/rad^4") {
  ModuleRep S = preset_module("S");
  CHECK(S.dim == 1);
  CHECK(validate_module(S).ok());
  ModuleRep X1 = preset_module("X1");
  ModuleRep X2 = preset_module("X2");
  CHECK(X1.dim == 3);
  CHECK(X2.dim == 3);
  CHECK(validate_module(X1).ok());
  CHECK(validate_module(X2).ok());

  PresentedAlgebra P = preset_presented("kd8");
  const AlgebraHandle& A = P.algebra;

  // On S every arrow acts as zero and the unit as one.
  CHECK(action_of(S, word_coords(P, "a")) == Mat(A->F, 1, 1));
  CHECK(action_of(S, word_coords(P, "b")) == Mat(A->F, 1, 1));
  CHECK(action_of(S, A->unit) == Mat::identity(A->F, 1));

  // The submodule generated by a in the regular module is 4-dimensional
  // (a, ba, aba, abab); cutting rad^4 leaves the length-3 uniserial.
  ModuleRep reg = regular_module(A);
  Subspace Aa = generated_submodule(reg, {word_coords(P, "a")});
  CHECK(Aa.dim() == 4);
  CHECK(member(Aa, word_coords(P, "b*a")));
  CHECK(member(Aa, word_coords(P, "a*b*a")));
  CHECK(member(Aa, word_coords(P, "a*b*a*b")));
  CHECK_FALSE(member(Aa, word_coords(P, "a*b")));

  Subspace R4 = nth_radical_power(*A, 4);
  CHECK(R4.dim() == 1);
  ModuleRep Q = quotient_module(reg, R4, "regular/rad4");
  Subspace U1 = generated_submodule(Q, {quotient_coords(R4, word_coords(P, "a"))});
  Subspace U2 = generated_submodule(Q, {quotient_coords(R4, word_coords(P, "b"))});
  CHECK(U1.dim() == 3);
  CHECK(U2.dim() == 3);

  // rad/rad^4 inside the quotient is exactly U1 + U2: a direct decomposition.
  std::vector<Row> radrows;
  Subspace R = radical(*A);
  for (std::size_t r = 0; r < R.dim(); ++r) radrows.push_back(quotient_coords(R4, R.basis.row(r)));
  Subspace radimg = Subspace::span(A->F, Q.dim, radrows);
  CHECK(radimg.dim() == 6);
  CHECK(sum(U1, U2) == radimg);
  CHECK(intersect(U1, U2).dim() == 0);

  // X1 is uniserial with the b-then-a ladder: b moves the generator down,
  // then a, then everything dies (b*aba lands in rad^4).
  auto g = coords_in(U1, quotient_coords(R4, word_coords(P, "a")));
  REQUIRE(g.has_value());
  Row v1 = module_apply(action_of(X1, word_coords(P, "b")), *g);
  CHECK_FALSE(row_is_zero(v1));
  Row v2 = module_apply(action_of(X1, word_coords(P, "a")), v1);
  CHECK_FALSE(row_is_zero(v2));
  CHECK(row_is_zero(module_apply(action_of(X1, word_coords(P, "b")), v2)));
  CHECK(row_is_zero(module_apply(action_of(X1, word_coords(P, "a")), *g)));
}

TEST_CASE("endomorphism oracle: End(A + S) matches the 11-dimensional preset") {
  AlgebraHandle A = preset_algebra("kd8");
  DirectSum MS = direct_sum({regular_module(A), preset_module("S")}, "regular+S");
  CHECK(MS.module.dim == 9);
  AlgebraHandle E = end_algebra_op(MS);
  EndInvariants ie = invariants_of(E);
  CHECK(ie.dim == 11);
  CHECK(ie.cartan == "[[8,1],[1,1]]");
  CHECK(ie.center_dim == 5);
  CHECK(ie.center_local);
  CHECK(ie.center_rad_square_zero);
  CHECK(ie.commutator_dim == 6);
  CHECK(ie.annihilator_dim == 5);

  AlgebraHandle L = preset_algebra("lambda");
  EndInvariants il = invariants_of(L);
  CHECK(ie.dim == il.dim);
  CHECK(ie.cartan == il.cartan);
  CHECK(ie.center_dim == il.center_dim);
  CHECK(ie.center_local == il.center_local);
  CHECK(ie.center_rad_square_zero == il.center_rad_square_zero);
  CHECK(ie.commutator_dim == il.commutator_dim);
  CHECK(ie.annihilator_dim == il.annihilator_dim);
  CHECK(ie.loewy == il.loewy);
}

TEST_CASE("endomorphism oracle: End(A + X) matches the corrected 16-dimensional preset") {
  AlgebraHandle A = preset_algebra("kd8");
  EndInvariants e1 =
      invariants_of(end_algebra_op(direct_sum({regular_module(A), preset_module("X1")}, "regular+X1")));
  EndInvariants e2 =
      invariants_of(end_algebra_op(direct_sum({regular_module(A), preset_module("X2")}, "regular+X2")));
  CHECK(e1.dim == 16);
  CHECK(e1.cartan == "[[8,3],[3,2]]");
  CHECK(e1.center_dim == 5);
  CHECK(e1.center_rad_square_zero);
  CHECK(e1.commutator_dim == 11);
  CHECK(e1.annihilator_dim == 5);

  // The other summand produces identical invariants...
  CHECK(e2.dim == e1.dim);
  CHECK(e2.cartan == e1.cartan);
  CHECK(e2.center_dim == e1.center_dim);
  CHECK(e2.commutator_dim == e1.commutator_dim);
  CHECK(e2.annihilator_dim == e1.annihilator_dim);
  CHECK(e2.loewy == e1.loewy);

  // ...and so does the corrected presentation, invariant by invariant.
  EndInvariants ig = invariants_of(preset_algebra("gamma_corrected"));
  CHECK(e1.dim == ig.dim);
  CHECK(e1.cartan == ig.cartan);
  CHECK(e1.center_dim == ig.center_dim);
  CHECK(e1.center_local == ig.center_local);
  CHECK(e1.center_rad_square_zero == ig.center_rad_square_zero);
  CHECK(e1.commutator_dim == ig.commutator_dim);
  CHECK(e1.annihilator_dim == ig.annihilator_dim);
  CHECK(e1.loewy == ig.loewy);

  // The group-algebra spelling of the same sum gives the same Cartan data.
  AlgebraHandle G = preset_algebra("kd8_group");
  EndInvariants eg =
      invariants_of(end_algebra_op(direct_sum({regular_module(G), preset_module("X1@group")}, "reg+X1")));
  CHECK(eg.dim == e1.dim);
  CHECK(eg.cartan == e1.cartan);
  CHECK(eg.center_dim == e1.center_dim);
  CHECK(eg.loewy == e1.loewy);
}

TEST_CASE("duals, diagonal tensors, norm rank, endotriviality") {
  AlgebraHandle G = preset_algebra("kd8_group");
  ModuleRep Sg = preset_module("S@group");
  CHECK(Sg.dim == 1);
  for (std::size_t i = 0; i < G->dim; ++i) CHECK(Sg.action[i].at(0, 0) == 1);

  ModuleRep X1g = preset_module("X1@group");
  ModuleRep X2g = preset_module("X2@group");
  CHECK(X1g.dim == 3);
  CHECK(X2g.dim == 3);

  ModuleRep D = dual_module(X1g);
  CHECK(validate_module(D).ok());
  ModuleRep DD = dual_module(D);
  for (std::size_t i = 0; i < G->dim; ++i) CHECK(DD.action[i] == X1g.action[i]);

  ModuleRep E = tensor_diagonal(D, X1g);
  CHECK(E.dim == 9);
  CHECK(validate_module(E).ok());
  CHECK(norm_rank(E) == 1);

  CHECK(is_endotrivial(X1g));
  CHECK(is_endotrivial(X2g));
  CHECK(is_endotrivial(Sg));

  // The free module of rank one is not endotrivial, and the norm rank counts
  // free summands: the rank-8 free module has norm rank 8 and no
  // one-dimensional leftover.
  ModuleRep free1 = regular_module(G);
  CHECK_FALSE(is_endotrivial(free1));
  DirectSum free8 = direct_sum(std::vector<ModuleRep>(8, free1), "free8");
  CHECK(free8.module.dim == 64);
  CHECK(norm_rank(free8.module) == 8);
  CHECK(norm_rank(free1) == 1);

  // Group-only operations refuse algebras without group data.
  AlgebraHandle L = preset_algebra("lambda");
  ModuleRep regL = regular_module(L);
  CHECK_THROWS_AS(dual_module(regL), unsupported_error);
  CHECK_THROWS_AS(tensor_diagonal(regL, regL), unsupported_error);
  CHECK_THROWS_AS(norm_rank(regL), unsupported_error);
  CHECK_THROWS_AS(is_endotrivial(regL), unsupported_error);
  // C6 in characteristic 5 is not a p-group: the test refuses rather than
  // answering from an inapplicable formula.
  AlgebraHandle C6 = cyclic_group_algebra(5, 6);
  CHECK_THROWS_AS(is_endotrivial(regular_module(C6)), unsupported_error);
  CHECK_THROWS_AS(tensor_diagonal(regular_module(G), regL), input_error);
}

TEST_CASE("Hom over the triangular algebra: the second-column module has an 8-dimensional End") {
  AlgebraHandle A = preset_algebra("kd8");
  AlgebraHandle T = triangular2(A);
  ModuleRep reg = regular_module(A);
  // The module (0, A): blocks (1,1) and (2,1) act as zero, block (2,2) by
  // left multiplication.
  ModuleRep M{T, A->dim, {}, "(0,A)"};
  for (std::size_t q = 0; q < 3; ++q) {
    for (std::size_t i = 0; i < A->dim; ++i) {
      M.action.push_back(q == 2 ? reg.action[i] : Mat(A->F, A->dim, A->dim));
    }
  }
  CHECK(validate_module(M).ok());
  CHECK(hom_basis(M, M).size() == 8);
  CHECK(hom_basis(reg, reg).size() == 8);

  AlgebraHandle E = end_algebra_op(M);
  CHECK(E->dim == 8);
  CHECK(to_string(peirce_cartan(*E)) == "[[8]]");
  CHECK(loewy_layers(*E) == std::vector<std::size_t>{1, 2, 2, 2, 1});
}

TEST_CASE("isomorphic summands are detected and the radical carry is declined") {
  AlgebraHandle A = preset_algebra("kd8");
  ModuleRep reg = regular_module(A);
  AlgebraHandle E = end_algebra_op(direct_sum({reg, reg}, "regular+regular"));
  CHECK(E->dim == 32);
  CHECK(E->idempotents.has_value());
  CHECK_FALSE(E->radical_basis.has_value());
  // Downstream radical consumers refuse instead of guessing.
  CHECK_THROWS_AS(radical(*E), unsupported_error);
  CHECK_THROWS_AS(peirce_cartan(*E), unsupported_error);
}

TEST_CASE("sub/quotient edges and validation failures") {
  AlgebraHandle A = preset_algebra("kd8");
  ModuleRep reg = regular_module(A);
  PresentedAlgebra P = preset_presented("kd8");

  // Non-closed subspace: span{a} alone is moved out by the action.
  Subspace notclosed = Subspace::span(A->F, 8, {word_coords(P, "a")});
  CHECK_THROWS_AS(submodule(reg, notclosed, "bad"), input_error);
  CHECK_THROWS_AS(quotient_module(reg, notclosed, "bad"), input_error);

  // Zero and full endpoints.
  ModuleRep zero = submodule(reg, Subspace::zero(A->F, 8), "zero");
  CHECK(zero.dim == 0);
  CHECK(validate_module(zero).ok());
  CHECK(hom_basis(zero, reg).empty());
  CHECK_THROWS_AS(end_algebra_op(zero), input_error);
  ModuleRep all = quotient_module(reg, Subspace::full(A->F, 8), "zero-quotient");
  CHECK(all.dim == 0);

  // Tampered action: break multiplicativity and the unit in turn.
  ModuleRep bad = preset_module("X1");
  bad.action[3].at(0, 0) ^= 1;
  ValidationReport rep = validate_module(bad);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.failures.front().find("multiplicative") != std::string::npos);
  CHECK_THROWS_AS(require_valid_module(bad, true), input_error);
  CHECK_THROWS_AS(require_valid_module(bad), std::logic_error);

  ModuleRep nounit = preset_module("X1");
  nounit.action[0] = Mat(A->F, 3, 3);
  rep = validate_module(nounit);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.failures.front().find("unit") != std::string::npos);

  ModuleRep shape = preset_module("X1");
  shape.action.pop_back();
  CHECK_FALSE(validate_module(shape).ok());

  // Summands over different algebras refuse to sum.
  CHECK_THROWS_AS(direct_sum({reg, regular_module(preset_algebra("lambda"))}, "bad"), input_error);
  CHECK_THROWS_AS(hom_basis(reg, regular_module(preset_algebra("lambda"))), input_error);

  // Unknown module preset names the known list.
  CHECK_THROWS_WITH_AS(preset_module("nope"),
                       doctest::Contains("unknown module preset"), input_error);
}
