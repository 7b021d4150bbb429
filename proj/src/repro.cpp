#include "finalg/repro.hpp"

#include <json.hpp>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "finalg/algebra.hpp"
#include "finalg/constructions.hpp"
#include "finalg/errors.hpp"
#include "finalg/intmat.hpp"
#include "finalg/modrep.hpp"
#include "finalg/presentation.hpp"
#include "finalg/presets.hpp"

namespace finalg {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::PAPER: return "PAPER";
    case Provenance::DERIVED: return "DERIVED";
    case Provenance::TRIVIAL: return "TRIVIAL";
  }
  return "?";
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::PASS: return "PASS";
    case CheckStatus::FAIL: return "FAIL";
    case CheckStatus::FLAGGED: return "FLAGGED";
  }
  return "?";
}

namespace {

// ---------- small rendering helpers ----------

std::string n2s(std::size_t n) { return std::to_string(n); }
std::string b2s(bool b) { return b ? "true" : "false"; }

std::string vec2s(const std::vector<std::size_t>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "]";
}

std::string form2s(const BQForm& f) {
  return "(" + f.a.str() + "," + f.b.str() + "," + f.c.str() + ")";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

/// A row of A rendered as a sum of labeled basis elements ("0" when zero).
std::string render_element(const StructureAlgebra& A, const Row& v) {
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    terms.push_back(v[i] == 1 ? A.labels[i] : std::to_string(v[i]) + "*" + A.labels[i]);
  }
  return terms.empty() ? "0" : join(terms, " + ");
}

/// A functional on A (coordinates against the dual basis) rendered with ^*.
std::string render_functional(const StructureAlgebra& A, const Row& f) {
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    std::string lab = "(" + A.labels[i] + ")^*";
    terms.push_back(f[i] == 1 ? lab : std::to_string(f[i]) + "*" + lab);
  }
  return terms.empty() ? "0" : join(terms, " + ");
}

/// "dim 5, local, rad^2 = 0" for a center algebra.
std::string center_profile(const StructureAlgebra& Z) {
  Predicates p = predicates(Z);
  return "dim " + n2s(Z.dim) + ", " + (p.is_local ? "local" : "not local") + ", rad^2 " +
         (p.rad_square_zero ? "= 0" : "!= 0");
}

std::size_t label_index(const StructureAlgebra& A, const std::string& label) {
  for (std::size_t i = 0; i < A.labels.size(); ++i) {
    if (A.labels[i] == label) return i;
  }
  throw std::runtime_error("basis label not found: " + label);
}

Row indicator_row(std::size_t n, std::size_t i) {
  Row r(n, 0);
  r[i] = 1;
  return r;
}

Row embed_at(const Row& v, std::size_t ambient, std::size_t offset) {
  Row out(ambient, 0);
  for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
  return out;
}

IntMatrix int_identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix kron(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix out(x.rows * y.rows, x.cols * y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = 0; j < x.cols; ++j) {
      for (std::size_t r = 0; r < y.rows; ++r) {
        for (std::size_t c = 0; c < y.cols; ++c) {
          out.at(i * y.rows + r, j * y.cols + c) = x.at(i, j) * y.at(r, c);
        }
      }
    }
  }
  return out;
}

BigInt det2(const IntMatrix& m) { return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0); }

// ---------- row assembly ----------

void add(std::vector<ReproCheck>& out, std::string id, int crit, std::string desc, Provenance prov,
         std::string expected, std::string computed, bool flag_on_mismatch = false) {
  const CheckStatus st = expected == computed
                             ? CheckStatus::PASS
                             : (flag_on_mismatch ? CheckStatus::FLAGGED : CheckStatus::FAIL);
  out.push_back(ReproCheck{std::move(id), crit, std::move(desc), prov, std::move(expected),
                           std::move(computed), st});
}

std::string pad2(int n) { return n < 10 ? "0" + std::to_string(n) : std::to_string(n); }

template <class Fn>
void guarded(std::vector<ReproCheck>& out, int crit, Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    out.push_back(ReproCheck{"c" + pad2(crit) + ".exception", crit,
                             "criterion aborted by an exception", Provenance::TRIVIAL,
                             "no exception", std::string(e.what()), CheckStatus::FAIL});
  }
}

template <class T>
const T& req(const std::optional<T>& v, const char* name) {
  if (!v) throw std::runtime_error(std::string("prerequisite unavailable: ") + name);
  return *v;
}

const AlgebraHandle& req(const AlgebraHandle& h, const char* name) {
  if (!h) throw std::runtime_error(std::string("prerequisite unavailable: ") + name);
  return h;
}

// ---------- shared invariant bundles ----------

struct EndInv {
  std::size_t dim = 0;
  std::string cartan;
  std::size_t center_dim = 0;
  bool center_local = false;
  bool center_rad_square_zero = false;
  std::size_t commutator_dim = 0;
  std::size_t annihilator_dim = 0;
  std::string loewy;

  bool operator==(const EndInv&) const = default;
};

EndInv invariants_of(const StructureAlgebra& A) {
  const CenterResult Z = center(A);
  const Predicates zp = predicates(Z.algebra);
  const Subspace K = commutator_subspace(A);
  return EndInv{A.dim,
                to_string(peirce_cartan(A)),
                Z.space.dim(),
                zp.is_local,
                zp.rad_square_zero,
                K.dim(),
                annihilator_in_dual(A, K).dim(),
                vec2s(loewy_layers(A))};
}

// ---------- shared objects across criteria ----------

struct Ctx {
  PresentedAlgebra kd8P, lamP, gcP, gpP;
  AlgebraHandle kd8, lam, gc, gp, kd8g;
  AlgebraHandle endS, endX1, endX2;
  AlgebraHandle TL, TG, Tkd8, tensAD, tensAT, T2A, LC2;
  std::optional<IntMatrix> CL, CG;
  std::optional<EndInv> invX1;
};

// Pseudo-random unimodular 2x2 integer matrix: a short product of shears,
// a quarter-turn, and a reflection, so determinants +-1 both occur.
IntMatrix random_unimodular(std::mt19937& rng) {
  IntMatrix U = int_identity(2);
  const int steps = 4 + static_cast<int>(rng() % 4);
  for (int s = 0; s < steps; ++s) {
    IntMatrix E = int_identity(2);
    switch (rng() % 4) {
      case 0: E.at(0, 1) = static_cast<long long>(rng() % 7) - 3; break;
      case 1: E.at(1, 0) = static_cast<long long>(rng() % 7) - 3; break;
      case 2:
        E.at(0, 0) = 0; E.at(0, 1) = 1; E.at(1, 0) = -1; E.at(1, 1) = 0;
        break;
      default: E.at(1, 1) = -1; break;
    }
    U = mul(U, E);
  }
  return U;
}

}  // namespace

std::vector<ReproCheck> run_repro() {
  std::vector<ReproCheck> out;
  Ctx ctx;

  // -- 1: the eight-dimensional dihedral-type quotient ------------------
  guarded(out, 1, [&] {
    ctx.kd8P = preset_presented("kd8");
    ctx.kd8 = ctx.kd8P.algebra;
    const StructureAlgebra& A = *ctx.kd8;
    add(out, "c01.dim", 1, "dimension of the two-loop quotient algebra", Provenance::PAPER, "8",
        n2s(A.dim));
    add(out, "c01.basis", 1, "monomial basis produced by the rewriting quotient",
        Provenance::PAPER, "e_1, a, b, a*b, b*a, a*b*a, b*a*b, a*b*a*b", join(A.labels, ", "));
    add(out, "c01.cartan", 1, "Cartan matrix (local algebra: one projective)", Provenance::PAPER,
        "[[8]]", to_string(peirce_cartan(A)));
    add(out, "c01.loewy", 1, "radical filtration layer dimensions", Provenance::PAPER,
        "[1,2,2,2,1]", vec2s(loewy_layers(A)));
  });

  // -- 2: its center -----------------------------------------------------
  guarded(out, 2, [&] {
    const StructureAlgebra& A = *req(ctx.kd8, "kd8");
    const CenterResult Z = center(A);
    add(out, "c02.dim", 2, "dimension of the center", Provenance::PAPER, "5", n2s(Z.space.dim()));
    add(out, "c02.profile", 2, "the center is local with square-zero radical", Provenance::PAPER,
        "dim 5, local, rad^2 = 0", center_profile(Z.algebra));
    const std::vector<Row> zgens = {
        A.unit, row_add(A.F, word_coords(ctx.kd8P, "a*b"), word_coords(ctx.kd8P, "b*a")),
        word_coords(ctx.kd8P, "a*b*a"), word_coords(ctx.kd8P, "b*a*b"),
        word_coords(ctx.kd8P, "a*b*a*b")};
    add(out, "c02.span", 2, "center equals the span of e_1, a*b+b*a, a*b*a, b*a*b, a*b*a*b",
        Provenance::PAPER, "true", b2s(Z.space == Subspace::span(A.F, A.dim, zgens)));
  });

  // -- 3: the eleven-dimensional two-vertex algebra ----------------------
  guarded(out, 3, [&] {
    ctx.lamP = preset_presented("lambda");
    ctx.lam = ctx.lamP.algebra;
    const StructureAlgebra& A = *ctx.lam;
    add(out, "c03.dim", 3, "dimension of the two-vertex quotient algebra", Provenance::PAPER, "11",
        n2s(A.dim));
    ctx.CL = peirce_cartan(A);
    add(out, "c03.cartan", 3, "Cartan matrix over the two vertex idempotents", Provenance::PAPER,
        "[[8,1],[1,1]]", to_string(*ctx.CL));
    add(out, "c03.center", 3, "center profile", Provenance::PAPER, "dim 5, local, rad^2 = 0",
        center_profile(center(A).algebra));

    const Subspace K = commutator_subspace(A);
    const std::vector<Row> krows = {
        row_add(A.F, word_coords(ctx.lamP, "t2*t1"), word_coords(ctx.lamP, "t1*t2")),
        word_coords(ctx.lamP, "t3"),
        word_coords(ctx.lamP, "t4"),
        word_coords(ctx.lamP, "t1*t2*t1"),
        word_coords(ctx.lamP, "t2*t1*t2"),
        word_coords(ctx.lamP, "t4*t3")};
    const bool kmatch = K == Subspace::span(A.F, A.dim, krows);
    add(out, "c03.commutators", 3,
        "commutator subspace equals the span of t2*t1+t1*t2, t3, t4, t1*t2*t1, t2*t1*t2, t4*t3",
        Provenance::PAPER, "dim 6, equals listed span",
        "dim " + n2s(K.dim()) + (kmatch ? ", equals listed span" : ", differs from listed span"));

    const Subspace ann = annihilator_in_dual(A, K);
    std::vector<Row> arows = {
        indicator_row(11, label_index(A, "e_1")), indicator_row(11, label_index(A, "e_2")),
        indicator_row(11, label_index(A, "t1")), indicator_row(11, label_index(A, "t2")),
        row_add(A.F, indicator_row(11, label_index(A, "t2*t1")),
                indicator_row(11, label_index(A, "t1*t2")))};
    const bool amatch = ann == Subspace::span(A.F, 11, arows);
    add(out, "c03.annihilator", 3,
        "functionals vanishing on the commutators: span of (e_1)^*, (e_2)^*, (t1)^*, (t2)^*, "
        "(t2*t1)^*+(t1*t2)^*",
        Provenance::PAPER, "dim 5, equals listed span",
        "dim " + n2s(ann.dim()) +
            (amatch ? ", equals listed span" : ", differs from listed span"));
  });

  // -- 4: endomorphism oracle for the eleven-dimensional algebra ---------
  guarded(out, 4, [&] {
    const AlgebraHandle& A = req(ctx.kd8, "kd8");
    ctx.endS = end_algebra_op(
        direct_sum({regular_module(A), preset_module("S")}, "regular+simple"));
    const EndInv inv = invariants_of(*ctx.endS);
    add(out, "c04.dim", 4, "dimension of End(A (+) S), opposite multiplication",
        Provenance::PAPER, "11", n2s(inv.dim));
    add(out, "c04.cartan", 4,
        "Cartan matrix; Peirce blocks ordered (regular summand, simple summand)",
        Provenance::PAPER, "[[8,1],[1,1]]", inv.cartan);
    add(out, "c04.center", 4, "dimension of the center", Provenance::PAPER, "5",
        n2s(inv.center_dim));
    add(out, "c04.commutators", 4, "dimension of the commutator subspace", Provenance::PAPER, "6",
        n2s(inv.commutator_dim));
    add(out, "c04.match", 4,
        "every computed invariant (dim, Cartan, center profile, commutators, annihilator, "
        "radical layers) agrees with the presented eleven-dimensional algebra",
        Provenance::PAPER, "true", b2s(inv == invariants_of(*req(ctx.lam, "lambda"))));
  });

  // -- 5: endomorphism oracle for the sixteen-dimensional algebra --------
  guarded(out, 5, [&] {
    const AlgebraHandle& A = req(ctx.kd8, "kd8");
    ctx.endX1 = end_algebra_op(
        direct_sum({regular_module(A), preset_module("X1")}, "regular+X1"));
    ctx.endX2 = end_algebra_op(
        direct_sum({regular_module(A), preset_module("X2")}, "regular+X2"));
    const EndInv inv = invariants_of(*ctx.endX1);
    ctx.invX1 = inv;
    add(out, "c05.dim", 5, "dimension of End(A (+) X1), opposite multiplication",
        Provenance::PAPER, "16", n2s(inv.dim));
    add(out, "c05.cartan", 5,
        "Cartan matrix; Peirce blocks ordered (regular summand, uniserial summand)",
        Provenance::PAPER, "[[8,3],[3,2]]", inv.cartan);
    add(out, "c05.center", 5, "center dimension and square-zero radical", Provenance::PAPER,
        "dim 5, rad^2 = 0",
        "dim " + n2s(inv.center_dim) + ", rad^2 " + (inv.center_rad_square_zero ? "= 0" : "!= 0"));
    add(out, "c05.commutators", 5, "dimension of the commutator subspace", Provenance::PAPER, "11",
        n2s(inv.commutator_dim));
    add(out, "c05.annihilator", 5, "dimension of the commutator annihilator in the dual",
        Provenance::PAPER, "5", n2s(inv.annihilator_dim));
    add(out, "c05.second-summand", 5,
        "the other uniserial summand X2 yields identical invariants", Provenance::DERIVED, "true",
        b2s(inv == invariants_of(*ctx.endX2)));
  });

  // -- 6: the two presented sixteen-dimensional variants ------------------
  guarded(out, 6, [&] {
    ctx.gcP = preset_presented("gamma_corrected");
    ctx.gc = ctx.gcP.algebra;
    ctx.gpP = preset_presented("gamma_printed");
    ctx.gp = ctx.gpP.algebra;
    const StructureAlgebra& A = *ctx.gc;
    add(out, "c06.corrected", 6,
        "corrected presentation reproduces every invariant of the endomorphism oracle",
        Provenance::DERIVED, "true",
        b2s(invariants_of(A) == req(ctx.invX1, "End(A (+) X1) invariants")));
    const CenterResult Z = center(A);
    const std::vector<Row> zgens = {
        A.unit,
        row_add(A.F,
                row_add(A.F, word_coords(ctx.gcP, "s2*s1"), word_coords(ctx.gcP, "s1*s2")),
                word_coords(ctx.gcP, "s3*s4")),
        word_coords(ctx.gcP, "s1*s2*s1"), word_coords(ctx.gcP, "s2*s1*s2"),
        word_coords(ctx.gcP, "s2*s1*s2*s1")};
    add(out, "c06.center-span", 6,
        "center equals the span of 1, s2*s1+s1*s2+s3*s4, s1*s2*s1, s2*s1*s2, s2*s1*s2*s1",
        Provenance::PAPER, "true", b2s(Z.space == Subspace::span(A.F, A.dim, zgens)));
    // Recorded discrepancy: the verbatim relation list leaves the length-four
    // paths s1*s2*s1*s4 and s3*s2*s1*s4 alive, so its quotient is larger than
    // the listed sixteen-element basis.  The row is FLAGGED, never silently
    // corrected; the corrected preset adds exactly those two relations.
    add(out, "c06.printed-dim", 6,
        "dimension of the algebra presented by the verbatim relation list", Provenance::PAPER,
        "16", n2s(ctx.gp->dim), /*flag_on_mismatch=*/true);
  });

  // -- 7: trivial extension of the eleven-dimensional algebra ------------
  guarded(out, 7, [&] {
    const AlgebraHandle& L = req(ctx.lam, "lambda");
    ctx.TL = trivial_extension(L);
    const StructureAlgebra& T = *ctx.TL;
    add(out, "c07.dim", 7, "dimension of the trivial extension", Provenance::TRIVIAL, "22",
        n2s(T.dim));
    add(out, "c07.symmetric", 7,
        "the canonical functional (a,f) -> f(1) is a symmetrizing form", Provenance::PAPER,
        "true", b2s(is_symmetrizing_form(T, canonical_extension_form(*L))));
    const IntMatrix C = peirce_cartan(T);
    add(out, "c07.cartan", 7, "Cartan matrix of the extension", Provenance::PAPER,
        "[[16,2],[2,2]]", to_string(C));
    add(out, "c07.prank", 7, "rank of the Cartan matrix reduced mod 2", Provenance::PAPER, "0",
        n2s(p_rank(C, 2)));
    add(out, "c07.center", 7, "center profile of the extension", Provenance::PAPER,
        "dim 10, local, rad^2 = 0", center_profile(center(T).algebra));
    const CenterComparison cc = trivial_extension_center(L, ctx.TL);
    add(out, "c07.block-formula", 7,
        "block description Z(A) (+) Ann(K(A)) equals the directly computed center",
        Provenance::PAPER, "true", b2s(cc.block_formula == cc.direct));
  });

  // -- 8: trivial extension of the sixteen-dimensional algebra -----------
  guarded(out, 8, [&] {
    const AlgebraHandle& G = req(ctx.gc, "gamma_corrected");
    ctx.TG = trivial_extension(G);
    const StructureAlgebra& T = *ctx.TG;
    const IntMatrix C = peirce_cartan(T);
    add(out, "c08.cartan", 8, "Cartan matrix of the extension", Provenance::PAPER,
        "[[16,6],[6,4]]", to_string(C));
    add(out, "c08.prank", 8, "rank of the Cartan matrix reduced mod 2", Provenance::PAPER, "0",
        n2s(p_rank(C, 2)));
    const CenterResult Z = center(T);
    add(out, "c08.center", 8, "center profile: the radical no longer squares to zero",
        Provenance::PAPER, "dim 10, local, rad^2 != 0", center_profile(Z.algebra));

    const StructureAlgebra& A = *G;
    Row z = row_add(A.F, word_coords(ctx.gcP, "s2*s1"), word_coords(ctx.gcP, "s1*s2"));
    z = row_add(A.F, z, word_coords(ctx.gcP, "s3*s4"));
    Row f(A.dim, 0);
    f[label_index(A, "s2*s1")] = 1;
    f[label_index(A, "s1*s2")] = 1;
    f[label_index(A, "s3*s4")] = 1;
    const Row product = mult(T, embed_at(z, T.dim, 0), embed_at(f, T.dim, A.dim));
    add(out, "c08.witness", 8,
        "(s2*s1 + s1*s2 + s3*s4) * ((s2*s1)^* + (s1*s2)^* + (s3*s4)^*) inside the extension",
        Provenance::PAPER, "e_2^*", render_element(T, product));
    add(out, "c08.center-loewy", 8, "radical filtration of the center", Provenance::PAPER,
        "[1,8,1]", vec2s(loewy_layers(Z.algebra)));
  });

  // -- 9: separation of the stable centers --------------------------------
  guarded(out, 9, [&] {
    const AlgebraHandle& TL = req(ctx.TL, "trivial extension (eleven-dim base)");
    const AlgebraHandle& TG = req(ctx.TG, "trivial extension (sixteen-dim base)");
    const std::size_t sL = stable_center_dim(TL, canonical_extension_form(*req(ctx.lam, "lambda")));
    const std::size_t sG =
        stable_center_dim(TG, canonical_extension_form(*req(ctx.gc, "gamma_corrected")));
    add(out, "c09.stable-dims", 9, "stable center dimensions of the two extensions",
        Provenance::PAPER, "10, 10", n2s(sL) + ", " + n2s(sG));
    const std::size_t prL = p_rank(peirce_cartan(*TL), 2);
    const std::size_t prG = p_rank(peirce_cartan(*TG), 2);
    add(out, "c09.projective-centers", 9,
        "projective center dimensions (Cartan rank mod 2) of the two extensions",
        Provenance::PAPER, "0, 0", n2s(prL) + ", " + n2s(prG));
    const bool r2L = predicates(center(*TL).algebra).rad_square_zero;
    const bool r2G = predicates(center(*TG).algebra).rad_square_zero;
    add(out, "c09.separation", 9,
        "projective centers vanish, so the stable centers are the centers themselves; the "
        "square-zero-radical predicate differs, hence they are non-isomorphic",
        Provenance::PAPER, "true", b2s(prL == 0 && prG == 0 && r2L != r2G));
  });

  // -- 10: integral non-congruence of the two Cartan matrices -------------
  guarded(out, 10, [&] {
    const IntMatrix& CL = req(ctx.CL, "Cartan matrix (eleven-dim algebra)");
    const IntMatrix CG = peirce_cartan(*req(ctx.gc, "gamma_corrected"));
    ctx.CG = CG;
    add(out, "c10.congruent", 10,
        "existence of an integer change of basis of determinant +-1 relating the two forms",
        Provenance::PAPER, "false", b2s(congruent_over_Z_2x2(CL, CG)));
    add(out, "c10.reduced-forms", 10, "Gauss-reduced binary quadratic forms of the two matrices",
        Provenance::DERIVED, "(1,0,7) vs (2,2,4)",
        form2s(reduced_form_of(CL)) + " vs " + form2s(reduced_form_of(CG)));
    add(out, "c10.determinants", 10, "determinants agree, so the forms lie in the same genus "
        "candidate pool and reduction is what separates them",
        Provenance::TRIVIAL, "7, 7", det2(CL).str() + ", " + det2(CG).str());

    std::mt19937 rng(0x10cada);
    const BQForm fL = reduced_form_of(CL);
    const BQForm fG = reduced_form_of(CG);
    bool stable = true;
    for (int t = 0; t < 1000 && stable; ++t) {
      const IntMatrix U = random_unimodular(rng);
      const IntMatrix ML = mul(transpose(U), mul(CL, U));
      const IntMatrix MG = mul(transpose(U), mul(CG, U));
      stable = reduced_form_of(ML) == fL && reduced_form_of(MG) == fG &&
               congruent_over_Z_2x2(ML, CL) && congruent_over_Z_2x2(MG, CG) &&
               !congruent_over_Z_2x2(ML, CG);
    }
    add(out, "c10.fuzz", 10,
        "reduced forms and congruence verdicts are invariant under 1000 pseudo-random "
        "unimodular congruences (fixed seed)",
        Provenance::DERIVED, "true", b2s(stable));
  });

  // -- 11: tensor model of the trivial extension --------------------------
  guarded(out, 11, [&] {
    const AlgebraHandle& A = req(ctx.kd8, "kd8");
    ctx.tensAD = tensor_product(A, dual_numbers(2));
    ctx.Tkd8 = trivial_extension(A);
    add(out, "c11.dim", 11, "dimension of A (x) k[x]/(x^2)", Provenance::TRIVIAL, "16",
        n2s(ctx.tensAD->dim));
    const FormSearch fs = find_symmetrizing_form(*A);
    if (!fs.form) throw std::runtime_error("no symmetrizing form found on the dihedral quotient");
    const std::vector<std::string> failures =
        verify_algebra_map(tensor_to_extension_iso(ctx.tensAD, ctx.Tkd8, A, *fs.form));
    add(out, "c11.isomorphism", 11,
        "b (x) 1 -> (b, 0), b (x) x -> (0, b.f) is a certified algebra isomorphism onto the "
        "trivial extension; symmetrizing form used (deterministic search): f = " +
            render_functional(*A, *fs.form),
        Provenance::PAPER, "certified", failures.empty() ? "certified" : failures.front());
  });

  // -- 12: tensor model of the triangular algebra -------------------------
  guarded(out, 12, [&] {
    const AlgebraHandle& A = req(ctx.kd8, "kd8");
    ctx.tensAT = tensor_product(A, preset_algebra("t2k"));
    ctx.T2A = triangular2(A);
    add(out, "c12.dim", 12, "dimension of A (x) T2(k)", Provenance::TRIVIAL, "24",
        n2s(ctx.tensAT->dim));
    const std::vector<std::string> failures =
        verify_algebra_map(tensor_to_triangular_iso(ctx.tensAT, ctx.T2A, A));
    add(out, "c12.isomorphism", 12,
        "the index permutation b (x) E_qr -> block (q,r) is a certified algebra isomorphism "
        "onto the triangular algebra",
        Provenance::PAPER, "certified", failures.empty() ? "certified" : failures.front());
  });

  // -- 13: Cartan matrices of tensor products -----------------------------
  guarded(out, 13, [&] {
    ctx.LC2 = tensor_product(req(ctx.lam, "lambda"), preset_algebra("kc2"));
    const IntMatrix C = peirce_cartan(*ctx.LC2);
    const IntMatrix doubled = scale(2, req(ctx.CL, "Cartan matrix (eleven-dim algebra)"));
    add(out, "c13.doubled-cartan", 13,
        "tensoring with the rank-two local group algebra doubles the Cartan matrix",
        Provenance::PAPER, "[[16,2],[2,2]]",
        to_string(C) + (C == doubled ? "" : " (not the doubled matrix)"));
    add(out, "c13.prank", 13, "rank of the doubled Cartan matrix mod 2", Provenance::PAPER, "0",
        n2s(p_rank(C, 2)));

    // Kronecker property across the preset universe.  Pairs are capped by
    // tensor dimension: the full (dim^3-sized) associativity certificate on
    // every constructed algebra puts the largest preset squares out of a
    // sensible memory budget, and the cap keeps every preset represented in
    // both tensor positions.
    constexpr std::size_t kCeiling = 144;
    std::vector<std::pair<std::string, AlgebraHandle>> presets;
    for (const std::string& name : preset_algebra_names()) {
      presets.emplace_back(name, preset_algebra(name));
    }
    std::string failure;
    for (const auto& [na, A] : presets) {
      for (const auto& [nb, B] : presets) {
        if (!A->idempotents || !B->idempotents) continue;
        if (A->dim * B->dim > kCeiling) continue;
        const AlgebraHandle T = tensor_product(A, B);
        if (!(peirce_cartan(*T) == kron(peirce_cartan(*A), peirce_cartan(*B)))) {
          failure = na + " (x) " + nb;
          break;
        }
      }
      if (!failure.empty()) break;
    }
    add(out, "c13.kronecker", 13,
        "Cartan(A (x) B) equals the Kronecker product of the Cartan matrices on every ordered "
        "preset pair of tensor dimension at most 144",
        Provenance::DERIVED, "agree on every pair",
        failure.empty() ? "agree on every pair" : "first disagreement at " + failure);
  });

  // -- 14: endotrivial uniserial summands ---------------------------------
  guarded(out, 14, [&] {
    const AlgebraHandle& A = req(ctx.kd8, "kd8");
    const StructureAlgebra& S = *A;
    const ModuleRep reg = regular_module(A);
    const Subspace R = radical(S);
    Subspace R4 = R;
    for (int i = 0; i < 3; ++i) R4 = product_span(S, R4, R);
    const ModuleRep Q = quotient_module(reg, R4, "regular/rad^4");
    const Subspace U1 =
        generated_submodule(Q, {quotient_coords(R4, word_coords(ctx.kd8P, "a"))});
    const Subspace U2 =
        generated_submodule(Q, {quotient_coords(R4, word_coords(ctx.kd8P, "b"))});
    std::vector<Row> radrows;
    for (std::size_t r = 0; r < R.dim(); ++r) {
      radrows.push_back(quotient_coords(R4, R.basis.row(r)));
    }
    const Subspace radQ = Subspace::span(S.F, Q.dim, radrows);
    const bool decomposes = U1.dim() == 3 && U2.dim() == 3 && intersect(U1, U2).dim() == 0 &&
                            sum(U1, U2) == radQ;
    add(out, "c14.decomposition", 14,
        "rad/rad^4 of the regular module is the direct sum of the two uniserial length-3 "
        "submodules generated by the images of a and of b",
        Provenance::PAPER, "true", b2s(decomposes));

    const ModuleRep X1g = preset_module("X1@group");
    const ModuleRep X2g = preset_module("X2@group");
    const ModuleRep E = tensor_diagonal(dual_module(X1g), X1g);
    add(out, "c14.tensor-dim", 14, "dimension of D(X1) (x) X1", Provenance::TRIVIAL, "9",
        n2s(E.dim));
    add(out, "c14.norm-rank", 14,
        "rank of the group-sum element on D(X1) (x) X1: one free summand", Provenance::DERIVED,
        "1", n2s(norm_rank(E)));
    add(out, "c14.x1-endotrivial", 14, "X1 is endotrivial", Provenance::PAPER, "true",
        b2s(is_endotrivial(X1g)));
    add(out, "c14.x2-endotrivial", 14, "X2 is endotrivial", Provenance::DERIVED, "true",
        b2s(is_endotrivial(X2g)));
    add(out, "c14.trivial-module", 14, "the trivial module is endotrivial", Provenance::TRIVIAL,
        "true", b2s(is_endotrivial(preset_module("S@group"))));

    const AlgebraHandle G = preset_algebra("kd8_group");
    const ModuleRep free1 = regular_module(G);
    add(out, "c14.free-module", 14, "the free module of rank one is not endotrivial",
        Provenance::DERIVED, "false", b2s(is_endotrivial(free1)));
    std::vector<ModuleRep> copies(8, free1);
    add(out, "c14.free-norm-rank", 14,
        "rank of the group-sum element on the rank-eight free module", Provenance::TRIVIAL, "8",
        n2s(norm_rank(direct_sum(copies, "free^8").module)));
  });

  // -- 15: Hom over the triangular algebra --------------------------------
  guarded(out, 15, [&] {
    const AlgebraHandle& A = req(ctx.kd8, "kd8");
    const AlgebraHandle& T = req(ctx.T2A, "triangular algebra over kd8");
    const ModuleRep reg = regular_module(A);
    ModuleRep M{T, A->dim, {}, "(0,A)"};
    for (std::size_t q = 0; q < 3; ++q) {
      for (std::size_t i = 0; i < A->dim; ++i) {
        M.action.push_back(q == 2 ? reg.action[i] : Mat(A->F, A->dim, A->dim));
      }
    }
    require_valid_module(M);
    add(out, "c15.hom-dims", 15,
        "dim Hom over the triangular algebra of the second-column module (0,A) equals dim Hom "
        "of the regular module over the base",
        Provenance::PAPER, "8, 8",
        n2s(hom_basis(M, M).size()) + ", " + n2s(hom_basis(reg, reg).size()));
  });

  // -- 16: always-on property suites ---------------------------------------
  guarded(out, 16, [&] {
    // (a) every constructed algebra and module revalidates from scratch
    std::vector<std::pair<std::string, AlgebraHandle>> algebras;
    for (const std::string& name : preset_algebra_names()) {
      algebras.emplace_back(name, preset_algebra(name));
    }
    const std::pair<const char*, const AlgebraHandle*> built[] = {
        {"endS", &ctx.endS},   {"endX1", &ctx.endX1},   {"endX2", &ctx.endX2},
        {"TL", &ctx.TL},       {"TG", &ctx.TG},         {"Tkd8", &ctx.Tkd8},
        {"tensAD", &ctx.tensAD}, {"tensAT", &ctx.tensAT}, {"T2A", &ctx.T2A},
        {"LC2", &ctx.LC2}};
    for (const auto& [name, h] : built) {
      if (*h) algebras.emplace_back(name, *h);
    }
    std::string invalid;
    for (const auto& [name, h] : algebras) {
      if (!validate(*h).ok()) {
        invalid = name;
        break;
      }
    }
    if (invalid.empty()) {
      for (const std::string& name : preset_module_names()) {
        if (!validate_module(preset_module(name)).ok()) {
          invalid = "module " + name;
          break;
        }
      }
    }
    add(out, "c16.validation", 16,
        "full associativity/unit revalidation of every preset and every algebra constructed "
        "during this run, plus every preset module",
        Provenance::TRIVIAL, "all valid",
        invalid.empty() ? "all valid" : "validation fails for " + invalid);

    // (b) rank-nullity of the trace pairing on every preset
    bool ranknull = true;
    for (const auto& [name, h] : algebras) {
      const Subspace K = commutator_subspace(*h);
      if (K.dim() + annihilator_in_dual(*h, K).dim() != h->dim) {
        ranknull = false;
        break;
      }
    }
    add(out, "c16.rank-nullity", 16,
        "dim K(A) + dim Ann(K(A)) = dim A on every preset and every constructed algebra",
        Provenance::TRIVIAL, "true", b2s(ranknull));

    // (c) the block description of the extension center agrees with the
    // direct computation across fields and across the study's algebras
    std::string blockfail;
    const std::pair<const char*, AlgebraHandle> bases[] = {
        {"F2", field_algebra(2)},      {"F3", field_algebra(3)},
        {"F5", field_algebra(5)},      {"kd8", req(ctx.kd8, "kd8")},
        {"lambda", req(ctx.lam, "lambda")}, {"gamma_corrected", req(ctx.gc, "gamma_corrected")}};
    for (const auto& [name, A] : bases) {
      try {
        const CenterComparison cc = trivial_extension_center(A, trivial_extension(A));
        if (!(cc.block_formula == cc.direct)) {
          blockfail = name;
          break;
        }
      } catch (const std::exception&) {
        blockfail = name;
        break;
      }
    }
    add(out, "c16.block-center", 16,
        "Z(A) (+) Ann(K(A)) equals the directly computed extension center on prime fields and "
        "on the three study algebras",
        Provenance::DERIVED, "true", b2s(blockfail.empty()));

    // (d) every radical strategy that applies to a preset gives the same
    // subspace: carried bases are recomputed gradedly and, where the algebra
    // is commutative, by the Frobenius-kernel iteration
    std::string radfail;
    for (const std::string& name : preset_algebra_names()) {
      const AlgebraHandle A = preset_algebra(name);
      const Subspace R = radical(*A);
      StructureAlgebra B = *A;
      B.radical_basis.reset();
      try {
        if (!(radical(B) == R)) {
          radfail = name;
          break;
        }
      } catch (const unsupported_error&) {
      }
      if (B.grading) {
        B.grading.reset();
        B.graded_radical_ok = false;
        try {
          if (!(radical(B) == R)) {
            radfail = name + " (ungraded)";
            break;
          }
        } catch (const unsupported_error&) {
        }
      }
    }
    add(out, "c16.radical-strategies", 16,
        "on every preset, all applicable radical strategies (carried, graded, commutative "
        "Frobenius kernel) return the same subspace",
        Provenance::DERIVED, "true", radfail.empty() ? "true" : "disagree on " + radfail);

    // (e) canonical-form fuzz: the reduced echelon basis is a function of the
    // row space alone, idempotent, and contains its spanning rows
    std::mt19937 rng(20260817u);
    bool rrefok = true;
    for (int t = 0; t < 150 && rrefok; ++t) {
      const std::uint64_t p = (t % 3 == 0) ? 2 : (t % 3 == 1 ? 3 : 5);
      const PrimeField F(p);
      const std::size_t rows = 1 + rng() % 8;
      const std::size_t cols = 1 + rng() % 10;
      Mat M(F, rows, cols);
      for (auto& v : M.a) v = rng() % p;
      std::vector<Row> mrows;
      for (std::size_t r = 0; r < rows; ++r) mrows.push_back(M.row(r));
      const Subspace S = Subspace::span(F, cols, mrows);

      std::vector<Row> brows;
      for (std::size_t r = 0; r < S.dim(); ++r) brows.push_back(S.basis.row(r));
      rrefok = Subspace::span(F, cols, brows) == S && S.dim() == rank(M);
      for (std::size_t r = 0; r < rows && rrefok; ++r) rrefok = member(S, M.row(r));

      // random invertible row mix: same row space, same canonical basis
      Mat P = Mat::identity(F, rows);
      for (std::size_t s = 0; s < 3 * rows; ++s) {
        const std::size_t i = rng() % rows;
        const std::size_t j = rng() % rows;
        const std::uint64_t c = 1 + rng() % (p - 1 == 0 ? 1 : p - 1);
        if (i == j) {
          for (std::size_t k = 0; k < rows; ++k) P.at(i, k) = F.mul(P.at(i, k), c);
        } else {
          for (std::size_t k = 0; k < rows; ++k) {
            P.at(i, k) = F.add(P.at(i, k), F.mul(c, P.at(j, k)));
          }
        }
      }
      const Mat PM = mul(P, M);
      std::vector<Row> prows;
      for (std::size_t r = 0; r < rows; ++r) prows.push_back(PM.row(r));
      rrefok = rrefok && Subspace::span(F, cols, prows) == S;
    }
    add(out, "c16.rref-fuzz", 16,
        "canonical echelon bases over F_2, F_3, F_5 are idempotent, contain their spanning "
        "rows, and are invariant under 150 pseudo-random invertible row mixes (fixed seed)",
        Provenance::TRIVIAL, "true", b2s(rrefok));
  });

  return out;
}

bool repro_ok(const std::vector<ReproCheck>& checks) {
  for (const ReproCheck& c : checks) {
    if (c.status == CheckStatus::FAIL) return false;
  }
  return true;
}

std::vector<CriterionVerdict> criterion_verdicts(const std::vector<ReproCheck>& checks) {
  static const char* kTitles[16] = {
      "eight-dimensional dihedral-type quotient algebra",
      "center of the dihedral-type algebra",
      "eleven-dimensional two-vertex algebra",
      "endomorphism oracle for the eleven-dimensional algebra",
      "endomorphism oracle for the sixteen-dimensional algebra",
      "presented sixteen-dimensional variants (corrected and verbatim)",
      "trivial extension of the eleven-dimensional algebra",
      "trivial extension of the sixteen-dimensional algebra",
      "separation of the stable centers",
      "integral non-congruence of the Cartan matrices",
      "tensor model of the trivial extension",
      "tensor model of the triangular algebra",
      "Cartan matrices of tensor products",
      "endotrivial uniserial summands",
      "Hom over the triangular algebra",
      "always-on property suites"};
  std::vector<CriterionVerdict> out;
  for (int crit = 1; crit <= 16; ++crit) {
    CriterionVerdict v{crit, kTitles[crit - 1], true};
    bool seen = false;
    for (const ReproCheck& c : checks) {
      if (c.criterion != crit) continue;
      seen = true;
      // The recorded-discrepancy row must come out FLAGGED: a PASS there
      // would mean the engine no longer reproduces the disagreement.
      const bool ok = (c.id == "c06.printed-dim") ? c.status == CheckStatus::FLAGGED
                                                  : c.status == CheckStatus::PASS;
      if (!ok) v.passed = false;
    }
    if (!seen) v.passed = false;
    out.push_back(std::move(v));
  }
  return out;
}

std::string repro_table(const std::vector<ReproCheck>& checks) {
  std::vector<std::array<std::string, 4>> cells;
  for (const ReproCheck& c : checks) {
    cells.push_back({c.id, std::string(to_string(c.status)),
                     c.expected + " [" + to_string(c.provenance) + "]", c.computed});
  }
  std::array<std::size_t, 4> width = {5, 6, 8, 8};  // header widths
  for (const auto& row : cells) {
    for (std::size_t k = 0; k < 4; ++k) width[k] = std::max(width[k], row[k].size());
  }
  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w - s.size(), ' ');
  };
  std::ostringstream os;
  os << pad("check", width[0]) << "  " << pad("status", width[1]) << "  "
     << pad("expected", width[2]) << "  " << pad("computed", width[3]) << "  description\n";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    os << pad(cells[i][0], width[0]) << "  " << pad(cells[i][1], width[1]) << "  "
       << pad(cells[i][2], width[2]) << "  " << pad(cells[i][3], width[3]) << "  "
       << checks[i].description << "\n";
  }
  std::size_t pass = 0, fail = 0, flagged = 0;
  for (const ReproCheck& c : checks) {
    if (c.status == CheckStatus::PASS) ++pass;
    if (c.status == CheckStatus::FAIL) ++fail;
    if (c.status == CheckStatus::FLAGGED) ++flagged;
  }
  os << checks.size() << " checks: " << pass << " PASS, " << flagged << " FLAGGED, " << fail
     << " FAIL\n";
  return os.str();
}

std::string repro_json(const std::vector<ReproCheck>& checks) {
  nlohmann::ordered_json doc;
  doc["schema"] = "finalg/report-v1";
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const ReproCheck& c : checks) {
    nlohmann::ordered_json row;
    row["id"] = c.id;
    row["criterion"] = c.criterion;
    row["description"] = c.description;
    row["expected"] = c.expected;
    row["computed"] = c.computed;
    row["status"] = to_string(c.status);
    row["provenance"] = to_string(c.provenance);
    rows.push_back(std::move(row));
  }
  doc["checks"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace finalg
