#include "finalg/modrep.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace finalg {

namespace {

Row indicator(std::size_t n, std::size_t i) {
  Row r(n, 0);
  r[i] = 1;
  return r;
}

bool same_algebra(const AlgebraHandle& x, const AlgebraHandle& y) {
  if (x == y) return true;
  if (!x || !y) return false;
  return x->F == y->F && x->dim == y->dim && x->labels == y->labels && x->table == y->table;
}

Mat unvectorize(const PrimeField& F, const Row& v, std::size_t rows, std::size_t cols) {
  Mat m(F, rows, cols);
  m.a = v;
  return m;
}

bool is_zero_mat(const Mat& m) {
  return std::all_of(m.a.begin(), m.a.end(), [](std::uint64_t x) { return x == 0; });
}

/// g^(g.rows) == 0?  A nilpotent operator on a d-dimensional space has
/// vanishing d-th power, so this is an exact test.
bool is_nilpotent(const Mat& g) {
  if (g.rows == 0) return true;
  Mat p = g;
  for (std::size_t k = 1; k < g.rows && !is_zero_mat(p); ++k) p = mul(p, g);
  return is_zero_mat(p);
}

Mat shift_by_scalar(const Mat& f, std::uint64_t lambda) {
  Mat g = f;
  for (std::size_t r = 0; r < g.rows; ++r) g.at(r, r) = g.F.sub(g.at(r, r), lambda);
  return g;
}

/// The summand of a block-diagonal module at the given offset.
ModuleRep slice_part(const ModuleRep& M, std::size_t off, std::size_t d, const std::string& tag) {
  ModuleRep part{M.algebra, d, {}, tag};
  part.action.reserve(M.action.size());
  for (const Mat& act : M.action) {
    Mat b(act.F, d, d);
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) b.at(r, c) = act.at(off + r, off + c);
    }
    part.action.push_back(std::move(b));
  }
  return part;
}

/// Embed a dt x ds block mapping summand s into summand t as a full
/// endomorphism matrix of the sum.
Mat embed_block(const PrimeField& F, std::size_t dim, std::size_t row_off, std::size_t col_off,
                const Mat& block) {
  Mat m(F, dim, dim);
  for (std::size_t r = 0; r < block.rows; ++r) {
    for (std::size_t c = 0; c < block.cols; ++c) m.at(row_off + r, col_off + c) = block.at(r, c);
  }
  return m;
}

}  // namespace

Row module_apply(const Mat& act, const Row& m) {
  if (m.size() != act.cols) throw input_error("module_apply: coordinate length mismatch");
  Row out(act.rows, 0);
  for (std::size_t r = 0; r < act.rows; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < act.cols; ++c) acc = act.F.add(acc, act.F.mul(act.at(r, c), m[c]));
    out[r] = acc;
  }
  return out;
}

Mat action_of(const ModuleRep& M, const Row& x) {
  if (!M.algebra || x.size() != M.algebra->dim) {
    throw input_error("action_of: element length does not match the algebra dimension");
  }
  const PrimeField& F = M.algebra->F;
  Mat acc(F, M.dim, M.dim);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    const Mat& act = M.action[i];
    for (std::size_t t = 0; t < acc.a.size(); ++t) acc.a[t] = F.add(acc.a[t], F.mul(x[i], act.a[t]));
  }
  return acc;
}

ValidationReport validate_module(const ModuleRep& M) {
  ValidationReport rep;
  if (!M.algebra) {
    rep.failures.push_back("module carries no algebra");
    return rep;
  }
  const StructureAlgebra& A = *M.algebra;
  if (M.action.size() != A.dim) {
    rep.failures.push_back("module has " + std::to_string(M.action.size()) +
                           " action matrices for an algebra of dimension " + std::to_string(A.dim));
    return rep;
  }
  for (std::size_t i = 0; i < M.action.size(); ++i) {
    const Mat& act = M.action[i];
    if (act.rows != M.dim || act.cols != M.dim || act.F != A.F) {
      rep.failures.push_back("action matrix of " + A.labels[i] + " has the wrong shape or field");
      return rep;
    }
    for (std::uint64_t v : act.a) {
      if (v >= A.F.p()) {
        rep.failures.push_back("action matrix of " + A.labels[i] + " has an unreduced entry");
        return rep;
      }
    }
  }
  if (!(action_of(M, A.unit) == Mat::identity(A.F, M.dim))) {
    rep.failures.push_back("the unit does not act as the identity");
    return rep;
  }
  for (std::size_t i = 0; i < A.dim; ++i) {
    for (std::size_t j = 0; j < A.dim; ++j) {
      if (!(mul(M.action[i], M.action[j]) == action_of(M, A.prod(i, j)))) {
        rep.failures.push_back("action is not multiplicative on (" + A.labels[i] + ", " +
                               A.labels[j] + ")");
        return rep;
      }
    }
  }
  return rep;
}

void require_valid_module(const ModuleRep& M, bool as_input) {
  ValidationReport rep = validate_module(M);
  if (rep.ok()) return;
  std::string msg = "module validation failed [" + M.tag + "]: " + rep.failures.front();
  if (as_input) throw input_error(msg);
  throw std::logic_error(msg);
}

ModuleRep regular_module(const AlgebraHandle& A, const std::string& tag) {
  if (!A) throw input_error("regular_module: empty algebra handle");
  ModuleRep M{A, A->dim, {}, tag};
  M.action.reserve(A->dim);
  for (std::size_t i = 0; i < A->dim; ++i) M.action.push_back(left_regular(*A, indicator(A->dim, i)));
  return M;
}

Subspace generated_submodule(const ModuleRep& M, const std::vector<Row>& generators) {
  const PrimeField& F = M.algebra->F;
  Subspace U = Subspace::span(F, M.dim, generators);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Row> rows;
    for (std::size_t r = 0; r < U.dim(); ++r) rows.push_back(U.basis.row(r));
    const std::size_t stable = rows.size();
    for (std::size_t r = 0; r < stable; ++r) {
      for (const Mat& act : M.action) {
        Row w = module_apply(act, U.basis.row(r));
        if (!member(U, w)) rows.push_back(std::move(w));
      }
    }
    if (rows.size() > stable) {
      U = Subspace::span(F, M.dim, rows);
      grew = true;
    }
  }
  return U;
}

ModuleRep submodule(const ModuleRep& M, const Subspace& U, const std::string& tag) {
  if (U.ambient != M.dim || U.F != M.algebra->F) {
    throw input_error("submodule: subspace does not live in the module's coordinate space");
  }
  const PrimeField& F = U.F;
  const std::size_t d = U.dim();
  ModuleRep S{M.algebra, d, {}, tag};
  for (std::size_t i = 0; i < M.action.size(); ++i) {
    Mat act(F, d, d);
    for (std::size_t c = 0; c < d; ++c) {
      Row w = module_apply(M.action[i], U.basis.row(c));
      auto cc = coords_in(U, w);
      if (!cc) {
        throw input_error("submodule: subspace is not action-closed (basis element " +
                          M.algebra->labels[i] + ") [" + tag + "]");
      }
      for (std::size_t r = 0; r < d; ++r) act.at(r, c) = (*cc)[r];
    }
    S.action.push_back(std::move(act));
  }
  return S;
}

Row quotient_coords(const Subspace& U, const Row& v) {
  Row red = reduce_mod(U, v);
  std::vector<bool> is_pivot(U.ambient, false);
  for (std::size_t p : U.pivots) is_pivot[p] = true;
  Row out;
  out.reserve(U.ambient - U.dim());
  for (std::size_t c = 0; c < U.ambient; ++c) {
    if (!is_pivot[c]) out.push_back(red[c]);
  }
  return out;
}

ModuleRep quotient_module(const ModuleRep& M, const Subspace& U, const std::string& tag) {
  if (U.ambient != M.dim || U.F != M.algebra->F) {
    throw input_error("quotient_module: subspace does not live in the module's coordinate space");
  }
  for (std::size_t i = 0; i < M.action.size(); ++i) {
    for (std::size_t r = 0; r < U.dim(); ++r) {
      if (!member(U, module_apply(M.action[i], U.basis.row(r)))) {
        throw input_error("quotient_module: subspace is not action-closed (basis element " +
                          M.algebra->labels[i] + ") [" + tag + "]");
      }
    }
  }
  const PrimeField& F = U.F;
  std::vector<bool> is_pivot(U.ambient, false);
  for (std::size_t p : U.pivots) is_pivot[p] = true;
  std::vector<std::size_t> comp;
  for (std::size_t c = 0; c < U.ambient; ++c) {
    if (!is_pivot[c]) comp.push_back(c);
  }
  const std::size_t qd = comp.size();
  ModuleRep Q{M.algebra, qd, {}, tag};
  for (std::size_t i = 0; i < M.action.size(); ++i) {
    Mat act(F, qd, qd);
    for (std::size_t c = 0; c < qd; ++c) {
      Row w = module_apply(M.action[i], indicator(M.dim, comp[c]));
      Row qc = quotient_coords(U, w);
      for (std::size_t r = 0; r < qd; ++r) act.at(r, c) = qc[r];
    }
    Q.action.push_back(std::move(act));
  }
  return Q;
}

DirectSum direct_sum(const std::vector<ModuleRep>& parts, const std::string& tag) {
  if (parts.empty()) throw input_error("direct_sum: at least one summand is required");
  for (std::size_t t = 1; t < parts.size(); ++t) {
    if (!same_algebra(parts[0].algebra, parts[t].algebra)) {
      throw input_error("direct_sum: summands live over different algebras");
    }
  }
  DirectSum S;
  std::size_t total = 0;
  for (const ModuleRep& p : parts) {
    S.offsets.push_back(total);
    S.part_dims.push_back(p.dim);
    S.part_tags.push_back(p.tag);
    total += p.dim;
  }
  const PrimeField& F = parts[0].algebra->F;
  S.module = ModuleRep{parts[0].algebra, total, {}, tag};
  for (std::size_t i = 0; i < parts[0].algebra->dim; ++i) {
    Mat act(F, total, total);
    for (std::size_t t = 0; t < parts.size(); ++t) {
      const Mat& b = parts[t].action[i];
      for (std::size_t r = 0; r < b.rows; ++r) {
        for (std::size_t c = 0; c < b.cols; ++c) act.at(S.offsets[t] + r, S.offsets[t] + c) = b.at(r, c);
      }
    }
    S.module.action.push_back(std::move(act));
  }
  return S;
}

std::vector<Mat> hom_basis(const ModuleRep& M, const ModuleRep& N) {
  if (!same_algebra(M.algebra, N.algebra)) {
    throw input_error("hom_basis: modules live over different algebras");
  }
  const PrimeField& F = M.algebra->F;
  const std::size_t n = M.algebra->dim, dm = M.dim, dn = N.dim;
  // Unknown T is dn x dm, vectorized row-major; one constraint row per
  // (basis element i, output row r, input column c) of T act_M(b_i) - act_N(b_i) T.
  Mat K(F, n * dn * dm, dn * dm);
  for (std::size_t i = 0; i < n; ++i) {
    const Mat& AM = M.action[i];
    const Mat& AN = N.action[i];
    for (std::size_t r = 0; r < dn; ++r) {
      for (std::size_t c = 0; c < dm; ++c) {
        const std::size_t row = (i * dn + r) * dm + c;
        for (std::size_t s = 0; s < dm; ++s) {
          K.at(row, r * dm + s) = F.add(K.at(row, r * dm + s), AM.at(s, c));
        }
        for (std::size_t s = 0; s < dn; ++s) {
          K.at(row, s * dm + c) = F.sub(K.at(row, s * dm + c), AN.at(r, s));
        }
      }
    }
  }
  Subspace ker = kernel(K);
  std::vector<Mat> out;
  out.reserve(ker.dim());
  for (std::size_t r = 0; r < ker.dim(); ++r) out.push_back(unvectorize(F, ker.basis.row(r), dn, dm));
  return out;
}

namespace {

/// Rows (in End coordinates) spanning the candidate radical of End(M) for a
/// sum of pairwise non-isomorphic summands with split local endomorphism
/// rings: every off-diagonal Hom block plus, per summand, the kernel of the
/// residue scalar f -> lambda(f) (the unique scalar with f - lambda
/// nilpotent).  nullopt means the formula could not be certified here; the
/// final say is validate()'s full certification of the carried basis.
std::optional<std::vector<Row>> end_radical_rows(const DirectSum& S,
                                                 const std::vector<ModuleRep>& parts,
                                                 const Subspace& homspace,
                                                 std::uint64_t iso_budget) {
  const ModuleRep& M = S.module;
  const PrimeField& F = M.algebra->F;
  const std::uint64_t p = F.p();
  // Certify pairwise non-isomorphic: for equal-dimension pairs, exhaust the
  // Hom block for an invertible element (none <=> no isomorphism exists).
  for (std::size_t s = 0; s + 1 < parts.size(); ++s) {
    for (std::size_t t = s + 1; t < parts.size(); ++t) {
      if (parts[s].dim != parts[t].dim) continue;
      std::vector<Mat> hb = hom_basis(parts[s], parts[t]);
      if (hb.empty()) continue;
      std::uint64_t count = 1;
      for (std::size_t k = 0; k < hb.size(); ++k) {
        if (count > iso_budget / p) return std::nullopt;  // block too large to exhaust
        count *= p;
      }
      for (std::uint64_t code = 1; code < count; ++code) {
        Mat T(F, parts[t].dim, parts[s].dim);
        std::uint64_t c = code;
        for (const Mat& h : hb) {
          const std::uint64_t digit = c % p;
          c /= p;
          if (digit == 0) continue;
          for (std::size_t e = 0; e < T.a.size(); ++e) T.a[e] = F.add(T.a[e], F.mul(digit, h.a[e]));
        }
        if (rank(T) == T.rows) return std::nullopt;  // isomorphic summands: formula inapplicable
      }
    }
  }
  std::vector<Row> jrows;
  auto push_embedded = [&](const Mat& full) -> bool {
    auto cc = coords_in(homspace, full.a);
    if (!cc) return false;
    jrows.push_back(std::move(*cc));
    return true;
  };
  for (std::size_t t = 0; t < parts.size(); ++t) {
    for (std::size_t s = 0; s < parts.size(); ++s) {
      if (s == t) continue;
      for (const Mat& h : hom_basis(parts[s], parts[t])) {
        if (!push_embedded(embed_block(F, M.dim, S.offsets[t], S.offsets[s], h))) return std::nullopt;
      }
    }
    for (const Mat& f : hom_basis(parts[t], parts[t])) {
      bool shifted = false;
      for (std::uint64_t lambda = 0; lambda < p; ++lambda) {
        Mat g = shift_by_scalar(f, lambda);
        if (is_nilpotent(g)) {
          if (!is_zero_mat(g) &&
              !push_embedded(embed_block(F, M.dim, S.offsets[t], S.offsets[t], g))) {
            return std::nullopt;
          }
          shifted = true;
          break;
        }
      }
      if (!shifted) return std::nullopt;  // endomorphism ring not split local
    }
  }
  return jrows;
}

}  // namespace

AlgebraHandle end_algebra_op(const DirectSum& S, std::uint64_t iso_budget) {
  const ModuleRep& M = S.module;
  if (!M.algebra) throw input_error("end_algebra_op: module carries no algebra");
  if (M.dim == 0) {
    throw input_error("end_algebra_op: the zero module has no unital endomorphism algebra here");
  }
  require_valid_module(M, true);
  const PrimeField& F = M.algebra->F;
  std::vector<Mat> homs = hom_basis(M, M);
  const std::size_t e = homs.size();
  std::vector<Row> vecs;
  vecs.reserve(e);
  for (const Mat& h : homs) vecs.push_back(h.a);
  Subspace V = Subspace::span(F, M.dim * M.dim, vecs);
  auto co = [&](const Mat& m) {
    auto cc = coords_in(V, m.a);
    if (!cc) throw std::logic_error("end_algebra_op: product escapes the solved Hom space");
    return *cc;
  };
  auto alg = std::make_shared<StructureAlgebra>(
      StructureAlgebra{F, e, {}, {}, {}, std::nullopt, std::nullopt, false, std::nullopt,
                       std::nullopt, "end_op(" + M.tag + ")"});
  for (std::size_t t = 0; t < e; ++t) alg->labels.push_back("f" + std::to_string(t));
  alg->unit = co(Mat::identity(F, M.dim));
  alg->table.reserve(e * e);
  for (std::size_t i = 0; i < e; ++i) {
    for (std::size_t j = 0; j < e; ++j) alg->table.push_back(co(mul(homs[j], homs[i])));
  }
  std::vector<Idempotent> idem;
  for (std::size_t t = 0; t < S.part_dims.size(); ++t) {
    Mat pi(F, M.dim, M.dim);
    for (std::size_t r = 0; r < S.part_dims[t]; ++r) pi.at(S.offsets[t] + r, S.offsets[t] + r) = 1;
    std::string label = S.part_tags[t].empty() ? ("m" + std::to_string(t)) : S.part_tags[t];
    idem.push_back(Idempotent{label, co(pi)});
  }
  alg->idempotents = std::move(idem);
  std::vector<ModuleRep> parts;
  for (std::size_t t = 0; t < S.part_dims.size(); ++t) {
    parts.push_back(slice_part(M, S.offsets[t], S.part_dims[t],
                               alg->idempotents->at(t).label));
  }
  std::optional<std::vector<Row>> jrows = end_radical_rows(S, parts, V, iso_budget);
  if (jrows) alg->radical_basis = Subspace::span(F, e, *jrows);
  ValidationReport rep = validate(*alg);
  if (!rep.ok() && alg->radical_basis) {
    // The structural radical formula did not certify (validation is the
    // final arbiter); retry as an honest radical-free algebra.
    alg->radical_basis.reset();
    rep = validate(*alg);
  }
  if (!rep.ok()) {
    throw std::logic_error("algebra validation failed [" + alg->provenance +
                           "]: " + rep.failures.front());
  }
  return alg;
}

AlgebraHandle end_algebra_op(const ModuleRep& M) {
  DirectSum S;
  S.module = M;
  S.offsets = {0};
  S.part_dims = {M.dim};
  S.part_tags = {M.tag.empty() ? "m0" : M.tag};
  return end_algebra_op(S);
}

ModuleRep dual_module(const ModuleRep& M) {
  const AlgebraHandle& A = M.algebra;
  if (!A || !A->group) {
    throw unsupported_error("dual module needs a group algebra [" +
                            (A ? A->provenance : std::string("null")) + "]");
  }
  const GroupData& G = *A->group;
  ModuleRep D{A, M.dim, {}, "D(" + M.tag + ")"};
  D.action.resize(A->dim, Mat(A->F, 0, 0));
  for (std::size_t g = 0; g < A->dim; ++g) {
    std::size_t inv = A->dim;
    for (std::size_t h = 0; h < A->dim; ++h) {
      if (G.table[g][h] == G.identity) {
        inv = h;
        break;
      }
    }
    if (inv == A->dim) throw input_error("dual_module: group table has no inverse for element " +
                                         G.labels[g]);
    D.action[g] = transpose(M.action[inv]);
  }
  return D;
}

ModuleRep tensor_diagonal(const ModuleRep& M, const ModuleRep& N) {
  if (!same_algebra(M.algebra, N.algebra)) {
    throw input_error("tensor_diagonal: modules live over different algebras");
  }
  const AlgebraHandle& A = M.algebra;
  if (!A || !A->group) {
    throw unsupported_error("diagonal tensor product needs a group algebra [" +
                            (A ? A->provenance : std::string("null")) + "]");
  }
  const PrimeField& F = A->F;
  const std::size_t dm = M.dim, dn = N.dim, d = dm * dn;
  ModuleRep E{A, d, {}, M.tag + "(x)" + N.tag};
  for (std::size_t g = 0; g < A->dim; ++g) {
    const Mat& X = M.action[g];
    const Mat& Y = N.action[g];
    Mat act(F, d, d);
    for (std::size_t a = 0; a < dm; ++a) {
      for (std::size_t c = 0; c < dm; ++c) {
        if (X.at(a, c) == 0) continue;
        for (std::size_t b = 0; b < dn; ++b) {
          for (std::size_t e2 = 0; e2 < dn; ++e2) {
            act.at(a * dn + b, c * dn + e2) = F.mul(X.at(a, c), Y.at(b, e2));
          }
        }
      }
    }
    E.action.push_back(std::move(act));
  }
  return E;
}

std::size_t norm_rank(const ModuleRep& M) {
  const AlgebraHandle& A = M.algebra;
  if (!A || !A->group) {
    throw unsupported_error("norm rank needs a group algebra [" +
                            (A ? A->provenance : std::string("null")) + "]");
  }
  const PrimeField& F = A->F;
  Mat norm(F, M.dim, M.dim);
  for (const Mat& act : M.action) {
    for (std::size_t t = 0; t < norm.a.size(); ++t) norm.a[t] = F.add(norm.a[t], act.a[t]);
  }
  return rank(norm);
}

bool is_endotrivial(const ModuleRep& M) {
  const AlgebraHandle& A = M.algebra;
  if (!A || !A->group) {
    throw unsupported_error("endotriviality test needs a group algebra [" +
                            (A ? A->provenance : std::string("null")) + "]");
  }
  const std::uint64_t p = A->F.p();
  std::uint64_t order = A->dim;
  while (order > 1 && order % p == 0) order /= p;
  if (order != 1) {
    throw unsupported_error("endotriviality test needs |G| to be a power of the characteristic [" +
                            A->provenance + "]");
  }
  ModuleRep E = tensor_diagonal(dual_module(M), M);
  require_valid_module(E);
  const long long defect = static_cast<long long>(E.dim) -
                           static_cast<long long>(A->dim) * static_cast<long long>(norm_rank(E));
  return defect == 1;
}

}  // namespace finalg
