#include "finalg/constructions.hpp"

#include <algorithm>
#include <utility>

#include "finalg/errors.hpp"

namespace finalg {

namespace {

Row indicator(std::size_t n, std::size_t i) {
  Row r(n, 0);
  r[i] = 1;
  return r;
}

Row kron_row(const PrimeField& F, const Row& x, const Row& y) {
  Row r(x.size() * y.size(), 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) r[i * y.size() + j] = F.mul(x[i], y[j]);
  }
  return r;
}

Row embed(const Row& v, std::size_t total, std::size_t offset) {
  Row r(total, 0);
  std::copy(v.begin(), v.end(), r.begin() + static_cast<std::ptrdiff_t>(offset));
  return r;
}

std::optional<Subspace> try_radical(const StructureAlgebra& A) {
  try {
    return radical(A);
  } catch (const unsupported_error&) {
    return std::nullopt;
  }
}

bool is_p_power(std::size_t n, std::uint64_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

Row dual_act_left(const StructureAlgebra& A, const Row& a, const Row& f) {
  if (a.size() != A.dim || f.size() != A.dim) throw input_error("length mismatch in dual action");
  // (a.f)(b_j) = f(b_j a)
  Row r(A.dim, 0);
  for (std::size_t j = 0; j < A.dim; ++j) {
    const Row bj_a = mult(A, indicator(A.dim, j), a);
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < A.dim; ++k) s = A.F.add(s, A.F.mul(f[k], bj_a[k]));
    r[j] = s;
  }
  return r;
}

Row dual_act_right(const StructureAlgebra& A, const Row& f, const Row& a) {
  if (a.size() != A.dim || f.size() != A.dim) throw input_error("length mismatch in dual action");
  // (f.a)(b_j) = f(a b_j)
  Row r(A.dim, 0);
  for (std::size_t j = 0; j < A.dim; ++j) {
    const Row a_bj = mult(A, a, indicator(A.dim, j));
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < A.dim; ++k) s = A.F.add(s, A.F.mul(f[k], a_bj[k]));
    r[j] = s;
  }
  return r;
}

AlgebraHandle trivial_extension(const AlgebraHandle& Ah) {
  const StructureAlgebra& A = *Ah;
  const std::size_t n = A.dim, d = 2 * n;
  StructureAlgebra T{A.F, d, {}, {}, {}, std::nullopt, std::nullopt, false,
                     std::nullopt, std::nullopt, "T(" + A.provenance + ")"};
  T.labels = A.labels;
  for (const auto& l : A.labels) T.labels.push_back(l + "^*");
  T.unit = embed(A.unit, d, 0);
  T.table.assign(d * d, Row(d, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      // (b_i, 0)(b_j, 0) = (b_i b_j, 0)
      T.table[i * d + j] = embed(A.prod(i, j), d, 0);
      // (b_i, 0)(0, b_j^*) = (0, b_i . b_j^*), coordinate e: prod(e,i)[j]
      Row& left = T.table[i * d + (n + j)];
      for (std::size_t e = 0; e < n; ++e) left[n + e] = A.prod(e, i)[j];
      // (0, b_i^*)(b_j, 0) = (0, b_i^* . b_j), coordinate e: prod(j,e)[i]
      Row& right = T.table[(n + i) * d + j];
      for (std::size_t e = 0; e < n; ++e) right[n + e] = A.prod(j, e)[i];
      // dual * dual = 0 stays zero
    }
  }
  if (A.idempotents) {
    std::vector<Idempotent> es;
    for (const auto& e : *A.idempotents) es.push_back({e.label, embed(e.coords, d, 0)});
    T.idempotents = std::move(es);
  }
  if (auto J = try_radical(A)) {
    std::vector<Row> rows;
    for (std::size_t r = 0; r < J->dim(); ++r) rows.push_back(embed(J->basis.row(r), d, 0));
    for (std::size_t e = 0; e < n; ++e) rows.push_back(indicator(d, n + e));
    T.radical_basis = Subspace::span(A.F, d, rows);
  }
  require_valid(T);
  return std::make_shared<StructureAlgebra>(std::move(T));
}

AlgebraHandle tensor_product(const AlgebraHandle& Ah, const AlgebraHandle& Bh) {
  const StructureAlgebra& A = *Ah;
  const StructureAlgebra& B = *Bh;
  if (A.F.p() != B.F.p()) throw input_error("tensor factors over different prime fields");
  const std::size_t n = A.dim, m = B.dim, d = n * m;
  StructureAlgebra T{A.F, d, {}, {}, {}, std::nullopt, std::nullopt, false,
                     std::nullopt, std::nullopt,
                     "(" + A.provenance + ")(x)(" + B.provenance + ")"};
  T.labels.reserve(d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) T.labels.push_back(A.labels[i] + "(x)" + B.labels[j]);
  }
  T.unit = kron_row(A.F, A.unit, B.unit);
  T.table.reserve(d * d);
  for (std::size_t i1 = 0; i1 < n; ++i1) {
    for (std::size_t j1 = 0; j1 < m; ++j1) {
      for (std::size_t i2 = 0; i2 < n; ++i2) {
        for (std::size_t j2 = 0; j2 < m; ++j2) {
          T.table.push_back(kron_row(A.F, A.prod(i1, i2), B.prod(j1, j2)));
        }
      }
    }
  }
  const bool both_idem = A.idempotents && B.idempotents;
  if (both_idem) {
    std::vector<Idempotent> es;
    for (const auto& ea : *A.idempotents) {
      for (const auto& eb : *B.idempotents) {
        es.push_back({ea.label + "(x)" + eb.label, kron_row(A.F, ea.coords, eb.coords)});
      }
    }
    T.idempotents = std::move(es);
  }
  if (A.grading && B.grading) {
    std::vector<int> g;
    g.reserve(d);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) g.push_back((*A.grading)[i] + (*B.grading)[j]);
    }
    T.grading = std::move(g);
    T.graded_radical_ok = A.graded_radical_ok && B.graded_radical_ok;
  }
  // rad(A (x) B) = rad(A) (x) B + A (x) rad(B) for split basic quotients; the
  // carry is gated on the quotient being certifiable downstream.
  auto JA = try_radical(A);
  auto JB = try_radical(B);
  const bool certifiable = both_idem || (predicates(A).is_commutative && predicates(B).is_commutative);
  if (JA && JB && certifiable) {
    std::vector<Row> rows;
    for (std::size_t r = 0; r < JA->dim(); ++r) {
      for (std::size_t j = 0; j < m; ++j) {
        rows.push_back(kron_row(A.F, JA->basis.row(r), indicator(m, j)));
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t r = 0; r < JB->dim(); ++r) {
        rows.push_back(kron_row(A.F, indicator(n, i), JB->basis.row(r)));
      }
    }
    T.radical_basis = Subspace::span(A.F, d, rows);
  }
  require_valid(T);
  return std::make_shared<StructureAlgebra>(std::move(T));
}

AlgebraHandle triangular2(const AlgebraHandle& Ah) {
  const StructureAlgebra& A = *Ah;
  const std::size_t n = A.dim, d = 3 * n;
  // positions (1,1), (2,1), (2,2), position-major blocks
  static constexpr std::size_t kRow[3] = {0, 1, 1};
  static constexpr std::size_t kCol[3] = {0, 0, 1};
  static const char* kName[3] = {"E11", "E21", "E22"};
  StructureAlgebra T{A.F, d, {}, {}, {}, std::nullopt, std::nullopt, false,
                     std::nullopt, std::nullopt, "T2(" + A.provenance + ")"};
  T.labels.reserve(d);
  for (std::size_t q = 0; q < 3; ++q) {
    for (std::size_t i = 0; i < n; ++i) T.labels.push_back(std::string(kName[q]) + "*" + A.labels[i]);
  }
  T.unit = Row(d, 0);
  for (std::size_t k = 0; k < n; ++k) {
    T.unit[0 * n + k] = A.unit[k];
    T.unit[2 * n + k] = A.unit[k];
  }
  T.table.assign(d * d, Row(d, 0));
  for (std::size_t q1 = 0; q1 < 3; ++q1) {
    for (std::size_t q2 = 0; q2 < 3; ++q2) {
      if (kCol[q1] != kRow[q2]) continue;
      const std::size_t rq = kRow[q1], cq = kCol[q2];
      std::size_t q = 3;  // resulting position index
      for (std::size_t t = 0; t < 3; ++t) {
        if (kRow[t] == rq && kCol[t] == cq) q = t;
      }
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          T.table[(q1 * n + i) * d + (q2 * n + j)] = embed(A.prod(i, j), d, q * n);
        }
      }
    }
  }
  if (A.idempotents) {
    std::vector<Idempotent> es;
    for (std::size_t q : {std::size_t{0}, std::size_t{2}}) {
      for (const auto& e : *A.idempotents) {
        es.push_back({std::string(kName[q]) + "*" + e.label, embed(e.coords, d, q * n)});
      }
    }
    T.idempotents = std::move(es);
  }
  if (auto J = try_radical(A)) {
    std::vector<Row> rows;
    for (std::size_t r = 0; r < J->dim(); ++r) {
      rows.push_back(embed(J->basis.row(r), d, 0 * n));
      rows.push_back(embed(J->basis.row(r), d, 2 * n));
    }
    for (std::size_t i = 0; i < n; ++i) rows.push_back(indicator(d, 1 * n + i));
    T.radical_basis = Subspace::span(A.F, d, rows);
  }
  require_valid(T);
  return std::make_shared<StructureAlgebra>(std::move(T));
}

AlgebraHandle field_algebra(std::uint64_t p) {
  PrimeField F(p);
  StructureAlgebra A{F, 1, {"1"}, {1}, {Row{1}}, std::nullopt, std::nullopt, false,
                     std::nullopt, std::nullopt, "F" + std::to_string(p)};
  A.idempotents = std::vector<Idempotent>{{"1", Row{1}}};
  A.grading = std::vector<int>{0};
  A.graded_radical_ok = true;
  A.radical_basis = Subspace::zero(F, 1);
  require_valid(A);
  return std::make_shared<StructureAlgebra>(std::move(A));
}

AlgebraHandle dual_numbers(std::uint64_t p) {
  PrimeField F(p);
  StructureAlgebra A{F, 2, {"1", "x"}, {1, 0}, {}, std::nullopt, std::nullopt, false,
                     std::nullopt, std::nullopt, "F" + std::to_string(p) + "[x]/(x^2)"};
  A.table = {Row{1, 0}, Row{0, 1}, Row{0, 1}, Row{0, 0}};
  A.idempotents = std::vector<Idempotent>{{"1", Row{1, 0}}};
  A.grading = std::vector<int>{0, 1};
  A.graded_radical_ok = true;
  A.radical_basis = Subspace::span(F, 2, {Row{0, 1}});
  require_valid(A);
  return std::make_shared<StructureAlgebra>(std::move(A));
}

AlgebraHandle group_algebra(std::uint64_t p, const GroupData& G, const std::string& tag) {
  const std::size_t n = G.labels.size();
  if (n == 0) throw input_error("empty group");
  if (G.table.size() != n || G.inverse.size() != n || G.identity < 0 ||
      static_cast<std::size_t>(G.identity) >= n) {
    throw input_error("inconsistent group data for " + tag);
  }
  for (const auto& row : G.table) {
    if (row.size() != n) throw input_error("ragged group table for " + tag);
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw input_error("group table entry out of range for " + tag);
      }
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    const auto e = static_cast<std::size_t>(G.identity);
    if (static_cast<std::size_t>(G.table[e][g]) != g ||
        static_cast<std::size_t>(G.table[g][e]) != g ||
        G.table[g][static_cast<std::size_t>(G.inverse[g])] != G.identity) {
      throw input_error("group axioms fail at element " + G.labels[g] + " for " + tag);
    }
  }
  PrimeField F(p);
  StructureAlgebra A{F, n, G.labels, {}, {}, std::nullopt, std::nullopt, false,
                     std::nullopt, std::nullopt, "k[" + tag + "]"};
  A.unit = indicator(n, static_cast<std::size_t>(G.identity));
  A.table.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      A.table.push_back(indicator(n, static_cast<std::size_t>(G.table[i][j])));
    }
  }
  if (is_p_power(n, p)) {
    // kG is local for a p-group in characteristic p: the augmentation ideal
    // is the radical and the unit is the unique idempotent.
    A.idempotents = std::vector<Idempotent>{{G.labels[static_cast<std::size_t>(G.identity)], A.unit}};
    std::vector<Row> rows;
    for (std::size_t g = 0; g < n; ++g) {
      if (g == static_cast<std::size_t>(G.identity)) continue;
      Row r(n, 0);
      r[g] = 1;
      r[static_cast<std::size_t>(G.identity)] = F.sub(0, 1);
      rows.push_back(std::move(r));
    }
    A.radical_basis = Subspace::span(F, n, rows);
  }
  A.group = G;
  require_valid(A, true);
  return std::make_shared<StructureAlgebra>(std::move(A));
}

AlgebraHandle cyclic_group_algebra(std::uint64_t p, std::size_t n) {
  if (n == 0) throw input_error("cyclic group of order zero");
  GroupData G;
  for (std::size_t i = 0; i < n; ++i) {
    G.labels.push_back(i == 0 ? "1" : (i == 1 ? "g" : "g^" + std::to_string(i)));
  }
  G.table.assign(n, std::vector<int>(n, 0));
  G.inverse.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) G.table[i][j] = static_cast<int>((i + j) % n);
    G.inverse[i] = static_cast<int>((n - i) % n);
  }
  G.identity = 0;
  return group_algebra(p, G, "C" + std::to_string(n));
}

GroupData dihedral8_group() {
  // element (k, e) = r^k s^e at index e*4 + k;  s r = r^-1 s
  GroupData G;
  G.labels = {"1", "r", "r^2", "r^3", "s", "r*s", "r^2*s", "r^3*s"};
  G.table.assign(8, std::vector<int>(8, 0));
  G.inverse.assign(8, 0);
  for (int k1 = 0; k1 < 4; ++k1) {
    for (int e1 = 0; e1 < 2; ++e1) {
      for (int k2 = 0; k2 < 4; ++k2) {
        for (int e2 = 0; e2 < 2; ++e2) {
          const int k = ((k1 + (e1 ? 4 - k2 : k2)) % 4 + 4) % 4;
          const int e = e1 ^ e2;
          G.table[e1 * 4 + k1][e2 * 4 + k2] = e * 4 + k;
        }
      }
    }
  }
  for (int k = 0; k < 4; ++k) {
    G.inverse[k] = (4 - k) % 4;
    G.inverse[4 + k] = 4 + k;  // reflections are involutions
  }
  G.identity = 0;
  return G;
}

Subspace annihilator_in_dual(const StructureAlgebra& A, const Subspace& K) {
  if (K.ambient != A.dim) throw input_error("ambient mismatch in annihilator");
  if (K.dim() == 0) return Subspace::full(A.F, A.dim);
  return kernel(K.basis);
}

CenterComparison trivial_extension_center(const AlgebraHandle& Ah, const AlgebraHandle& TAh) {
  const StructureAlgebra& A = *Ah;
  const StructureAlgebra& T = *TAh;
  const std::size_t n = A.dim;
  if (T.dim != 2 * n) throw input_error("extension dimension does not match the base algebra");
  const Subspace Z = center(A).space;
  const Subspace Ann = annihilator_in_dual(A, commutator_subspace(A));
  std::vector<Row> rows;
  for (std::size_t r = 0; r < Z.dim(); ++r) rows.push_back(embed(Z.basis.row(r), 2 * n, 0));
  for (std::size_t r = 0; r < Ann.dim(); ++r) rows.push_back(embed(Ann.basis.row(r), 2 * n, n));
  CenterComparison cmp{Subspace::span(A.F, 2 * n, rows), center(T).space};
  if (!(cmp.block_formula == cmp.direct)) {
    throw std::logic_error("block formula for the center of " + T.provenance +
                           " disagrees with the direct computation");
  }
  return cmp;
}

Mat gram_matrix(const StructureAlgebra& A, const Row& f) {
  if (f.size() != A.dim) throw input_error("functional length mismatch");
  Mat G(A.F, A.dim, A.dim);
  for (std::size_t i = 0; i < A.dim; ++i) {
    for (std::size_t j = 0; j < A.dim; ++j) {
      const Row& t = A.prod(i, j);
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < A.dim; ++k) s = A.F.add(s, A.F.mul(t[k], f[k]));
      G.at(i, j) = s;
    }
  }
  return G;
}

bool is_symmetrizing_form(const StructureAlgebra& A, const Row& f) {
  const Mat G = gram_matrix(A, f);
  for (std::size_t i = 0; i < A.dim; ++i) {
    for (std::size_t j = i + 1; j < A.dim; ++j) {
      if (G.at(i, j) != G.at(j, i)) return false;
    }
  }
  return rank(G) == A.dim;
}

Row canonical_extension_form(const StructureAlgebra& A) {
  Row f(2 * A.dim, 0);
  for (std::size_t i = 0; i < A.dim; ++i) f[A.dim + i] = A.unit[i];
  return f;
}

FormSearch find_symmetrizing_form(const StructureAlgebra& A, std::uint64_t budget) {
  const Subspace Ann = annihilator_in_dual(A, commutator_subspace(A));
  const std::size_t d = Ann.dim();
  const std::uint64_t p = A.F.p();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (total > budget / p) {
      throw limit_error("symmetrizing form search space " + std::to_string(p) + "^" +
                        std::to_string(d) + " exceeds the enumeration budget");
    }
    total *= p;
  }
  FormSearch out;
  for (std::uint64_t c = 1; c < total; ++c) {
    Row f(A.dim, 0);
    std::uint64_t rest = c;
    for (std::size_t i = 0; i < d && rest; ++i, rest /= p) {
      const std::uint64_t digit = rest % p;
      if (digit == 0) continue;
      for (std::size_t k = 0; k < A.dim; ++k) {
        f[k] = A.F.add(f[k], A.F.mul(digit, Ann.basis.at(i, k)));
      }
    }
    ++out.tested;
    if (is_symmetrizing_form(A, f)) {
      out.form = std::move(f);
      return out;
    }
  }
  return out;  // complete enumeration, certified none
}

std::vector<std::string> verify_algebra_map(const LinearAlgebraMap& f) {
  std::vector<std::string> fails;
  const StructureAlgebra& D = *f.domain;
  const StructureAlgebra& C = *f.codomain;
  if (D.dim != C.dim) fails.push_back("domain and codomain dimensions differ");
  if (f.rows.rows != D.dim || f.rows.cols != C.dim) {
    fails.push_back("map matrix has the wrong shape");
    return fails;
  }
  if (mul_row(D.unit, f.rows) != C.unit) fails.push_back("map does not preserve the unit");
  for (std::size_t i = 0; i < D.dim; ++i) {
    for (std::size_t j = 0; j < D.dim; ++j) {
      const Row lhs = mul_row(D.prod(i, j), f.rows);
      const Row rhs = mult(C, f.rows.row(i), f.rows.row(j));
      if (lhs != rhs) {
        fails.push_back("map is not multiplicative at basis pair (" + D.labels[i] + ", " +
                        D.labels[j] + ")");
        return fails;
      }
    }
  }
  if (rank(f.rows) != D.dim) fails.push_back("map is not invertible");
  return fails;
}

LinearAlgebraMap tensor_to_extension_iso(const AlgebraHandle& tensorAD, const AlgebraHandle& TA,
                                         const AlgebraHandle& Ah, const Row& form) {
  const StructureAlgebra& A = *Ah;
  const std::size_t n = A.dim;
  if (!is_symmetrizing_form(A, form)) {
    throw input_error("functional is not a symmetrizing form on " + A.provenance);
  }
  if (tensorAD->dim != 2 * n || TA->dim != 2 * n) {
    throw input_error("dimension mismatch between tensor, extension, and base algebra");
  }
  // b_i (x) 1 -> (b_i, 0);  b_i (x) x -> (0, b_i.f) with (b_i.f)[j] = f(b_j b_i)
  Mat rows(A.F, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    rows.at(2 * i, i) = 1;
    for (std::size_t j = 0; j < n; ++j) {
      const Row& t = A.prod(j, i);
      std::uint64_t s = 0;
      for (std::size_t k = 0; k < n; ++k) s = A.F.add(s, A.F.mul(t[k], form[k]));
      rows.at(2 * i + 1, n + j) = s;
    }
  }
  LinearAlgebraMap map{tensorAD, TA, std::move(rows)};
  const auto fails = verify_algebra_map(map);
  if (!fails.empty()) {
    throw std::logic_error("tensor-to-extension comparison failed verification: " + fails.front());
  }
  return map;
}

LinearAlgebraMap tensor_to_triangular_iso(const AlgebraHandle& tensorAT, const AlgebraHandle& t2A,
                                          const AlgebraHandle& Ah) {
  const std::size_t n = Ah->dim;
  if (tensorAT->dim != 3 * n || t2A->dim != 3 * n) {
    throw input_error("dimension mismatch between tensor and triangular algebra");
  }
  // b_i (x) E_q -> E_q * b_i : index 3i+q -> q*n+i
  Mat rows(Ah->F, 3 * n, 3 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t q = 0; q < 3; ++q) rows.at(3 * i + q, q * n + i) = 1;
  }
  LinearAlgebraMap map{tensorAT, t2A, std::move(rows)};
  const auto fails = verify_algebra_map(map);
  if (!fails.empty()) {
    throw std::logic_error("tensor-to-triangular comparison failed verification: " + fails.front());
  }
  return map;
}

std::size_t stable_center_dim(const AlgebraHandle& Ah, const Row& form) {
  const StructureAlgebra& A = *Ah;
  if (!is_symmetrizing_form(A, form)) {
    throw input_error("stable center requires a certified symmetrizing form on " + A.provenance);
  }
  const std::size_t z = center(A).space.dim();
  const IntMatrix C = peirce_cartan(A);
  return z - p_rank(C, A.F.p());
}

}  // namespace finalg
