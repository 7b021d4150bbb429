#include "finalg/algebra.hpp"

#include <algorithm>
#include <cstring>
#include <string>

#include "finalg/gf2.hpp"

namespace finalg {

namespace {

Row indicator(std::size_t n, std::size_t i) {
  Row r(n, 0);
  r[i] = 1;
  return r;
}

std::string triple_str(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

// Bit-packed full associativity check for p = 2.  Returns the first failing
// triple, if any.  LHS(i,j,k) = (b_i b_j) b_k is accumulated into one buffer
// of dim^3 packed rows; RHS is accumulated row-by-row and compared.
std::optional<std::array<std::size_t, 3>> assoc_witness_gf2(const StructureAlgebra& A) {
  const std::size_t n = A.dim;
  const std::size_t w = (n + 63) / 64;
  std::vector<std::uint64_t> bits(n * n * w, 0);
  std::vector<std::vector<std::uint32_t>> supp(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Row& v = A.prod(i, j);
      for (std::size_t m = 0; m < n; ++m) {
        if (v[m]) {
          bits[(i * n + j) * w + (m >> 6)] |= 1ULL << (m & 63);
          supp[i * n + j].push_back(static_cast<std::uint32_t>(m));
        }
      }
    }
  }
  std::vector<std::uint64_t> lhs(n * n * n * w, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::uint64_t* dst = lhs.data() + (i * n + j) * n * w;
      for (std::uint32_t m : supp[i * n + j]) {
        const std::uint64_t* src = bits.data() + (m * n) * w;  // rows (m, k) for all k
        for (std::size_t t = 0; t < n * w; ++t) dst[t] ^= src[t];
      }
    }
  }
  std::vector<std::uint64_t> acc(w);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::uint32_t m : supp[j * n + k]) {
          const std::uint64_t* src = bits.data() + (i * n + m) * w;
          for (std::size_t t = 0; t < w; ++t) acc[t] ^= src[t];
        }
        const std::uint64_t* l = lhs.data() + ((i * n + j) * n + k) * w;
        if (!std::equal(acc.begin(), acc.end(), l)) return {{i, j, k}};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> assoc_witness_generic(const StructureAlgebra& A) {
  const std::size_t n = A.dim;
  Row lhs(n), rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Row& v = A.prod(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        std::fill(lhs.begin(), lhs.end(), 0);
        for (std::size_t m = 0; m < n; ++m) {
          if (v[m] == 0) continue;
          const Row& t = A.prod(m, k);
          for (std::size_t c = 0; c < n; ++c) lhs[c] = A.F.add(lhs[c], A.F.mul(v[m], t[c]));
        }
        const Row& u = A.prod(j, k);
        std::fill(rhs.begin(), rhs.end(), 0);
        for (std::size_t m = 0; m < n; ++m) {
          if (u[m] == 0) continue;
          const Row& t = A.prod(i, m);
          for (std::size_t c = 0; c < n; ++c) rhs[c] = A.F.add(rhs[c], A.F.mul(u[m], t[c]));
        }
        if (lhs != rhs) return {{i, j, k}};
      }
    }
  }
  return std::nullopt;
}

// Quotient of A by a two-sided ideal J on the indicator transversal given by
// J's non-pivot coordinates.  Only used for radical certification, where J is
// already known to be an ideal.
StructureAlgebra quotient_mod_ideal(const StructureAlgebra& A, const Subspace& J) {
  std::vector<bool> is_pivot(A.dim, false);
  for (auto p : J.pivots) is_pivot[p] = true;
  std::vector<std::size_t> cols;  // transversal coordinates
  for (std::size_t c = 0; c < A.dim; ++c) {
    if (!is_pivot[c]) cols.push_back(c);
  }
  const std::size_t q = cols.size();
  auto project = [&](Row v) {
    v = reduce_mod(J, std::move(v));
    Row out(q, 0);
    for (std::size_t t = 0; t < q; ++t) out[t] = v[cols[t]];
    return out;
  };
  StructureAlgebra Q{A.F, q, {}, {}, {}, std::nullopt, std::nullopt, false, std::nullopt,
                     std::nullopt, A.provenance + "/quotient"};
  Q.labels.reserve(q);
  for (std::size_t t = 0; t < q; ++t) Q.labels.push_back("q" + std::to_string(t));
  Q.unit = project(A.unit);
  Q.table.reserve(q * q);
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = 0; j < q; ++j) {
      Q.table.push_back(project(mult(A, indicator(A.dim, cols[i]), indicator(A.dim, cols[j]))));
    }
  }
  return Q;
}

// Kernel of the m-fold iterated p-power map on a commutative algebra; equals
// the set of nilpotents once p^m >= dim.
Subspace frobenius_radical(const StructureAlgebra& A) {
  Mat fro(A.F, A.dim, A.dim);
  for (std::size_t i = 0; i < A.dim; ++i) {
    fro.set_row(i, element_pow(A, indicator(A.dim, i), A.F.p()));
  }
  Mat iter = Mat::identity(A.F, A.dim);
  std::uint64_t reach = 1;
  while (reach < A.dim) {
    iter = mul(iter, fro);
    if (reach > A.dim / A.F.p() + 1) reach = A.dim;  // avoid overflow, loop ends
    else reach *= A.F.p();
  }
  // Row convention x -> x * iter; kernel() works on columns, so transpose.
  return kernel(transpose(iter));
}

void certify_radical(const StructureAlgebra& A, const Subspace& J, ValidationReport& rep) {
  if (J.ambient != A.dim) {
    rep.failures.push_back("radical basis has wrong ambient dimension");
    return;
  }
  if (A.F.p() == 2) {
    // Packed path: b*j_r and j_r*b are XOR combinations of table rows.
    const std::size_t n = A.dim, w = gf2::words_for(n);
    std::vector<std::uint64_t> tb(n * n * w);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) gf2::pack_row_into(A.prod(i, j), &tb[(i * n + j) * w], w);
    }
    gf2::Echelon ech(n);
    std::vector<std::vector<std::size_t>> supp(J.dim());
    for (std::size_t r = 0; r < J.dim(); ++r) {
      std::vector<std::uint64_t> packed(w);
      gf2::pack_row_into(J.basis.row(r), packed.data(), w);
      ech.insert(std::move(packed));
      for (std::size_t l = 0; l < n; ++l) {
        if (J.basis.at(r, l)) supp[r].push_back(l);
      }
    }
    std::vector<std::uint64_t> acc(w);
    for (std::size_t b = 0; b < n && rep.ok(); ++b) {
      for (std::size_t r = 0; r < J.dim(); ++r) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t l : supp[r]) {
          const std::uint64_t* src = &tb[(b * n + l) * w];
          for (std::size_t t = 0; t < w; ++t) acc[t] ^= src[t];
        }
        bool ok = ech.member(acc);
        if (ok) {
          std::fill(acc.begin(), acc.end(), 0);
          for (std::size_t l : supp[r]) {
            const std::uint64_t* src = &tb[(l * n + b) * w];
            for (std::size_t t = 0; t < w; ++t) acc[t] ^= src[t];
          }
          ok = ech.member(acc);
        }
        if (!ok) {
          rep.failures.push_back("carried radical is not a two-sided ideal (basis element " +
                                 std::to_string(b) + ")");
          break;
        }
      }
    }
  } else {
    for (std::size_t b = 0; b < A.dim && rep.ok(); ++b) {
      for (std::size_t r = 0; r < J.dim(); ++r) {
        Row jr = J.basis.row(r);
        if (!member(J, mult(A, indicator(A.dim, b), jr)) || !member(J, mult(A, jr, indicator(A.dim, b)))) {
          rep.failures.push_back("carried radical is not a two-sided ideal (basis element " +
                                 std::to_string(b) + ")");
          break;
        }
      }
    }
  }
  if (!rep.ok()) return;
  Subspace power = J;
  std::size_t steps = 0;
  while (power.dim() > 0) {
    if (++steps > A.dim) {
      rep.failures.push_back("carried radical is not nilpotent");
      return;
    }
    power = product_span(A, power, J);
  }
  // Split semisimple quotient: either matched to the idempotent list via
  // Peirce dimensions, or commutative with trivial p-power kernel.
  const std::size_t q = A.dim - J.dim();
  if (A.idempotents && A.idempotents->size() == q) {
    const auto& es = *A.idempotents;
    for (std::size_t i = 0; i < es.size(); ++i) {
      for (std::size_t j = 0; j < es.size(); ++j) {
        std::vector<Row> full, inside;
        for (std::size_t b = 0; b < A.dim; ++b) {
          full.push_back(mult(A, mult(A, es[i].coords, indicator(A.dim, b)), es[j].coords));
        }
        for (std::size_t r = 0; r < J.dim(); ++r) {
          inside.push_back(mult(A, mult(A, es[i].coords, J.basis.row(r)), es[j].coords));
        }
        std::size_t da = Subspace::span(A.F, A.dim, full).dim();
        std::size_t dj = Subspace::span(A.F, A.dim, inside).dim();
        std::size_t expect = (i == j) ? 1 : 0;
        if (da - dj != expect) {
          rep.failures.push_back("quotient by carried radical is not split basic semisimple at block (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
          return;
        }
      }
    }
    return;
  }
  // Fall back to the commutative criterion.
  for (std::size_t i = 0; i < A.dim; ++i) {
    for (std::size_t j = i + 1; j < A.dim; ++j) {
      if (!member(J, row_sub(A.F, A.prod(i, j), A.prod(j, i)))) {
        rep.failures.push_back("cannot certify semisimple quotient for carried radical (noncommutative "
                               "quotient without matching idempotent list)");
        return;
      }
    }
  }
  StructureAlgebra Q = quotient_mod_ideal(A, J);
  if (frobenius_radical(Q).dim() != 0) {
    rep.failures.push_back("quotient by carried radical has nonzero nilpotents");
  }
}

}  // namespace

Row mult(const StructureAlgebra& A, const Row& x, const Row& y) {
  if (x.size() != A.dim || y.size() != A.dim) throw input_error("element length mismatch in mult");
  Row r(A.dim, 0);
  for (std::size_t m = 0; m < A.dim; ++m) {
    if (x[m] == 0) continue;
    for (std::size_t k = 0; k < A.dim; ++k) {
      if (y[k] == 0) continue;
      const std::uint64_t c = A.F.mul(x[m], y[k]);
      const Row& t = A.prod(m, k);
      for (std::size_t s = 0; s < A.dim; ++s) r[s] = A.F.add(r[s], A.F.mul(c, t[s]));
    }
  }
  return r;
}

Row element_pow(const StructureAlgebra& A, Row x, std::uint64_t e) {
  Row r = A.unit;
  while (e) {
    if (e & 1) r = mult(A, r, x);
    x = mult(A, x, x);
    e >>= 1;
  }
  return r;
}

Mat left_regular(const StructureAlgebra& A, const Row& x) {
  Mat L(A.F, A.dim, A.dim);
  for (std::size_t j = 0; j < A.dim; ++j) {
    Row col = mult(A, x, indicator(A.dim, j));
    for (std::size_t i = 0; i < A.dim; ++i) L.at(i, j) = col[i];
  }
  return L;
}

Mat right_regular(const StructureAlgebra& A, const Row& x) {
  Mat R(A.F, A.dim, A.dim);
  for (std::size_t j = 0; j < A.dim; ++j) {
    Row col = mult(A, indicator(A.dim, j), x);
    for (std::size_t i = 0; i < A.dim; ++i) R.at(i, j) = col[i];
  }
  return R;
}

Subspace product_span(const StructureAlgebra& A, const Subspace& U, const Subspace& W) {
  if (U.ambient != A.dim || W.ambient != A.dim) throw input_error("ambient mismatch in product_span");
  if (A.F.p() == 2) {
    // u_i * w_j = sum_{k,l} u_i[k] w_j[l] prod(k,l): accumulate the partial
    // combination M_i[l] = sum_k u_i[k] prod(k,l) once per i, then XOR rows of
    // M_i per w_j.  Avoids materializing U.dim*W.dim unpacked product rows.
    const std::size_t n = A.dim, w = gf2::words_for(n);
    std::vector<std::uint64_t> tb(n * n * w);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) gf2::pack_row_into(A.prod(i, j), &tb[(i * n + j) * w], w);
    }
    gf2::Echelon ech(n);
    std::vector<std::uint64_t> mi(n * w), acc(w);
    for (std::size_t i = 0; i < U.dim(); ++i) {
      std::fill(mi.begin(), mi.end(), 0);
      for (std::size_t k = 0; k < n; ++k) {
        if (!U.basis.at(i, k)) continue;
        const std::uint64_t* blk = &tb[(k * n) * w];
        for (std::size_t t = 0; t < n * w; ++t) mi[t] ^= blk[t];
      }
      for (std::size_t j = 0; j < W.dim(); ++j) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t l = 0; l < n; ++l) {
          if (!W.basis.at(j, l)) continue;
          for (std::size_t t = 0; t < w; ++t) acc[t] ^= mi[l * w + t];
        }
        ech.insert(acc);
      }
    }
    return Subspace::span(A.F, A.dim, ech.unpacked());
  }
  std::vector<Row> rows;
  rows.reserve(U.dim() * W.dim());
  for (std::size_t i = 0; i < U.dim(); ++i) {
    for (std::size_t j = 0; j < W.dim(); ++j) {
      rows.push_back(mult(A, U.basis.row(i), W.basis.row(j)));
    }
  }
  return Subspace::span(A.F, A.dim, rows);
}

ValidationReport validate(const StructureAlgebra& A) {
  ValidationReport rep;
  if (A.dim == 0 || A.labels.size() != A.dim || A.unit.size() != A.dim ||
      A.table.size() != A.dim * A.dim) {
    rep.failures.push_back("inconsistent dimensions in algebra data");
    return rep;
  }
  for (const Row& r : A.table) {
    if (r.size() != A.dim) {
      rep.failures.push_back("table row of wrong length");
      return rep;
    }
    for (auto v : r) {
      if (v >= A.F.p()) {
        rep.failures.push_back("table entry out of residue range");
        return rep;
      }
    }
  }
  for (std::size_t i = 0; i < A.dim; ++i) {
    if (mult(A, A.unit, indicator(A.dim, i)) != indicator(A.dim, i) ||
        mult(A, indicator(A.dim, i), A.unit) != indicator(A.dim, i)) {
      rep.failures.push_back("unit law fails at basis element " + std::to_string(i));
      break;
    }
  }
  auto witness = (A.F.p() == 2) ? assoc_witness_gf2(A) : assoc_witness_generic(A);
  if (witness) {
    rep.failures.push_back("associativity fails at basis triple " +
                           triple_str((*witness)[0], (*witness)[1], (*witness)[2]));
  }
  if (A.idempotents) {
    const auto& es = *A.idempotents;
    Row total(A.dim, 0);
    for (std::size_t i = 0; i < es.size(); ++i) {
      total = row_add(A.F, total, es[i].coords);
      for (std::size_t j = 0; j < es.size(); ++j) {
        Row pr = mult(A, es[i].coords, es[j].coords);
        Row expect = (i == j) ? es[i].coords : Row(A.dim, 0);
        if (pr != expect) {
          rep.failures.push_back("idempotent list not orthogonal-idempotent at (" + std::to_string(i) +
                                 "," + std::to_string(j) + ")");
        }
      }
    }
    if (total != A.unit) rep.failures.push_back("idempotent list does not sum to the unit");
  }
  if (A.grading) {
    const auto& g = *A.grading;
    if (g.size() != A.dim) {
      rep.failures.push_back("grading has wrong length");
    } else {
      for (std::size_t i = 0; i < A.dim && rep.ok(); ++i) {
        for (std::size_t j = 0; j < A.dim; ++j) {
          const Row& v = A.prod(i, j);
          for (std::size_t m = 0; m < A.dim; ++m) {
            if (v[m] != 0 && g[m] != g[i] + g[j]) {
              rep.failures.push_back("grading incompatible with multiplication at " +
                                     triple_str(i, j, m));
              break;
            }
          }
        }
      }
    }
  }
  if (A.group) {
    const auto& G = *A.group;
    if (G.labels.size() != A.dim || G.table.size() != A.dim) {
      rep.failures.push_back("group data size mismatch");
    } else if (A.unit != indicator(A.dim, static_cast<std::size_t>(G.identity))) {
      rep.failures.push_back("group identity does not match algebra unit");
    } else {
      for (std::size_t i = 0; i < A.dim && rep.ok(); ++i) {
        for (std::size_t j = 0; j < A.dim; ++j) {
          if (A.prod(i, j) != indicator(A.dim, static_cast<std::size_t>(G.table[i][j]))) {
            rep.failures.push_back("algebra table disagrees with group table at (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")");
            break;
          }
        }
      }
    }
  }
  if (rep.ok() && A.radical_basis) certify_radical(A, *A.radical_basis, rep);
  return rep;
}

void require_valid(const StructureAlgebra& A, bool as_input) {
  ValidationReport rep = validate(A);
  if (rep.ok()) return;
  std::string msg = "algebra validation failed [" + A.provenance + "]: " + rep.failures.front();
  if (as_input) throw input_error(msg);
  throw std::logic_error(msg);
}

CenterResult center(const StructureAlgebra& A) {
  Mat stacked(A.F, A.dim * A.dim, A.dim);
  for (std::size_t i = 0; i < A.dim; ++i) {
    Mat L = left_regular(A, indicator(A.dim, i));
    Mat R = right_regular(A, indicator(A.dim, i));
    for (std::size_t r = 0; r < A.dim; ++r) {
      for (std::size_t c = 0; c < A.dim; ++c) {
        stacked.at(i * A.dim + r, c) = A.F.sub(L.at(r, c), R.at(r, c));
      }
    }
  }
  Subspace Z = kernel(stacked);
  StructureAlgebra Zalg = subalgebra(A, Z);
  Zalg.provenance = "Z(" + A.provenance + ")";
  return CenterResult{std::move(Z), std::move(Zalg)};
}

Subspace commutator_subspace(const StructureAlgebra& A) {
  std::vector<Row> rows;
  rows.reserve(A.dim * (A.dim - 1) / 2);
  for (std::size_t i = 0; i < A.dim; ++i) {
    for (std::size_t j = i + 1; j < A.dim; ++j) {
      rows.push_back(row_sub(A.F, A.prod(i, j), A.prod(j, i)));
    }
  }
  return Subspace::span(A.F, A.dim, rows);
}

Subspace radical(const StructureAlgebra& A) {
  if (A.radical_basis) return *A.radical_basis;
  if (A.grading && A.graded_radical_ok) {
    std::vector<Row> rows;
    for (std::size_t i = 0; i < A.dim; ++i) {
      if ((*A.grading)[i] > 0) rows.push_back(indicator(A.dim, i));
    }
    return Subspace::span(A.F, A.dim, rows);
  }
  if (commutator_subspace(A).dim() == 0) return frobenius_radical(A);
  throw unsupported_error(
      "no radical strategy applies to [" + A.provenance +
      "]: not construction-carried, not graded with certified degree-zero part, not commutative");
}

std::vector<std::size_t> loewy_layers(const StructureAlgebra& A) {
  Subspace J = radical(A);
  std::vector<std::size_t> dims{A.dim};
  Subspace power = J;
  while (power.dim() > 0) {
    dims.push_back(power.dim());
    if (dims.size() > A.dim + 1) throw std::logic_error("radical chain does not terminate");
    power = product_span(A, power, J);
  }
  dims.push_back(0);
  std::vector<std::size_t> layers;
  for (std::size_t i = 0; i + 1 < dims.size(); ++i) layers.push_back(dims[i] - dims[i + 1]);
  return layers;
}

Predicates predicates(const StructureAlgebra& A) {
  Subspace J = radical(A);
  Predicates p;
  p.is_local = (A.dim - J.dim() == 1);
  p.is_commutative = (commutator_subspace(A).dim() == 0);
  p.rad_square_zero = (product_span(A, J, J).dim() == 0);
  return p;
}

StructureAlgebra subalgebra(const StructureAlgebra& A, const Subspace& U) {
  if (U.ambient != A.dim) throw input_error("ambient mismatch in subalgebra");
  if (!member(U, A.unit)) throw input_error("subalgebra candidate does not contain the unit");
  const std::size_t d = U.dim();
  StructureAlgebra S{A.F, d, {}, {}, {}, std::nullopt, std::nullopt, false, std::nullopt,
                     std::nullopt, "sub(" + A.provenance + ")"};
  auto coords_or_throw = [&](const Row& v, std::size_t i, std::size_t j) {
    auto c = coords_in(U, v);
    if (!c) {
      throw input_error("subspace not closed under multiplication (basis rows " + std::to_string(i) +
                        "," + std::to_string(j) + ")");
    }
    return *c;
  };
  S.unit = *coords_in(U, A.unit);
  S.labels.reserve(d);
  for (std::size_t i = 0; i < d; ++i) S.labels.push_back("u" + std::to_string(i));
  S.table.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      S.table.push_back(coords_or_throw(mult(A, U.basis.row(i), U.basis.row(j)), i, j));
    }
  }
  if (A.grading) {
    // A graded row space has homogeneous canonical basis rows; if that holds,
    // degrees transfer to the subalgebra.
    std::vector<int> g(d, -1);
    bool homogeneous = true;
    for (std::size_t i = 0; i < d && homogeneous; ++i) {
      for (std::size_t c = 0; c < A.dim; ++c) {
        if (U.basis.at(i, c) == 0) continue;
        if (g[i] == -1) g[i] = (*A.grading)[c];
        else if (g[i] != (*A.grading)[c]) homogeneous = false;
      }
    }
    if (homogeneous) {
      S.grading = g;
      // The positive part is the radical only when the degree-zero part is
      // certified semisimple; for induced gradings that is the case when it
      // is spanned by the unit alone.
      std::vector<Row> deg0;
      for (std::size_t i = 0; i < d; ++i) {
        if (g[i] == 0) deg0.push_back(U.basis.row(i));
      }
      S.graded_radical_ok = A.graded_radical_ok &&
                            Subspace::span(A.F, A.dim, deg0) == Subspace::span(A.F, A.dim, {A.unit});
    }
  }
  return S;
}

IntMatrix peirce_cartan(const StructureAlgebra& A) {
  if (!A.idempotents) {
    throw unsupported_error("Cartan matrix needs a complete idempotent list [" + A.provenance + "]");
  }
  const auto& es = *A.idempotents;
  Subspace J = radical(A);
  const std::size_t n = es.size();
  IntMatrix C(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Row> full, inside;
      for (std::size_t b = 0; b < A.dim; ++b) {
        full.push_back(mult(A, mult(A, es[i].coords, indicator(A.dim, b)), es[j].coords));
      }
      for (std::size_t r = 0; r < J.dim(); ++r) {
        inside.push_back(mult(A, mult(A, es[i].coords, J.basis.row(r)), es[j].coords));
      }
      const std::size_t da = Subspace::span(A.F, A.dim, full).dim();
      const std::size_t dj = Subspace::span(A.F, A.dim, inside).dim();
      const std::size_t expect = (i == j) ? 1 : 0;
      if (da - dj != expect) {
        throw input_error("Peirce block (" + std::to_string(i) + "," + std::to_string(j) +
                          ") of the semisimple quotient has dimension " + std::to_string(da - dj) +
                          " (non-basic or non-split); refusing Cartan matrix");
      }
      C.at(i, j) = da;
    }
  }
  return C;
}

}  // namespace finalg
