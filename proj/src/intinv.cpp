#include <string>
#include <utility>

#include "finalg/errors.hpp"
#include "finalg/intmat.hpp"

namespace finalg {

IntMatrix IntMatrix::from_ints(const std::vector<std::vector<long long>>& m) {
  if (m.empty()) return {};
  IntMatrix r(m.size(), m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != r.cols) throw input_error("ragged rows in integer matrix");
    for (std::size_t j = 0; j < r.cols; ++j) r.at(i, j) = m[i][j];
  }
  return r;
}

IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw input_error("shape mismatch in integer matrix product");
  IntMatrix r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  }
  return r;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix r(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  }
  return r;
}

IntMatrix scale(const BigInt& c, const IntMatrix& m) {
  IntMatrix r = m;
  for (auto& v : r.a) v *= c;
  return r;
}

std::string to_string(const IntMatrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows; ++i) {
    s += (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (j) s += ",";
      s += m.at(i, j).str();
    }
    s += "]";
  }
  return s + "]";
}

Mat reduce_mod_p(const IntMatrix& m, const PrimeField& F) {
  Mat r(F, m.rows, m.cols);
  const BigInt p = F.p();
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      BigInt v = m.at(i, j) % p;
      if (v < 0) v += p;
      r.at(i, j) = v.convert_to<std::uint64_t>();
    }
  }
  return r;
}

std::size_t p_rank(const IntMatrix& m, std::uint64_t p) {
  PrimeField F(p);
  return rank(reduce_mod_p(m, F));
}

BQForm reduce_form(BQForm f) {
  if (f.a <= 0 || f.a * f.c * 4 - f.b * f.b <= 0) {
    throw input_error("form is not positive definite");
  }
  while (true) {
    if (f.b > f.a || f.b <= -f.a) {
      // translate x -> x + k*y to bring b into (-a, a]
      const BigInt two_a = 2 * f.a;
      BigInt r = f.b % two_a;
      if (r <= -f.a) r += two_a;
      else if (r > f.a) r -= two_a;
      const BigInt k = (r - f.b) / two_a;
      f.c = f.a * k * k + f.b * k + f.c;
      f.b = r;
    }
    if (f.a > f.c) {
      std::swap(f.a, f.c);
      f.b = -f.b;
      continue;
    }
    break;
  }
  if (f.b < 0 && f.a == f.c) f.b = -f.b;
  return f;
}

namespace {

BQForm form_of_symmetric_2x2(const IntMatrix& m) {
  if (m.rows != 2 || m.cols != 2) throw input_error("expected a 2x2 matrix");
  if (m.at(0, 1) != m.at(1, 0)) throw input_error("matrix is not symmetric");
  if (m.at(0, 0) <= 0 || m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0) <= 0) {
    throw input_error("matrix is not positive definite");
  }
  return BQForm{m.at(0, 0), 2 * m.at(0, 1), m.at(1, 1)};
}

}  // namespace

BQForm reduced_form_of(const IntMatrix& m) { return reduce_form(form_of_symmetric_2x2(m)); }

bool congruent_over_Z_2x2(const IntMatrix& M, const IntMatrix& N) {
  const BQForm fm = reduced_form_of(M);
  const BQForm fn = reduced_form_of(N);
  if (fm == fn) return true;
  // Gauss reduction classifies proper (det +1) equivalence; an improper
  // change of basis reflects the form, so compare against that class too.
  const BQForm gn = reduce_form(BQForm{fn.a, -fn.b, fn.c});
  return fm == gn;
}

}  // namespace finalg
