#include "affmaps/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace affmaps {

namespace {

using Rows = std::vector<std::vector<Integer>>;

Rows to_rows(const IntegerMatrix& A) {
  Rows out(A.rows());
  for (std::size_t r = 0; r < A.rows(); ++r) out[r] = A.row(r);
  return out;
}

IntegerMatrix from_rows(const Rows& rows, std::size_t cols) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

// (ra, rb) <- (s*ra + t*rb, u*ra + v*rb)
void combine(std::vector<Integer>& ra, std::vector<Integer>& rb, const Integer& s, const Integer& t,
             const Integer& u, const Integer& v) {
  for (std::size_t k = 0; k < ra.size(); ++k) {
    Integer a = ra[k], b = rb[k];
    ra[k] = s * a + t * b;
    rb[k] = u * a + v * b;
  }
}

void axpy(std::vector<Integer>& dst, const Integer& q, const std::vector<Integer>& src) {
  if (q == 0) return;
  for (std::size_t k = 0; k < dst.size(); ++k)
    if (src[k] != 0) dst[k] += q * src[k];
}

void negate(std::vector<Integer>& v) {
  for (auto& x : v) x = -x;
}

std::string matrix_text(std::size_t rows, std::size_t cols, auto&& cell) {
  std::string out = "[";
  for (std::size_t r = 0; r < rows; ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < cols; ++c) out += (c ? ", " : "") + cell(r, c);
    out += "]";
  }
  return out + "]";
}

}  // namespace

std::string to_string(const IntegerMatrix& m) {
  return matrix_text(m.rows(), m.cols(), [&](std::size_t r, std::size_t c) { return m(r, c).get_str(); });
}

std::string to_string(const RationalMatrix& m) {
  return matrix_text(m.rows(), m.cols(), [&](std::size_t r, std::size_t c) { return m(r, c).get_str(); });
}

RationalMatrix to_rational(const IntegerMatrix& A) {
  RationalMatrix out(A.rows(), A.cols());
  for (std::size_t r = 0; r < A.rows(); ++r)
    for (std::size_t c = 0; c < A.cols(); ++c) out(r, c) = Rational(A(r, c));
  return out;
}

HermiteForm hermite_normal_form(const IntegerMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  Rows H = to_rows(A);
  Rows U = to_rows(IntegerMatrix::identity(m));
  HermiteForm out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (H[i][c] == 0) continue;
      Integer a = H[r][c], b = H[i][c], g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer u = -b / g, v = a / g;
      combine(H[r], H[i], s, t, u, v);
      combine(U[r], U[i], s, t, u, v);
    }
    if (H[r][c] == 0) continue;
    if (H[r][c] < 0) {
      negate(H[r]);
      negate(U[r]);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), H[i][c].get_mpz_t(), H[r][c].get_mpz_t());
      axpy(H[i], -q, H[r]);
      axpy(U[i], -q, U[r]);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.H = from_rows(H, n);
  out.U = from_rows(U, m);
  return out;
}

SmithForm smith_normal_form(const IntegerMatrix& A) {
  const std::size_t m = A.rows(), n = A.cols();
  Rows S = to_rows(A);
  Rows U = to_rows(IntegerMatrix::identity(m));
  // columns of V are kept as rows of Vt
  Rows Vt = to_rows(IntegerMatrix::identity(n));
  auto col_axpy = [&](std::size_t dst, const Integer& q, std::size_t src) {
    if (q == 0) return;
    for (std::size_t i = 0; i < m; ++i) S[i][dst] += q * S[i][src];
    axpy(Vt[dst], q, Vt[src]);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m; ++i) std::swap(S[i][a], S[i][b]);
    std::swap(Vt[a], Vt[b]);
  };
  const std::size_t k = std::min(m, n);
  for (std::size_t t = 0; t < k; ++t) {
    for (;;) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (S[i][j] != 0 && (bi == m || abs(S[i][j]) < abs(S[bi][bj]))) {
            bi = i;
            bj = j;
          }
      if (bi == m) break;
      std::swap(S[t], S[bi]);
      std::swap(U[t], U[bi]);
      col_swap(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S[i][t] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), S[i][t].get_mpz_t(), S[t][t].get_mpz_t());
        axpy(S[i], -q, S[t]);
        axpy(U[i], -q, U[t]);
        if (S[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S[t][j] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), S[t][j].get_mpz_t(), S[t][t].get_mpz_t());
        col_axpy(j, -q, t);
        if (S[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(S[i][j].get_mpz_t(), S[t][t].get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      axpy(S[t], 1, S[bad]);
      axpy(U[t], 1, U[bad]);
    }
    if (S[t][t] < 0) {
      negate(S[t]);
      negate(U[t]);
    }
  }
  SmithForm out;
  out.U = from_rows(U, m);
  out.S = from_rows(S, n);
  out.V = from_rows(Vt, n).transpose();
  for (std::size_t t = 0; t < k; ++t) out.diagonal.push_back(S[t][t]);
  return out;
}

IntegerMatrix canonical_lattice_basis(const IntegerMatrix& B) {
  const std::size_t n = B.cols();
  IntegerMatrix rev(B.rows(), n);
  for (std::size_t r = 0; r < B.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) rev(r, c) = B(r, n - 1 - c);
  HermiteForm hf = hermite_normal_form(rev);
  const std::size_t k = hf.pivot_columns.size();
  IntegerMatrix out(k, n);
  for (std::size_t r = 0; r < k; ++r) {
    // latest trailing pivot comes first in the reversed form
    std::size_t src = k - 1 - r;
    for (std::size_t c = 0; c < n; ++c) out(r, c) = hf.H(src, n - 1 - c);
    std::size_t first = 0;
    while (out(r, first) == 0) ++first;
    if (out(r, first) < 0)
      for (std::size_t c = 0; c < n; ++c) out(r, c) = -out(r, c);
  }
  return out;
}

IntegerMatrix integer_kernel(const IntegerMatrix& A) {
  const std::size_t n = A.cols();
  HermiteForm hf = hermite_normal_form(A.transpose());
  const std::size_t r = hf.pivot_columns.size();
  IntegerMatrix basis(n - r, n);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c) basis(i - r, c) = hf.U(i, c);
  return canonical_lattice_basis(basis).transpose();
}

Integer lattice_index(const IntegerMatrix& B) {
  if (B.rows() == 0) return 1;
  if (rank(B) < B.rows()) return 0;
  Integer index = 1;
  for (const auto& s : smith_normal_form(B).diagonal)
    if (s != 0) index *= s;
  return index;
}

UnimodularTransform unimodular_extension(const IntegerMatrix& V, std::size_t n) {
  const std::size_t d = V.cols();
  if (V.rows() != n || d > n) throw std::invalid_argument("unimodular_extension: shape mismatch");
  HermiteForm hf = hermite_normal_form(V.transpose());
  if (hf.pivot_columns.size() != d) throw std::invalid_argument("unimodular_extension: dependent columns");
  UnimodularTransform out;
  out.d = d;
  out.W = IntegerMatrix(d, d);
  out.M = RationalMatrix(n, n);
  for (std::size_t j = 0; j < d; ++j) {
    out.W(j, j) = hf.H(j, hf.pivot_columns[j]);
    for (std::size_t i = 0; i < n; ++i) {
      out.M(i, j) = Rational(V(i, j), out.W(j, j));
      out.M(i, j).canonicalize();
    }
  }
  std::vector<bool> pivot(n, false);
  for (auto c : hf.pivot_columns) pivot[c] = true;
  std::size_t col = d;
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) out.M(i, col++) = 1;
  Rational det = determinant(out.M);
  if (det == -1) {
    std::size_t flip = d < n ? n - 1 : d - 1;
    for (std::size_t i = 0; i < n; ++i) out.M(i, flip) = -out.M(i, flip);
  } else if (det != 1) {
    throw std::logic_error("unimodular_extension: determinant " + det.get_str());
  }
  return out;
}

std::size_t rank(const IntegerMatrix& A) {
  RationalMatrix R = to_rational(A);
  std::size_t r = 0;
  for (std::size_t c = 0; c < R.cols() && r < R.rows(); ++c) {
    std::size_t p = r;
    while (p < R.rows() && R(p, c) == 0) ++p;
    if (p == R.rows()) continue;
    for (std::size_t j = 0; j < R.cols(); ++j) std::swap(R(r, j), R(p, j));
    for (std::size_t i = r + 1; i < R.rows(); ++i) {
      if (R(i, c) == 0) continue;
      Rational f = R(i, c) / R(r, c);
      for (std::size_t j = c; j < R.cols(); ++j) R(i, j) -= f * R(r, j);
    }
    ++r;
  }
  return r;
}

Integer determinant(const IntegerMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  Rows M = to_rows(A);
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && M[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(M[k], M[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        M[i][j] = v;
      }
    prev = M[k][k];
  }
  return sign * M[n - 1][n - 1];
}

Rational determinant(const RationalMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant: matrix not square");
  RationalMatrix R = A;
  const std::size_t n = R.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && R(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(R(c, j), R(p, j));
      det = -det;
    }
    det *= R(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (R(i, c) == 0) continue;
      Rational f = R(i, c) / R(c, c);
      for (std::size_t j = c; j < n; ++j) R(i, j) -= f * R(c, j);
    }
  }
  return det;
}

RationalMatrix inverse(const RationalMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = A.rows();
  RationalMatrix R = A;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && R(p, c) == 0) ++p;
    if (p == n) throw std::invalid_argument("inverse: singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(R(c, j), R(p, j));
      std::swap(inv(c, j), inv(p, j));
    }
    Rational piv = R(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      R(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || R(i, c) == 0) continue;
      Rational f = R(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        R(i, j) -= f * R(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace affmaps
