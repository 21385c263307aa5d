#ifndef AFFMAPS_LINALG_HPP
#define AFFMAPS_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "affmaps/number.hpp"

namespace affmaps {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init)
      for (const auto& v : row) data_.push_back(v);
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  const std::vector<T>& entries() const { return data_; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  void append_row(const std::vector<T>& v) {
    if (rows_ == 0 && data_.empty()) cols_ = v.size();
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
      }
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;

std::string to_string(const IntegerMatrix& m);
std::string to_string(const RationalMatrix& m);

struct HermiteForm {
  IntegerMatrix H;
  IntegerMatrix U;
  std::vector<std::size_t> pivot_columns;  // one per nonzero row of H
};

struct SmithForm {
  IntegerMatrix U;
  IntegerMatrix S;
  IntegerMatrix V;
  std::vector<Integer> diagonal;  // min(rows, cols) entries, zeros last
};

struct UnimodularTransform {
  RationalMatrix M;
  IntegerMatrix W;
  std::size_t d = 0;
};

/// Row-style Hermite form: U*A = H, positive pivots, entries above pivots in [0, pivot).
HermiteForm hermite_normal_form(const IntegerMatrix& A);

/// U*A*V = S with S diagonal and each diagonal entry dividing the next.
SmithForm smith_normal_form(const IntegerMatrix& A);

/// Basis of the integer kernel {x : A x = 0} as columns, in canonical form:
/// equal lattices give equal matrices.
IntegerMatrix integer_kernel(const IntegerMatrix& A);

/// Canonical basis (as rows) of the lattice spanned by the rows of B.
IntegerMatrix canonical_lattice_basis(const IntegerMatrix& B);

/// Index of the lattice spanned by the rows of B inside its saturation in Z^n
/// when B has full row rank; 0 otherwise.
Integer lattice_index(const IntegerMatrix& B);

/// Extends the independent columns of V to a square M with det(M) = 1.
/// Throws std::invalid_argument when the columns of V are dependent.
UnimodularTransform unimodular_extension(const IntegerMatrix& V, std::size_t n);

std::size_t rank(const IntegerMatrix& A);
Integer determinant(const IntegerMatrix& A);
Rational determinant(const RationalMatrix& A);
/// Inverse of a square nonsingular rational matrix; throws std::invalid_argument otherwise.
RationalMatrix inverse(const RationalMatrix& A);

RationalMatrix to_rational(const IntegerMatrix& A);

}  // namespace affmaps

#endif  // AFFMAPS_LINALG_HPP
