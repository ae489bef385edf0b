#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "plueckerlab/arith/rational.hpp"

namespace plab {

/// Dense row-major matrix. Used with Rational and MultiPoly entries.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  /// Submatrix with the given row and column indices.
  Matrix select(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const {
    Matrix s(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j) s(i, j) = (*this)(rs[i], cs[j]);
    return s;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;

QMatrix identity(std::size_t n);
QMatrix operator*(const QMatrix& a, const QMatrix& b);
QVector operator*(const QMatrix& a, const QVector& v);
QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator*(const Rational& s, const QMatrix& a);

/// Reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m);
std::size_t rank(QMatrix m);
Rational det(QMatrix m);
std::optional<QMatrix> inverse(const QMatrix& m);
/// Basis of the right kernel {v : m v = 0}, one vector per free column.
std::vector<QVector> kernel(const QMatrix& m);
/// Basis of the row space (independent rows, in rref form).
std::vector<QVector> row_space(const QMatrix& m);
QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);

Rational dot(const QVector& a, const QVector& b);
bool is_zero_vector(const QVector& v);
/// True when a = c b for some nonzero rational c (both nonzero).
bool proportional(const QVector& a, const QVector& b);
/// Scales to integer coprime entries with the first nonzero entry positive.
QVector normalize_projective(QVector v);

std::string to_string(const QVector& v);

}  // namespace plab
