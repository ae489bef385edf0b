#include "plueckerlab/grassmann/skew.hpp"

namespace plab {

SkewMatrix::SkewMatrix(QMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw NotSkew("matrix is not square");
  for (std::size_t i = 0; i < m_.rows(); ++i) {
    if (m_(i, i) != 0) throw NotSkew("nonzero diagonal entry at " + std::to_string(i));
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      if (m_(i, j) != -m_(j, i))
        throw NotSkew("entries (" + std::to_string(i) + "," + std::to_string(j) + ") are not antisymmetric");
  }
}

SkewMatrix SkewMatrix::elementary(std::size_t size, std::size_t i, std::size_t j, const Rational& c) {
  QMatrix m(size, size, Rational(0));
  m(i, j) = c;
  m(j, i) = -c;
  return SkewMatrix(std::move(m));
}

SkewMatrix SkewMatrix::wedge(const QVector& u, const QVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("wedge of vectors of different length");
  QMatrix m(u.size(), u.size(), Rational(0));
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < u.size(); ++j) m(i, j) = u[i] * v[j] - v[i] * u[j];
  return SkewMatrix(std::move(m));
}

QVector SkewMatrix::upper() const {
  QVector out;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j) out.push_back(m_(i, j));
  return out;
}

SkewMatrix operator+(const SkewMatrix& a, const SkewMatrix& b) { return SkewMatrix(a.m_ + b.m_); }
SkewMatrix operator*(const Rational& c, const SkewMatrix& a) { return SkewMatrix(c * a.m_); }

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t size) {
  if (i >= j || j >= size) throw std::out_of_range("pair index");
  // pairs (0,1..size-1), (1,2..), ...
  return i * size - i * (i + 1) / 2 + (j - i - 1);
}

Rational pfaffian(const SkewMatrix& m) { return pfaffian(m.matrix()); }

std::size_t skew_rank(const SkewMatrix& m) { return rank(m.matrix()); }

Matrix<MultiPoly> linear_combination(const std::vector<SkewMatrix>& mats, const std::vector<MultiPoly>& coeffs) {
  if (mats.empty() || mats.size() != coeffs.size()) throw std::invalid_argument("linear combination sizes");
  const std::size_t n = mats[0].size();
  const VarSet& v = coeffs[0].vars();
  Matrix<MultiPoly> out(n, n, MultiPoly(v));
  for (std::size_t k = 0; k < mats.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (mats[k](i, j) != 0) out(i, j) += coeffs[k] * mats[k](i, j);
  return out;
}

QMatrix evaluate(const Matrix<MultiPoly>& m, const QVector& point) {
  QMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).evaluate(point);
  return out;
}

std::string to_string(DualStratum s) {
  switch (s) {
    case DualStratum::general: return "general";
    case DualStratum::on_dual_grassmannian: return "on_dual_G";
    case DualStratum::on_g35: return "on_G35";
    case DualStratum::zero: return "zero";
  }
  return "?";
}

DualStratum in_dual_strata(const SkewMatrix& m) {
  if (m.size() != 6) throw std::invalid_argument("dual strata are defined for 6x6 matrices");
  switch (skew_rank(m)) {
    case 6: return DualStratum::general;
    case 4: return DualStratum::on_dual_grassmannian;
    case 2: return DualStratum::on_g35;
    default: return DualStratum::zero;
  }
}

}  // namespace plab
