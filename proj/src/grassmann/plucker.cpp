#include "plueckerlab/grassmann/plucker.hpp"

#include <sstream>

namespace plab {

PluckerVector::PluckerVector(std::size_t n, QVector coords) : n_(n), p_(std::move(coords)) {
  if (p_.size() != (n + 1) * n / 2) throw std::invalid_argument("Pluecker vector has the wrong length");
}

Rational PluckerVector::at(std::size_t i, std::size_t j) const {
  if (i == j) return 0;
  if (i < j) return p_[pair_index(i, j, n_ + 1)];
  return -p_[pair_index(j, i, n_ + 1)];
}

QVector PluckerVector::relations() const {
  QVector out;
  const std::size_t s = n_ + 1;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j)
      for (std::size_t k = j + 1; k < s; ++k)
        for (std::size_t l = k + 1; l < s; ++l)
          out.push_back(at(i, j) * at(k, l) - at(i, k) * at(j, l) + at(i, l) * at(j, k));
  return out;
}

SkewMatrix PluckerVector::to_skew() const {
  QMatrix m(n_ + 1, n_ + 1, Rational(0));
  for (std::size_t i = 0; i <= n_; ++i)
    for (std::size_t j = 0; j <= n_; ++j) m(i, j) = at(i, j);
  return SkewMatrix(std::move(m));
}

bool PluckerVector::passes_through(const QVector& x) const {
  if (x.size() != n_ + 1) throw std::invalid_argument("point has the wrong length");
  for (std::size_t i = 0; i <= n_; ++i)
    for (std::size_t j = i + 1; j <= n_; ++j)
      for (std::size_t k = j + 1; k <= n_; ++k)
        if (x[i] * at(j, k) - x[j] * at(i, k) + x[k] * at(i, j) != 0) return false;
  return true;
}

Rational PluckerVector::pairing(const SkewMatrix& a) const {
  if (a.size() != n_ + 1) throw std::invalid_argument("complex has the wrong size");
  Rational s = 0;
  for (std::size_t i = 0; i <= n_; ++i)
    for (std::size_t j = i + 1; j <= n_; ++j) s += a(i, j) * at(i, j);
  return 2 * s;
}

std::pair<QVector, QVector> PluckerVector::points() const {
  auto rows = row_space(to_skew().matrix());
  if (rows.size() != 2) throw std::invalid_argument("Pluecker vector is not a line");
  return {rows[0], rows[1]};
}

std::string PluckerVector::to_string() const { return plab::to_string(p_); }

PluckerVector plucker_from_points(const QVector& p, const QVector& q) {
  if (p.size() != q.size() || p.size() < 2) throw std::invalid_argument("points of different length");
  const std::size_t s = p.size();
  QVector c;
  c.reserve(s * (s - 1) / 2);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i + 1; j < s; ++j) c.push_back(p[i] * q[j] - p[j] * q[i]);
  if (is_zero_vector(c)) throw CoincidentPoints();
  return PluckerVector(s - 1, std::move(c));
}

LinearSubspace LinearSubspace::from_points(std::size_t n, const std::vector<QVector>& points) {
  LinearSubspace s;
  s.n_ = n;
  if (points.empty()) {
    for (std::size_t i = 0; i <= n; ++i) {
      QVector e(n + 1, Rational(0));
      e[i] = 1;
      s.forms_.push_back(e);
    }
    return s;
  }
  QMatrix m = from_rows(points, n + 1);
  s.points_ = row_space(m);
  s.forms_ = kernel(m);
  return s;
}

LinearSubspace LinearSubspace::from_forms(std::size_t n, const std::vector<QVector>& forms) {
  LinearSubspace s;
  s.n_ = n;
  if (forms.empty()) {
    for (std::size_t i = 0; i <= n; ++i) {
      QVector e(n + 1, Rational(0));
      e[i] = 1;
      s.points_.push_back(e);
    }
    return s;
  }
  QMatrix m = from_rows(forms, n + 1);
  s.forms_ = row_space(m);
  s.points_ = kernel(m);
  return s;
}

bool LinearSubspace::contains(const QVector& point) const {
  for (const auto& f : forms_)
    if (dot(f, point) != 0) return false;
  return true;
}

bool LinearSubspace::contains(const LinearSubspace& other) const {
  for (const auto& p : other.points_)
    if (!contains(p)) return false;
  return true;
}

LinearSubspace kernel_space(const SkewMatrix& m) {
  if (skew_rank(m) != 2) throw RankMismatch("kernel_space needs a skew matrix of rank 2");
  return LinearSubspace::from_forms(m.size() - 1, row_space(m.matrix()));
}

SkewMatrix meeting_complex(const PluckerVector& q) {
  if (q.ambient() != 3) throw std::invalid_argument("meeting complex is defined in P^3");
  QMatrix a(4, 4, Rational(0));
  auto set = [&](std::size_t i, std::size_t j, const Rational& v) {
    a(i, j) = v;
    a(j, i) = -v;
  };
  set(0, 1, q.at(2, 3));
  set(0, 2, -q.at(1, 3));
  set(0, 3, q.at(1, 2));
  set(1, 2, q.at(0, 3));
  set(1, 3, -q.at(0, 2));
  set(2, 3, q.at(0, 1));
  return SkewMatrix(std::move(a));
}

}  // namespace plab
