#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "plueckerlab/arith/matrix.hpp"
#include "plueckerlab/grassmann/skew.hpp"

namespace plab {

/// Coordinates p_ij (i < j) of a line in P^n, lexicographic pair order.
class PluckerVector {
 public:
  PluckerVector() = default;
  PluckerVector(std::size_t n, QVector coords);

  std::size_t ambient() const { return n_; }
  const QVector& coords() const { return p_; }
  /// p_ij for any i != j (antisymmetric), 0 on the diagonal.
  Rational at(std::size_t i, std::size_t j) const;
  bool is_zero() const { return is_zero_vector(p_); }
  /// Values of the quadrics p_ij p_kl - p_ik p_jl + p_il p_jk, i<j<k<l.
  QVector relations() const;
  bool satisfies_relations() const { return is_zero_vector(relations()); }
  /// The skew matrix with entry (i,j) = p_ij.
  SkewMatrix to_skew() const;
  /// P lies on the line: P ^ p = 0.
  bool passes_through(const QVector& point) const;
  /// sum_{i,j} a_ij p_ij (each unordered pair counted twice).
  Rational pairing(const SkewMatrix& a) const;
  /// Two points spanning the line (requires a genuine line).
  std::pair<QVector, QVector> points() const;
  bool same_line(const PluckerVector& other) const { return proportional(p_, other.p_); }
  std::string to_string() const;

 private:
  std::size_t n_ = 0;
  QVector p_;
};

class CoincidentPoints : public std::invalid_argument {
 public:
  CoincidentPoints() : std::invalid_argument("points are projectively equal") {}
};

/// p_ij = P_i Q_j - P_j Q_i.
PluckerVector plucker_from_points(const QVector& p, const QVector& q);

/// Projective linear subspace of P^n kept both as a span of points and as the
/// common zero set of independent linear forms.
class LinearSubspace {
 public:
  LinearSubspace() = default;
  static LinearSubspace from_points(std::size_t n, const std::vector<QVector>& points);
  static LinearSubspace from_forms(std::size_t n, const std::vector<QVector>& forms);

  std::size_t ambient() const { return n_; }
  /// Projective dimension (-1 for the empty subspace).
  int dimension() const { return static_cast<int>(points_.size()) - 1; }
  const std::vector<QVector>& points() const { return points_; }
  const std::vector<QVector>& forms() const { return forms_; }
  bool contains(const QVector& point) const;
  bool contains(const LinearSubspace& other) const;
  friend bool operator==(const LinearSubspace& a, const LinearSubspace& b) {
    return a.contains(b) && b.contains(a);
  }

 private:
  std::size_t n_ = 0;
  std::vector<QVector> points_;
  std::vector<QVector> forms_;
};

class RankMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Projectivised kernel of a skew matrix of rank exactly 2 (a 3-space in P^5).
LinearSubspace kernel_space(const SkewMatrix& m);

/// Complementary pairing in P^3: the linear complex of lines meeting the line q,
/// a_01 = q_23, a_02 = -q_13, a_03 = q_12, a_12 = q_03, a_13 = -q_02, a_23 = q_01.
SkewMatrix meeting_complex(const PluckerVector& q);

}  // namespace plab
