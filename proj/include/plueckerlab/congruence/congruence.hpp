#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "plueckerlab/arith/matrix.hpp"
#include "plueckerlab/arith/upoly.hpp"
#include "plueckerlab/grassmann/plucker.hpp"
#include "plueckerlab/grassmann/skew.hpp"
#include "plueckerlab/groebner/ideal.hpp"

namespace plab {

class DependentWeb : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// n-1 skew (n+1)x(n+1) rational matrices defining n-1 linear complexes in P^n.
struct SkewWeb {
  std::size_t n = 0;
  std::vector<SkewMatrix> mats;

  /// Throws NotSkew / DependentWeb / std::invalid_argument.
  void validate() const;
};

/// Web plus the (n-1)x(n+1) matrix M of linear forms with M_kj = sum_i a^k_ji x_i,
/// i.e. row k of M(P) is A_k P.
class Congruence {
 public:
  Congruence() = default;
  const SkewWeb& web() const { return web_; }
  std::size_t n() const { return web_.n; }
  const VarSet& vars() const { return vars_; }
  const Matrix<MultiPoly>& matrix() const { return m_; }
  /// M evaluated at a point.
  QMatrix at(const QVector& point) const;

  friend Congruence build_congruence(const SkewWeb& web);

 private:
  SkewWeb web_;
  VarSet vars_;
  Matrix<MultiPoly> m_;
};

Congruence build_congruence(const SkewWeb& web);

/// Ideal of all maximal minors of M (the focal locus).
Ideal focal_ideal(const Congruence& c);
std::vector<MultiPoly> focal_generators(const Congruence& c, bool parallel = true);

class FocalPoint : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The unique congruence line through a point off the focal locus, with
/// p_ij = (-1)^(i+j+1) * (minor of M(P) deleting columns i and j).
PluckerVector line_through_point(const Congruence& c, const QVector& point);
/// Kernel dimension of M(P) minus one (1 off the focal locus).
std::size_t incidence_corank(const Congruence& c, const QVector& point);
bool in_congruence(const Congruence& c, const PluckerVector& line);

struct FocusSet {
  PluckerVector line;
  QVector p, q;  // parametrization l*p + m*q
  BinaryForm form;
  bool line_in_focal = false;
  BinaryRoots roots;
  /// Multiplicities of the distinct real roots (finite ones, then infinity).
  std::vector<int> multiplicities;
  int nonreal = 0;
};

class NotInCongruence : public std::invalid_argument {
 public:
  NotInCongruence() : std::invalid_argument("line does not belong to the congruence") {}
};

FocusSet foci_on_line(const Congruence& c, const PluckerVector& line);
/// Single-determinant form (last n-1 columns of M on the line); zero when the
/// line meets {x0 = x1 = 0}.
BinaryForm focus_form_shortcut(const Congruence& c, const PluckerVector& line);

class DegenerateFocus : public std::invalid_argument {
 public:
  DegenerateFocus(std::size_t corank)
      : std::invalid_argument("focal point of corank " + std::to_string(corank) + " (degenerate focus)"), corank(corank) {}
  std::size_t corank;
};

/// Plane of the pencil of congruence lines through a focal point of corank 1.
LinearSubspace pencil_plane(const Congruence& c, const QVector& point);

class PlaneInFocalLocus : public std::runtime_error {
 public:
  PlaneInFocalLocus() : std::runtime_error("pencil plane lies in the focal locus") {}
};

/// Degree of the curve cut on the pencil plane by the focal locus.
int residual_plane_curve_degree(const Congruence& c, const QVector& point);

int expected_degree(int n);

class SingularProjectivity : public std::invalid_argument {
 public:
  SingularProjectivity() : std::invalid_argument("projectivity is singular") {}
};

/// A_k -> g^-T A_k g^-1, so lines move by x -> g x.
Congruence apply_projectivity(const Congruence& c, const QMatrix& g);
/// Ideal of the image g(V) of V(I): generators f(g^-1 x).
Ideal transform_ideal(const Ideal& I, const QMatrix& g);

}  // namespace plab
