#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plueckerlab/arith/matrix.hpp"
#include "plueckerlab/arith/upoly.hpp"
#include "plueckerlab/congruence/congruence.hpp"
#include "plueckerlab/grassmann/plucker.hpp"

namespace plab {

/// u_t + f(u)_x = 0 with f^i = g^i / h, polynomial g^i and h over u1..um.
/// Polynomial fluxes have h = 1.
class FluxSystem {
 public:
  FluxSystem() = default;
  FluxSystem(VarSet vars, std::vector<MultiPoly> numerators, std::optional<MultiPoly> denominator = std::nullopt);
  static FluxSystem parse(const std::vector<std::string>& fluxes, const std::string& denominator = "1");

  std::size_t m() const { return g_.size(); }
  const VarSet& vars() const { return vars_; }
  const std::vector<MultiPoly>& numerators() const { return g_; }
  const MultiPoly& denominator() const { return h_; }
  bool is_polynomial() const { return h_.is_constant(); }
  /// Jf when h = 1; otherwise h^2 Jf.
  const Matrix<MultiPoly>& scaled_jacobian() const { return jt_; }
  /// Jf(u) exactly; throws std::domain_error where h(u) = 0.
  QMatrix jacobian_at(const QVector& u) const;
  QVector flux_at(const QVector& u) const;

 private:
  VarSet vars_;
  std::vector<MultiPoly> g_;
  MultiPoly h_;
  Matrix<MultiPoly> jt_;
};

/// f(P u + q) pulled back: u = P v + q gives v_t + (P^-1 f(P v + q))_x = 0.
FluxSystem reparametrize(const FluxSystem& sys, const QMatrix& p, const QVector& q);

/// The line Lambda(u) spanned by (1 : u : 0) and (0 : -f(u) : 1) in P^(m+1).
struct LineFamily {
  FluxSystem sys;

  std::size_t ambient() const { return sys.m() + 1; }
  std::pair<QVector, QVector> points(const QVector& u) const;
  PluckerVector at(const QVector& u) const;
};

LineFamily line_family(const FluxSystem& sys);

struct EigenData {
  QVector u;
  UPoly charpoly;  // det(t I - Jf(u))
  std::vector<IsolatingInterval> eigenvalues;
  /// Exact eigenvector (first nonzero coordinate 1) when the eigenvalue is rational.
  std::vector<std::optional<QVector>> eigenvectors;
  bool strictly_hyperbolic = false;
};

EigenData eigen_data(const FluxSystem& sys, const QVector& u);

class NotStrictlyHyperbolic : public std::domain_error {
 public:
  explicit NotStrictlyHyperbolic(const QVector& u)
      : std::domain_error("not strictly hyperbolic at " + to_string(u)), u(u) {}
  QVector u;
};

struct FocusEigenReport {
  QVector u;
  /// det of the incidence differential along Lambda(u), in t = y0 / yn, made monic.
  UPoly focus_poly;
  UPoly charpoly;
  std::vector<IsolatingInterval> foci;
  bool matches = false;
};

/// Throws NotStrictlyHyperbolic.
FocusEigenReport focus_eigenvalue_check(const FluxSystem& sys, const QVector& u);

struct SampleVerdict {
  bool holds = true;
  std::optional<QVector> witness;
  std::size_t family = 0;
  std::string detail;
};

/// Lie derivative of lambda_i along v_i at each sample (families ordered by eigenvalue).
SampleVerdict linear_degeneracy_check(const FluxSystem& sys, const std::vector<QVector>& samples, std::size_t i);
/// v_i wedge (D v_i . v_i) = 0 at each sample.
SampleVerdict straight_rarefaction_check(const FluxSystem& sys, const std::vector<QVector>& samples, std::size_t i);

struct TempleReport {
  std::string verdict;  // temple_at_samples | not_temple | not_strictly_hyperbolic
  std::size_t samples = 0;
  std::optional<QVector> witness;
  std::string detail;
  std::vector<SampleVerdict> degeneracy, straightness;
};

TempleReport is_temple(const FluxSystem& sys, const std::vector<QVector>& samples);

/// Deterministic integer samples in [-bound, bound]^m avoiding h = 0.
std::vector<QVector> sample_points(const FluxSystem& sys, std::size_t count, std::uint64_t seed, int bound = 9);

/// Flux of a web in the chart y_n = 0 / y_0 = 0: the line through (1 : u : 0)
/// meets y_0 = 0 at (0 : -f(u) : 1).
FluxSystem flux_of_congruence(const Congruence& c);

}  // namespace plab
