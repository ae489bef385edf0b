#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plueckerlab/congruence/congruence.hpp"
#include "plueckerlab/groebner/hilbert.hpp"

namespace plab {

/// Pfaff(aA + bB + cC + dD) over the dual coordinates (a,b,c,d).
struct PfaffianCubic {
  MultiPoly form;
  SkewWeb web;

  bool is_zero() const { return form.is_zero(); }
};

PfaffianCubic pfaffian_cubic(const SkewWeb& web);

struct SingularPointRecord {
  QVector point;      // in (a:b:c:d)
  std::size_t rank;   // of aA+bB+cC+dD at the point
  bool on_g35;        // rank 2
};

struct SingularLocus {
  /// Projective dimension of Sing S (-1 when S is smooth).
  int dimension = -1;
  /// Rational isolated points; empty when dimension != 0.
  std::vector<SingularPointRecord> points;
  /// Length of the Jacobian scheme and its number of distinct points.
  Integer length = 0;
  int distinct = 0;
  int unlocated = 0;  // distinct points with irrational coordinates
  /// Set when S is a cone: its vertex (all partials of S in that direction vanish).
  std::optional<QVector> cone_vertex;
  HilbertData jacobian;
};

SingularLocus singular_locus(const PfaffianCubic& s, std::uint64_t seed = 0x51);

struct CubicSplit {
  MultiPoly linear;
  MultiPoly quadric;
  std::size_t quadric_rank;
};

/// Linear factor search on pseudo-random rational lines; exact division certifies it.
std::optional<CubicSplit> split_cubic(const PfaffianCubic& s, std::uint64_t seed = 0x5b);

struct Component {
  std::string name;
  std::string description;
  Ideal ideal;
  HilbertData hilbert;
  /// Degree of the top-dimensional part (threefolds in P^5).
  Integer degree = 0;
  /// Set when sampled: true iff none of the sampled congruence lines meets it.
  std::optional<bool> parasitic;
  std::vector<std::string> notes;
};

struct CubicData {
  std::string kind;  // smooth | isolated singularities | double line | reducible | cone | degenerate
  MultiPoly form;
  SingularLocus sing;
  std::optional<CubicSplit> split;
};

struct ClassificationReport {
  std::size_t n = 5;
  std::string label;
  std::string table_row;
  std::string subcase;
  std::optional<CubicData> cubic;
  std::optional<HilbertData> focal;
  std::vector<Component> components;
  std::vector<std::string> notes;
};

/// Peels the 3-spaces of the rank-2 singular points off the focal ideal.
std::vector<Component> decompose_focal(const Congruence& c, const std::vector<SingularPointRecord>& points);

/// Residual of the focal ideal after saturating by the 3x3 minors of the
/// sub-web over the plane `linear` = 0 of the dual P^3; returns {Z1, residual}.
std::vector<Component> decompose_reducible(const Congruence& c, const MultiPoly& linear);

/// True iff none of `samples` lines through pseudo-random points meets V(I).
bool misses_sampled_lines(const Congruence& c, const Ideal& I, int samples, std::uint64_t seed);

ClassificationReport classify(const SkewWeb& web);

/// n = 3 or 4; throws std::invalid_argument otherwise.
ClassificationReport classify_low(const SkewWeb& web);

}  // namespace plab
