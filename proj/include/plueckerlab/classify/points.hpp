#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "plueckerlab/arith/matrix.hpp"
#include "plueckerlab/groebner/ideal.hpp"

namespace plab {

class PositiveDimensional : public std::runtime_error {
 public:
  PositiveDimensional() : std::runtime_error("zero set is not finite") {}
};

/// Rational points of the finite projective zero set of a homogeneous ideal,
/// by projecting from coordinate points and solving binary forms on fibres.
/// Irrational points are not returned. Throws PositiveDimensional.
std::vector<QVector> rational_points(const Ideal& I);

/// Number of distinct points (over C) of a finite zero set, via a projection
/// to P^1 after a pseudo-random coordinate change drawn from `seed`.
int count_distinct_points(const Ideal& I, std::uint64_t seed);

/// Linear form sum c_i x_i over `vars`.
MultiPoly linear_form(const VarSet& vars, const QVector& coeffs);

}  // namespace plab
