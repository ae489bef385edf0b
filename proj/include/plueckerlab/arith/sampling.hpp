#pragma once

#include <cstdint>
#include <random>

#include "plueckerlab/arith/matrix.hpp"

namespace plab {

/// Integer in [-bound, bound] from the raw engine output. The standard
/// distributions are implementation-defined; this keeps seeded reports
/// identical across standard libraries.
inline int draw(std::mt19937_64& rng, int bound) {
  const std::uint64_t span = 2 * static_cast<std::uint64_t>(bound) + 1;
  return static_cast<int>(rng() % span) - bound;
}

inline QVector draw_vector(std::mt19937_64& rng, std::size_t size, int bound) {
  QVector v(size);
  for (auto& x : v) x = draw(rng, bound);
  return v;
}

}  // namespace plab
