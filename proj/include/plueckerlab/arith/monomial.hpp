#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>

namespace plab {

inline constexpr std::size_t kMaxVars = 16;
inline constexpr unsigned kMaxExponent = 255;

/// Exponent vector over at most kMaxVars variables. Unused slots stay zero,
/// so comparisons never need to know the ambient variable count.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};
  std::uint16_t degree = 0;

  static Monomial var(std::size_t index, unsigned power = 1);

  unsigned operator[](std::size_t i) const { return exp[i]; }
  void set(std::size_t i, unsigned e);

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] > other.exp[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp[i] != 0 && other.exp[i] != 0) return false;
    return true;
  }

  Monomial operator*(const Monomial& other) const;
  /// Requires divides(*this, num).
  friend Monomial operator/(const Monomial& num, const Monomial& den);
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;

  bool operator==(const Monomial& other) const { return exp == other.exp; }
  bool operator!=(const Monomial& other) const { return exp != other.exp; }
};

/// Graded reverse lexicographic comparison: >0 when a > b.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.degree != b.degree) return a.degree > b.degree ? 1 : -1;
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto e : m.exp) {
      h ^= e;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace plab
