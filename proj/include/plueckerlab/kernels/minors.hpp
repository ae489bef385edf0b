#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "plueckerlab/arith/matrix.hpp"
#include "plueckerlab/arith/poly.hpp"
#include "plueckerlab/grassmann/skew.hpp"

namespace plab {

/// Determinant by Laplace expansion along rows, memoized on the remaining
/// column set. Works for any ring with +, -, * (MultiPoly, Rational).
template <typename T>
T determinant(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return detail::empty_pfaffian<T>();
  if (n > 31) throw std::invalid_argument("determinant size limit exceeded");
  const T zero = detail::zero_like(m(0, 0));
  std::unordered_map<std::uint32_t, T> memo;
  auto rec = [&](auto&& self, std::uint32_t mask) -> T {
    const std::size_t row = n - static_cast<std::size_t>(__builtin_popcount(mask));
    if (row == n - 1) return m(row, static_cast<std::size_t>(__builtin_ctz(mask)));
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    T sum = zero;
    int pos = 0;
    for (std::uint32_t r = mask; r; r &= r - 1) {
      const std::size_t j = static_cast<std::size_t>(__builtin_ctz(r));
      if (!(m(row, j) == zero)) {
        T term = m(row, j) * self(self, mask & ~(1u << j));
        if (pos % 2 == 0) sum = sum + term;
        else sum = sum - term;
      }
      ++pos;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  return rec(rec, (1u << n) - 1);
}

/// Column subsets of size r of {0..c-1}, lexicographic.
std::vector<std::vector<std::size_t>> column_subsets(std::size_t c, std::size_t r);

/// Kernel: all maximal (rows x rows) minors of a rows <= cols polynomial
/// matrix, ordered by column subset. OpenMP over subsets.
std::vector<MultiPoly> maximal_minors(const Matrix<MultiPoly>& m);
/// Serial reference for maximal_minors.
std::vector<MultiPoly> maximal_minors_serial(const Matrix<MultiPoly>& m);

}  // namespace plab
