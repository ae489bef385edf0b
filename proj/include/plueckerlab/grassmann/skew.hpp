#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <vector>

#include "plueckerlab/arith/matrix.hpp"
#include "plueckerlab/arith/poly.hpp"

namespace plab {

class NotSkew : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Square rational matrix with a_ij = -a_ji and zero diagonal (checked).
class SkewMatrix {
 public:
  SkewMatrix() = default;
  explicit SkewMatrix(QMatrix m);
  static SkewMatrix zero(std::size_t size) { return SkewMatrix(QMatrix(size, size, Rational(0))); }
  /// e_i ^ e_j scaled: only a_ij = c (and a_ji = -c).
  static SkewMatrix elementary(std::size_t size, std::size_t i, std::size_t j, const Rational& c = 1);
  /// u v^T - v u^T.
  static SkewMatrix wedge(const QVector& u, const QVector& v);

  std::size_t size() const { return m_.rows(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const QMatrix& matrix() const { return m_; }
  /// Upper-triangle entries a_ij, i < j, in lexicographic pair order.
  QVector upper() const;

  friend SkewMatrix operator+(const SkewMatrix& a, const SkewMatrix& b);
  friend SkewMatrix operator*(const Rational& c, const SkewMatrix& a);
  friend bool operator==(const SkewMatrix& a, const SkewMatrix& b) { return a.m_ == b.m_; }

 private:
  QMatrix m_;
};

/// Index of the pair (i, j), i < j, among the lexicographically ordered pairs of 0..size-1.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t size);

namespace detail {
template <typename T>
T empty_pfaffian() {
  if constexpr (std::is_same_v<T, MultiPoly>) throw std::invalid_argument("empty polynomial matrix");
  else return T(1);
}
template <typename T>
T zero_like(const T& sample) {
  if constexpr (std::is_same_v<T, MultiPoly>) return MultiPoly(sample.vars());
  else return T(0);
}
template <typename T>
T one_like(const T& sample) {
  if constexpr (std::is_same_v<T, MultiPoly>) return MultiPoly(sample.vars(), Rational(1));
  else return T(1);
}
}  // namespace detail

/// Pfaffian of the principal submatrix on `rows` (even count), by expansion
/// along the first index with memoization on index subsets.
template <typename T>
T pfaffian_of(const Matrix<T>& a, const std::vector<std::size_t>& rows) {
  if (rows.size() % 2 != 0) throw std::invalid_argument("Pfaffian needs an even number of rows");
  if (rows.size() > 32) throw std::invalid_argument("Pfaffian size limit exceeded");
  const T zero = detail::zero_like(a(0, 0));
  const T one = detail::one_like(a(0, 0));
  std::unordered_map<std::uint32_t, T> memo;
  auto rec = [&](auto&& self, std::uint32_t mask) -> T {
    if (mask == 0) return one;
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    int first = __builtin_ctz(mask);
    std::uint32_t rest = mask & ~(1u << first);
    T sum = zero;
    int pos = 0;
    for (std::uint32_t r = rest; r; r &= r - 1) {
      int j = __builtin_ctz(r);
      const T& e = a(rows[first], rows[j]);
      if (!(e == zero)) {
        T term = e * self(self, rest & ~(1u << j));
        if (pos % 2 == 0) sum = sum + term;
        else sum = sum - term;
      }
      ++pos;
    }
    memo.emplace(mask, sum);
    return sum;
  };
  if (rows.empty()) return one;
  return rec(rec, rows.size() == 32 ? 0xffffffffu : ((1u << rows.size()) - 1));
}

template <typename T>
T pfaffian(const Matrix<T>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("Pfaffian of a non-square matrix");
  if (a.rows() % 2 != 0) throw std::invalid_argument("top Pfaffian of an odd-size matrix");
  if (a.rows() == 0) return detail::empty_pfaffian<T>();
  std::vector<std::size_t> rows(a.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  return pfaffian_of(a, rows);
}

/// Oracle: signed sum over all perfect matchings.
template <typename T>
T pfaffian_matching(const Matrix<T>& a) {
  const std::size_t n = a.rows();
  if (n % 2 != 0) throw std::invalid_argument("top Pfaffian of an odd-size matrix");
  if (n == 0) return detail::empty_pfaffian<T>();
  T total = detail::zero_like(a(0, 0));
  std::vector<std::size_t> perm;  // i1 j1 i2 j2 ...
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self) -> void {
    if (perm.size() == n) {
      int inversions = 0;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y)
          if (perm[x] > perm[y]) ++inversions;
      T prod = detail::one_like(a(0, 0));
      for (std::size_t k = 0; k < n; k += 2) prod = prod * a(perm[k], perm[k + 1]);
      if (inversions % 2) total = total - prod;
      else total = total + prod;
      return;
    }
    std::size_t i = 0;
    while (used[i]) ++i;
    used[i] = true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      perm.push_back(i);
      perm.push_back(j);
      self(self);
      perm.pop_back();
      perm.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  rec(rec);
  return total;
}

Rational pfaffian(const SkewMatrix& m);
/// Exact rank (always even).
std::size_t skew_rank(const SkewMatrix& m);

/// Matrix of polynomials sum_k coeffs[k] * mats[k].
Matrix<MultiPoly> linear_combination(const std::vector<SkewMatrix>& mats, const std::vector<MultiPoly>& coeffs);
/// Evaluates a polynomial matrix at a rational point.
QMatrix evaluate(const Matrix<MultiPoly>& m, const QVector& point);

enum class DualStratum { general, on_dual_grassmannian, on_g35, zero };
std::string to_string(DualStratum s);
/// By exact rank: 6 general, 4 on the dual Grassmannian, 2 on G(3,5), 0 zero.
DualStratum in_dual_strata(const SkewMatrix& m);

}  // namespace plab
