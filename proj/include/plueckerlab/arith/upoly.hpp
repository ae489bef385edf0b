#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plueckerlab/arith/poly.hpp"
#include "plueckerlab/arith/rational.hpp"

namespace plab {

/// Dense univariate polynomial over Q, coefficients from degree 0 upward,
/// never with trailing zeros.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c) { return UPoly({c}); }
  static UPoly x() { return UPoly({0, 1}); }
  /// Reads a polynomial that uses at most the variable `var`.
  static UPoly from_multi(const MultiPoly& p, std::size_t var);
  static UPoly from_multi(const MultiPoly& p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const Rational& leading() const { return c_.back(); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Rational& c);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; divisor must be nonzero.
  std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
  UPoly derivative() const;
  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn(evaluate(x)); }
  UPoly monic() const;
  /// Integer coprime coefficients, positive leading coefficient.
  UPoly primitive() const;
  MultiPoly to_multi(const VarSet& vars, std::size_t var) const;
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd; gcd(0,0) = 0.
UPoly gcd(UPoly a, UPoly b);

/// Yun's algorithm: p = lc * prod f_k^k, returned as (f_k, k) with deg f_k > 0.
std::vector<std::pair<UPoly, int>> square_free_decomposition(const UPoly& p);

std::vector<UPoly> sturm_sequence(const UPoly& squarefree);
/// Number of distinct real roots of the square-free p in (lo, hi].
int sturm_count(const std::vector<UPoly>& seq, const Rational& lo, const Rational& hi);
/// Cauchy bound: every real root has |x| < bound.
Rational root_bound(const UPoly& p);

struct IsolatingInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;
  /// Set when the root was hit exactly during bisection.
  std::optional<Rational> exact;
  /// Square-free factor that has exactly one root in (lo, hi).
  UPoly factor;

  bool contains(const Rational& x) const { return lo < x && x < hi; }
};

class ZeroPolynomialError : public std::domain_error {
 public:
  ZeroPolynomialError() : std::domain_error("zero polynomial has no isolated roots") {}
};

/// Disjoint sorted isolating intervals for all real roots. Throws ZeroPolynomialError.
std::vector<IsolatingInterval> isolate_real_roots(const UPoly& p);
/// Convenience for univariate MultiPoly input.
std::vector<IsolatingInterval> isolate_real_roots(const MultiPoly& p);
/// Shrinks an interval to width <= width (keeps the certification).
void refine(IsolatingInterval& iv, const Rational& width);
/// All rational roots (distinct).
std::vector<Rational> rational_roots(const UPoly& p);
/// The isolated root when it is rational.
std::optional<Rational> rational_value(const IsolatingInterval& iv);
/// True iff q vanishes at the unique root of iv.factor inside iv.
bool vanishes_at_root(const UPoly& q, const IsolatingInterval& iv);
/// Sign of q at the root isolated by iv (refines a copy as needed).
int sign_at_root(const UPoly& q, const IsolatingInterval& iv);

/// Homogeneous form sum c_i l^i m^(d-i) in the parameters (l:m).
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(int degree, std::vector<Rational> coeffs);
  /// Reads a form in two variables of `p` (given by index: first = l, second = m).
  static BinaryForm from_multi(const MultiPoly& p, std::size_t l_var, std::size_t m_var);

  int degree() const { return degree_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  /// f(t) with t = l/m.
  UPoly dehomogenize() const;
  /// Multiplicity of the point (1:0), i.e. of the root m = 0.
  int multiplicity_at_infinity() const;
  BinaryForm primitive() const;
  MultiPoly to_multi(const VarSet& vars, std::size_t l_var, std::size_t m_var) const;
  std::string to_string() const;
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) {
    return a.degree_ == b.degree_ && a.c_ == b.c_;
  }

 private:
  int degree_ = 0;
  std::vector<Rational> c_;
};

/// Content-normalized gcd of forms; zero forms are ignored. Throws if all are zero.
BinaryForm binary_form_gcd(const std::vector<BinaryForm>& forms);

/// Roots (l:m) of a nonzero binary form: finite ones as intervals in t = l/m,
/// plus the multiplicity of (1:0).
struct BinaryRoots {
  std::vector<IsolatingInterval> finite;
  int at_infinity = 0;
  /// Number of roots over C with multiplicity that are not real.
  int nonreal = 0;
};
BinaryRoots binary_form_roots(const BinaryForm& f);

}  // namespace plab
