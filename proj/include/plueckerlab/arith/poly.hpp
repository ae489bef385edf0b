#pragma once

#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "plueckerlab/arith/monomial.hpp"
#include "plueckerlab/arith/rational.hpp"

namespace plab {

/// Ordered list of variable names. Cheap to copy; two sets are equal when
/// their names agree position by position.
class VarSet {
 public:
  VarSet() = default;
  explicit VarSet(std::vector<std::string> names);
  VarSet(std::initializer_list<std::string> names)
      : VarSet(std::vector<std::string>(names)) {}

  /// x0..xn (n+1 names).
  static VarSet projective(int n, const std::string& stem = "x");
  /// stem1..stemk.
  static VarSet numbered(int k, const std::string& stem, int first = 1);

  std::size_t size() const { return names_ ? names_->size() : 0; }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const;
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require(std::string_view name) const;

  /// Concatenation; names must not collide.
  VarSet operator+(const VarSet& other) const;

  friend bool operator==(const VarSet& a, const VarSet& b) {
    if (a.names_ == b.names_) return true;
    return a.names() == b.names();
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

class VarSetMismatch : public std::invalid_argument {
 public:
  VarSetMismatch() : std::invalid_argument("polynomials live over different variable sets") {}
};

/// Sparse polynomial over Q. Terms are kept sorted in descending grevlex order
/// with no zero coefficients.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(VarSet vars) : vars_(std::move(vars)) {}
  MultiPoly(VarSet vars, const Rational& constant);
  /// Takes arbitrary terms; sorts and combines them.
  MultiPoly(VarSet vars, std::vector<Term> terms);

  static MultiPoly variable(const VarSet& vars, std::size_t index);
  static MultiPoly variable(const VarSet& vars, std::string_view name);
  static MultiPoly monomial(const VarSet& vars, const Monomial& m, const Rational& c = 1);

  const VarSet& vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  const Monomial& leading_monomial() const { return terms_.front().first; }
  const Rational& leading_coefficient() const { return terms_.front().second; }
  Rational coefficient(const Monomial& m) const;
  /// Highest power of variable i appearing.
  unsigned degree_in(std::size_t i) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly mul_term(const Monomial& m, const Rational& c) const;
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  Rational evaluate(std::span<const Rational> point) const;
  /// Replaces variable i by images[i]; all images share one target variable set.
  MultiPoly substitute(std::span<const MultiPoly> images) const;
  /// Re-expresses over another variable set by name; variables that do not
  /// occur in any term may be missing from the target.
  MultiPoly rename_into(const VarSet& target) const;
  MultiPoly derivative(std::size_t var) const;

  /// Integer coprime coefficients with positive leading coefficient.
  MultiPoly primitive() const;
  /// lcm of denominators over gcd of numerators, i.e. the factor primitive() multiplies by (up to sign).
  Rational content() const;

  std::string to_string() const;

 private:
  void check_same(const MultiPoly& other) const {
    if (!(vars_ == other.vars_)) throw VarSetMismatch();
  }
  VarSet vars_;
  std::vector<Term> terms_;
};

/// a = b * q exactly, or nullopt. Throws std::domain_error when b is zero.
std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b);

enum class PolyOp { add, sub, mul };
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op);

MultiPoly partial_derivative(const MultiPoly& p, std::string_view var);

}  // namespace plab
