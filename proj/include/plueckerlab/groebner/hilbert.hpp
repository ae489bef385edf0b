#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plueckerlab/groebner/ideal.hpp"

namespace plab {

/// Hilbert data of R/I for a homogeneous ideal I in k variables.
struct HilbertData {
  std::size_t nvars = 0;
  /// K(t) with HS(t) = K(t) / (1-t)^nvars.
  std::vector<Integer> first_numerator;
  /// Q(t) with HS(t) = Q(t) / (1-t)^d and Q(1) != 0 (unless I is the unit ideal).
  std::vector<Integer> numerator;
  /// Krull dimension d of R/I; the projective dimension is d - 1.
  int krull_dimension = 0;
  /// HP(t) coefficients, low to high.
  std::vector<Rational> polynomial;
  Integer degree = 0;
  /// HF(t) = HP(t) for every t >= this (exact, from Q).
  int index_of_regularity = 0;
  /// Conservative crossover: max degree of a leading-term generator + number of variables.
  int regularity_bound = 0;

  int projective_dimension() const { return krull_dimension - 1; }
  /// "7/6 t^3 + 2 t^2 + 11/6 t + 1"
  std::string polynomial_string() const;
  Rational evaluate(const Rational& t) const;
};

/// Numerator K(t) of the Hilbert series of k[x]/M, M generated by `gens`,
/// by pivoting on variables: K(M) = K(M + <x>) + t K(M : x).
std::vector<Integer> hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars);

HilbertData hilbert_from_monomials(const std::vector<Monomial>& lead, std::size_t nvars);
/// Throws std::invalid_argument on a non-homogeneous ideal; computes a basis if missing.
HilbertData hilbert_polynomial(const Ideal& I);
/// Coefficient of t^s in the Hilbert series.
Integer hilbert_function(const HilbertData& h, int s);
/// Arithmetic genus of a general curve section, 1 - (dim-1)-th difference of HP at 0.
/// Only meaningful for a saturated ideal; nullopt below dimension 1.
std::optional<Rational> sectional_genus(const HilbertData& h);

/// Oracle: monomials of degree s in nvars variables divisible by no element of `lead`.
Integer count_standard_monomials(const std::vector<Monomial>& lead, std::size_t nvars, int s);

/// Rational coefficients, low to high, as "a t^k + ..." in the variable `var`.
std::string format_polynomial(const std::vector<Rational>& coeffs, const std::string& var = "t");

}  // namespace plab
