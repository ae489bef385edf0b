#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "plueckerlab/arith/poly.hpp"
#include "plueckerlab/groebner/order.hpp"
#include "plueckerlab/groebner/zpoly.hpp"

namespace plab {

class MissingBasis : public std::logic_error {
 public:
  MissingBasis() : std::logic_error("ideal has no certified Groebner basis") {}
};

class IterationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Counters from one Buchberger run.
struct GbStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_certified = 0;
  double seconds = 0;
};

struct GbOptions {
  /// Re-check every S-pair of the final basis (and every generator) by reduction.
  bool certify = true;
  /// Reduce S-pairs of equal degree as an OpenMP batch. Same output either way.
  bool parallel = true;
};

namespace gb {
struct Basis {
  MonomialOrder order;
  std::vector<ZPoly> polys;        // reduced basis, sorted by leading monomial
  std::vector<MultiPoly> multi;    // same polys as MultiPoly
  GbStats stats;
};
}  // namespace gb

/// Generator list over a variable set, with an optional cached reduced
/// Groebner basis. Immutable; operations return new ideals.
class Ideal {
 public:
  Ideal() = default;
  Ideal(VarSet vars, std::vector<MultiPoly> generators);

  static Ideal unit(const VarSet& vars) { return Ideal(vars, {MultiPoly(vars, Rational(1))}); }
  static Ideal zero(const VarSet& vars) { return Ideal(vars, {}); }
  /// Ideal generated by the given variables.
  static Ideal of_variables(const VarSet& vars, const std::vector<std::string>& names);

  const VarSet& vars() const { return vars_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }
  bool is_homogeneous() const { return homogeneous_; }

  bool has_basis() const { return static_cast<bool>(gb_); }
  const std::vector<MultiPoly>& basis() const;
  const MonomialOrder& basis_order() const;
  const GbStats& stats() const;
  std::vector<Monomial> leading_monomials() const;
  /// Requires a basis.
  bool is_unit() const;

  const gb::Basis& internal_basis() const;

  friend Ideal buchberger(const Ideal& ideal, const MonomialOrder& order, const GbOptions& opts);

 private:
  VarSet vars_;
  std::vector<MultiPoly> gens_;
  bool homogeneous_ = true;
  std::shared_ptr<const gb::Basis> gb_;
};

/// Reduced Groebner basis under `order`; the result carries it as its cache.
Ideal buchberger(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex(),
                 const GbOptions& opts = {});
/// The ideal itself when it already has a grevlex basis, else buchberger().
Ideal with_basis(const Ideal& ideal);

/// Exact normal form (unique remainder w.r.t. the reduced basis). Throws MissingBasis.
MultiPoly normal_form(const MultiPoly& f, const Ideal& ideal);
bool contains(const Ideal& ideal, const MultiPoly& f);
/// Every generator of `sub` lies in `ideal` (which needs a basis).
bool is_subset(const Ideal& sub, const Ideal& ideal);
/// Two-way membership; computes bases as needed.
bool ideals_equal(const Ideal& a, const Ideal& b);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal intersect(const Ideal& a, const Ideal& b);
/// (I : J); asserts I ⊆ (I:J) and (I:J)·J ⊆ I before returning.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);
/// (I : J^inf); at most `cap` quotient rounds, then IterationCapExceeded.
Ideal saturate(const Ideal& I, const Ideal& J, int cap = 20);
/// I ∩ k[remaining variables], expressed over the remaining variables.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& names);
/// Generators substituted x_i -> images[i] (all images over one target set).
Ideal map_ideal(const Ideal& I, const std::vector<MultiPoly>& images);

class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace plab
