#pragma once

#include <span>
#include <vector>

#include "plueckerlab/arith/poly.hpp"
#include "plueckerlab/groebner/order.hpp"

namespace plab::gb {

struct ZTerm {
  Monomial m;
  Integer c;
};

/// Integer-coefficient polynomial sorted descending in a fixed order; the
/// working representation of the reduction engine. Kept primitive with a
/// positive leading coefficient between reductions.
struct ZPoly {
  std::vector<ZTerm> terms;
  unsigned sugar = 0;

  bool is_zero() const { return terms.empty(); }
  const Monomial& lm() const { return terms.front().m; }
  const Integer& lc() const { return terms.front().c; }
};

/// Scales away denominators and content; sorts by `order`. Returns the factor
/// f such that result = f * p.
ZPoly to_zpoly(const MultiPoly& p, const MonomialOrder& order, Rational* factor = nullptr);
MultiPoly to_multi(const ZPoly& p, const VarSet& vars);

/// Divides by the content and makes the leading coefficient positive; returns
/// the factor applied.
Rational make_primitive(ZPoly& p);

/// S-polynomial of two primitive polynomials.
ZPoly spoly(const ZPoly& f, const ZPoly& g, const MonomialOrder& order);

/// Fraction-free reduction of f by `reducers`. With full = false only the
/// leading term is reduced (until irreducible); otherwise every term. On
/// return, f_out = scale * f_in - (combination of reducers), scale != 0.
/// Terms before `start` are left untouched (start = 1 reduces only the tail).
void reduce(ZPoly& f, std::span<const ZPoly* const> reducers, const MonomialOrder& order, bool full,
            Rational* scale = nullptr, std::size_t start = 0);

/// Kernel: reduces every poly of `batch` against `reducers`. The OpenMP
/// version writes each slot independently; the serial version is the reference.
std::vector<ZPoly> reduce_batch(std::vector<ZPoly> batch, std::span<const ZPoly* const> reducers,
                                const MonomialOrder& order, bool full);
std::vector<ZPoly> reduce_batch_serial(std::vector<ZPoly> batch, std::span<const ZPoly* const> reducers,
                                       const MonomialOrder& order, bool full);

}  // namespace plab::gb
