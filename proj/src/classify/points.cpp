#include "plueckerlab/classify/points.hpp"

#include <algorithm>
#include <random>

#include "plueckerlab/arith/sampling.hpp"
#include "plueckerlab/arith/upoly.hpp"

namespace plab {

MultiPoly linear_form(const VarSet& vars, const QVector& coeffs) {
  MultiPoly f(vars);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) f += MultiPoly::variable(vars, i) * coeffs[i];
  return f;
}

namespace {

std::vector<QVector> roots_of_forms(const std::vector<MultiPoly>& gens) {
  std::vector<BinaryForm> forms;
  for (const auto& g : gens)
    if (!g.is_zero()) forms.push_back(BinaryForm::from_multi(g, 0, 1));
  if (forms.empty()) throw PositiveDimensional();
  BinaryForm g = binary_form_gcd(forms);
  std::vector<QVector> out;
  if (g.degree() == 0) return out;
  UPoly d = g.dehomogenize();
  if (d.degree() > 0)
    for (const auto& r : rational_roots(d)) out.push_back({r, Rational(1)});
  if (g.multiplicity_at_infinity() > 0) out.push_back({Rational(1), Rational(0)});
  return out;
}

bool vanishes(const std::vector<MultiPoly>& gens, const QVector& p) {
  for (const auto& g : gens)
    if (g.evaluate(p) != 0) return false;
  return true;
}

}  // namespace

std::vector<QVector> rational_points(const Ideal& I) {
  const VarSet& v = I.vars();
  const std::size_t k = v.size();
  std::vector<MultiPoly> gens;
  for (const auto& g : I.generators())
    if (!g.is_zero()) gens.push_back(g);
  if (k == 0) throw std::invalid_argument("no variables");
  if (k == 1) {
    if (gens.empty()) return {{Rational(1)}};
    return {};
  }
  if (k == 2) return roots_of_forms(gens);

  std::vector<QVector> out;
  QVector e0(k, Rational(0));
  e0[0] = 1;
  if (vanishes(gens, e0)) out.push_back(e0);
  Ideal proj = eliminate(I, {v.name(0)});
  bool all_zero = true;
  for (const auto& g : proj.generators()) all_zero = all_zero && g.is_zero();
  if (all_zero) throw PositiveDimensional();
  VarSet sm{"s_", "m_"};
  for (const auto& q : rational_points(proj)) {
    // fibre: x = s*e0 + m*(0, q)
    std::vector<MultiPoly> images;
    images.push_back(MultiPoly::variable(sm, 0));
    for (std::size_t i = 0; i + 1 < k; ++i) images.push_back(MultiPoly::variable(sm, 1) * q[i]);
    std::vector<MultiPoly> fib;
    for (const auto& g : gens) fib.push_back(g.substitute(images));
    for (const auto& r : roots_of_forms(fib)) {
      if (r[1] == 0) continue;
      QVector p(k);
      p[0] = r[0];
      for (std::size_t i = 0; i + 1 < k; ++i) p[i + 1] = r[1] * q[i];
      out.push_back(normalize_projective(p));
    }
  }
  std::vector<QVector> uniq;
  for (auto& p : out) {
    p = normalize_projective(p);
    if (std::find(uniq.begin(), uniq.end(), p) == uniq.end()) uniq.push_back(p);
  }
  std::sort(uniq.begin(), uniq.end(), [](const QVector& a, const QVector& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const Rational& x, const Rational& y) { return x > y; });
  });
  return uniq;
}

int count_distinct_points(const Ideal& I, std::uint64_t seed) {
  const VarSet& v = I.vars();
  const std::size_t k = v.size();
  std::mt19937_64 rng(seed);
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < k; ++i) {
    QVector c(k);
    for (auto& x : c) x = draw(rng, 7);
    c[i] += 20;  // keep the change invertible
    images.push_back(linear_form(v, c));
  }
  Ideal J = map_ideal(I, images);
  std::vector<std::string> drop;
  for (std::size_t i = 0; i + 2 < k; ++i) drop.push_back(v.name(i));
  Ideal line = k > 2 ? eliminate(J, drop) : J;
  std::vector<BinaryForm> forms;
  for (const auto& g : line.generators())
    if (!g.is_zero()) forms.push_back(BinaryForm::from_multi(g, 0, 1));
  if (forms.empty()) throw PositiveDimensional();
  BinaryForm g = binary_form_gcd(forms);
  int count = g.multiplicity_at_infinity() > 0 ? 1 : 0;
  UPoly d = g.dehomogenize();
  if (d.degree() > 0)
    for (const auto& [f, mult] : square_free_decomposition(d)) count += f.degree();
  return count;
}

}  // namespace plab
