#include "plueckerlab/groebner/ideal.hpp"

#include <algorithm>

namespace plab {

Ideal::Ideal(VarSet vars, std::vector<MultiPoly> generators) : vars_(std::move(vars)), gens_(std::move(generators)) {
  for (const auto& g : gens_) {
    if (!(g.vars() == vars_)) throw VarSetMismatch();
    if (!g.is_homogeneous()) homogeneous_ = false;
  }
}

Ideal Ideal::of_variables(const VarSet& vars, const std::vector<std::string>& names) {
  std::vector<MultiPoly> g;
  for (const auto& n : names) g.push_back(MultiPoly::variable(vars, n));
  return Ideal(vars, std::move(g));
}

const std::vector<MultiPoly>& Ideal::basis() const {
  if (!gb_) throw MissingBasis();
  return gb_->multi;
}

const MonomialOrder& Ideal::basis_order() const {
  if (!gb_) throw MissingBasis();
  return gb_->order;
}

const GbStats& Ideal::stats() const {
  if (!gb_) throw MissingBasis();
  return gb_->stats;
}

const gb::Basis& Ideal::internal_basis() const {
  if (!gb_) throw MissingBasis();
  return *gb_;
}

std::vector<Monomial> Ideal::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& p : internal_basis().polys) out.push_back(p.lm());
  return out;
}

bool Ideal::is_unit() const {
  const auto& b = internal_basis();
  return b.polys.size() == 1 && b.polys[0].lm().degree == 0;
}

Ideal with_basis(const Ideal& ideal) {
  if (ideal.has_basis() && ideal.basis_order() == MonomialOrder::grevlex()) return ideal;
  return buchberger(ideal);
}

MultiPoly normal_form(const MultiPoly& f, const Ideal& ideal) {
  const auto& b = ideal.internal_basis();
  if (!(f.vars() == ideal.vars())) throw VarSetMismatch();
  if (f.is_zero()) return f;
  Rational factor, scale;
  gb::ZPoly z = gb::to_zpoly(f, b.order, &factor);
  std::vector<const gb::ZPoly*> ptrs;
  for (const auto& p : b.polys) ptrs.push_back(&p);
  gb::reduce(z, ptrs, b.order, true, &scale);
  return gb::to_multi(z, ideal.vars()) * (1 / (scale * factor));
}

bool contains(const Ideal& ideal, const MultiPoly& f) { return normal_form(f, ideal).is_zero(); }

bool is_subset(const Ideal& sub, const Ideal& ideal) {
  for (const auto& g : sub.generators())
    if (!contains(ideal, g)) return false;
  return true;
}

bool ideals_equal(const Ideal& a, const Ideal& b) {
  Ideal ga = with_basis(a), gbb = with_basis(b);
  return is_subset(a, gbb) && is_subset(b, ga);
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!(a.vars() == b.vars())) throw VarSetMismatch();
  auto g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.vars(), std::move(g));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  if (!(a.vars() == b.vars())) throw VarSetMismatch();
  std::vector<MultiPoly> g;
  for (const auto& f : a.generators())
    for (const auto& h : b.generators())
      if (!f.is_zero() && !h.is_zero()) g.push_back(f * h);
  return Ideal(a.vars(), std::move(g));
}

namespace {

std::string fresh_name(const VarSet& vars, const std::string& stem) {
  std::string n = stem;
  while (vars.index_of(n)) n += "_";
  return n;
}

std::vector<MultiPoly> renamed(const std::vector<MultiPoly>& gens, const VarSet& target) {
  std::vector<MultiPoly> out;
  for (const auto& g : gens)
    if (!g.is_zero()) out.push_back(g.rename_into(target));
  return out;
}

bool is_linear_form(const MultiPoly& g) { return !g.is_zero() && g.is_homogeneous() && g.total_degree() == 1; }

// Linear change of coordinates taking a linear form g to a variable y.
// Returns the forward images (old vars in new coords) and the index of y.
struct LinearChange {
  VarSet target;
  std::vector<MultiPoly> forward;   // old x_i as polys over target
  std::vector<MultiPoly> backward;  // target vars as polys over old
  std::size_t y;
};

LinearChange linear_change(const MultiPoly& g) {
  const VarSet& v = g.vars();
  // Pivot on the last variable with a nonzero coefficient so y sits last in grevlex.
  std::size_t k = v.size();
  for (std::size_t i = v.size(); i-- > 0;)
    if (sgn(g.coefficient(Monomial::var(i))) != 0) {
      k = i;
      break;
    }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (i != k) names.push_back(v.name(i));
  std::string yname = fresh_name(v, "y_");
  names.push_back(yname);
  LinearChange lc{VarSet(names), {}, {}, v.size() - 1};
  const Rational ck = g.coefficient(Monomial::var(k));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != k) {
      lc.forward.push_back(MultiPoly::variable(lc.target, v.name(i)));
      continue;
    }
    MultiPoly e = MultiPoly::variable(lc.target, yname);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (j != k) e -= MultiPoly::variable(lc.target, v.name(j)) * g.coefficient(Monomial::var(j));
    lc.forward.push_back(e * (1 / ck));
  }
  for (std::size_t i = 0; i < lc.target.size(); ++i)
    lc.backward.push_back(i == lc.y ? g : MultiPoly::variable(v, lc.target.name(i)));
  return lc;
}

// For a homogeneous ideal and the grevlex-last variable y, (I : y^e) (e = 0
// meaning infinity) is read off a single basis by dividing out powers of y.
Ideal divide_last(const Ideal& I, unsigned e) {
  Ideal g = with_basis(I);
  const std::size_t y = I.vars().size() - 1;
  std::vector<MultiPoly> out;
  for (const auto& p : g.basis()) {
    unsigned m = p.degree_in(y);
    for (const auto& [mono, c] : p.terms()) m = std::min<unsigned>(m, mono.exp[y]);
    if (e != 0) m = std::min(m, e);
    std::vector<MultiPoly::Term> terms;
    for (const auto& [mono, c] : p.terms()) {
      Monomial r = mono;
      r.set(y, mono.exp[y] - m);
      terms.emplace_back(r, c);
    }
    out.emplace_back(I.vars(), std::move(terms));
  }
  return Ideal(I.vars(), std::move(out));
}

Ideal quotient_linear(const Ideal& I, const MultiPoly& g, unsigned e) {
  LinearChange lc = linear_change(g);
  std::vector<MultiPoly> gens;
  for (const auto& f : I.generators())
    if (!f.is_zero()) gens.push_back(f.substitute(lc.forward));
  Ideal q = divide_last(Ideal(lc.target, std::move(gens)), e);
  std::vector<MultiPoly> back;
  for (const auto& f : q.generators()) back.push_back(f.substitute(lc.backward));
  return Ideal(I.vars(), std::move(back));
}

Ideal quotient_general(const Ideal& I, const MultiPoly& g) {
  Ideal k = intersect(I, Ideal(I.vars(), {g}));
  std::vector<MultiPoly> out;
  for (const auto& f : k.generators()) {
    auto q = exact_divide(f, g);
    if (!q) throw ContractViolation("intersection element not divisible by the quotient generator");
    out.push_back(*q);
  }
  return Ideal(I.vars(), std::move(out));
}

Ideal quotient_by(const Ideal& I, const MultiPoly& g) {
  if (I.is_homogeneous() && is_linear_form(g)) return quotient_linear(I, g, 1);
  return quotient_general(I, g);
}

}  // namespace

Ideal eliminate(const Ideal& I, const std::vector<std::string>& names) {
  if (names.empty()) return I;
  const VarSet& v = I.vars();
  std::vector<std::string> order = names, rest;
  for (const auto& n : names) v.require(n);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (std::find(names.begin(), names.end(), v.name(i)) == names.end()) rest.push_back(v.name(i));
  order.insert(order.end(), rest.begin(), rest.end());
  VarSet big(order), small(rest);
  Ideal g = buchberger(Ideal(big, renamed(I.generators(), big)), MonomialOrder::block(names.size()));
  std::vector<MultiPoly> out;
  for (const auto& p : g.basis()) {
    bool free = true;
    for (std::size_t i = 0; i < names.size() && free; ++i) free = p.degree_in(i) == 0;
    if (free) out.push_back(p.rename_into(small));
  }
  return Ideal(small, std::move(out));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (!(a.vars() == b.vars())) throw VarSetMismatch();
  const VarSet& v = a.vars();
  std::string t = fresh_name(v, "t_");
  VarSet big = VarSet({t}) + v;
  MultiPoly tp = MultiPoly::variable(big, t);
  MultiPoly one(big, Rational(1));
  std::vector<MultiPoly> gens;
  for (const auto& f : renamed(a.generators(), big)) gens.push_back(tp * f);
  for (const auto& f : renamed(b.generators(), big)) gens.push_back((one - tp) * f);
  Ideal e = eliminate(Ideal(big, std::move(gens)), {t});
  return Ideal(v, renamed(e.generators(), v));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  if (!(I.vars() == J.vars())) throw VarSetMismatch();
  std::optional<Ideal> acc;
  for (const auto& g : J.generators()) {
    if (g.is_zero()) continue;
    Ideal q = quotient_by(I, g);
    acc = acc ? intersect(*acc, q) : q;
  }
  if (!acc) return Ideal::unit(I.vars());
  Ideal out = with_basis(*acc);
  Ideal gi = with_basis(I);
  if (!is_subset(I, out)) throw ContractViolation("quotient does not contain the ideal");
  if (!is_subset(ideal_product(out, J), gi)) throw ContractViolation("quotient times divisor not in the ideal");
  return out;
}

Ideal saturate(const Ideal& I, const Ideal& J, int cap) {
  if (!(I.vars() == J.vars())) throw VarSetMismatch();
  bool linear = I.is_homogeneous();
  for (const auto& g : J.generators()) linear = linear && (g.is_zero() || is_linear_form(g));
  if (linear) {
    // I : J^inf is the intersection of the I : g^inf.
    std::optional<Ideal> acc;
    for (const auto& g : J.generators()) {
      if (g.is_zero()) continue;
      Ideal q = quotient_linear(I, g, 0);
      acc = acc ? intersect(*acc, q) : q;
    }
    return acc ? with_basis(*acc) : Ideal::unit(I.vars());
  }
  Ideal cur = with_basis(I);
  for (int round = 0; round < cap; ++round) {
    Ideal next = ideal_quotient(cur, J);
    if (is_subset(next, cur)) return cur;
    cur = next;
  }
  throw IterationCapExceeded("saturation did not stabilise within " + std::to_string(cap) + " rounds");
}

Ideal map_ideal(const Ideal& I, const std::vector<MultiPoly>& images) {
  if (images.size() != I.vars().size()) throw std::invalid_argument("map needs one image per variable");
  if (images.empty()) return I;
  std::vector<MultiPoly> out;
  for (const auto& f : I.generators()) out.push_back(f.substitute(images));
  return Ideal(images[0].vars(), std::move(out));
}

}  // namespace plab
