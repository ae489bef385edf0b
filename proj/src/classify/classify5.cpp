#include "plueckerlab/classify/classify5.hpp"

#include <algorithm>
#include <random>

#include "plueckerlab/arith/sampling.hpp"
#include "plueckerlab/classify/points.hpp"
#include "plueckerlab/kernels/minors.hpp"

namespace plab {

namespace {

const VarSet& dual_vars() {
  static const VarSet v{"a", "b", "c", "d"};
  return v;
}

QMatrix combination(const SkewWeb& web, const QVector& coeffs) {
  const std::size_t s = web.n + 1;
  QMatrix m(s, s, Rational(0));
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) m = m + coeffs[k] * web.mats[k].matrix();
  return m;
}


// Sample points are given as coefficient vectors; restrict gens to the line l*p + m*q.
std::vector<MultiPoly> restrict_to_line(const std::vector<MultiPoly>& gens, const QVector& p, const QVector& q) {
  VarSet lm{"l", "m"};
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < p.size(); ++i)
    images.push_back(MultiPoly::variable(lm, 0) * p[i] + MultiPoly::variable(lm, 1) * q[i]);
  std::vector<MultiPoly> out;
  for (const auto& g : gens) out.push_back(g.substitute(images));
  return out;
}

std::vector<QVector> binary_rational_roots(const BinaryForm& f) {
  std::vector<QVector> out;
  UPoly d = f.dehomogenize();
  if (d.degree() > 0)
    for (const auto& r : rational_roots(d)) out.push_back({r, Rational(1)});
  if (f.multiplicity_at_infinity() > 0) out.push_back({Rational(1), Rational(0)});
  return out;
}

Component make_component(std::string name, std::string description, Ideal ideal) {
  Component c{std::move(name), std::move(description), with_basis(ideal), {}, 0, std::nullopt, {}};
  c.hilbert = hilbert_polynomial(c.ideal);
  c.degree = c.hilbert.degree;
  return c;
}

Ideal linear_ideal(const VarSet& vars, const std::vector<QVector>& forms) {
  std::vector<MultiPoly> g;
  for (const auto& f : forms) g.push_back(linear_form(vars, f));
  return Ideal(vars, std::move(g));
}

const char* kResidualNames[] = {"Y", "Z", "V", "W"};
const char* kResidualDescriptions[] = {"singular Bordiga scroll", "Castelnuovo threefold", "Del Pezzo threefold",
                                       "rational normal cubic scroll"};

}  // namespace

PfaffianCubic pfaffian_cubic(const SkewWeb& web) {
  if (web.n != 5 || web.mats.size() != 4) throw std::invalid_argument("Pfaffian cubic needs four 6x6 matrices");
  const VarSet& v = dual_vars();
  std::vector<MultiPoly> coeffs;
  for (std::size_t i = 0; i < 4; ++i) coeffs.push_back(MultiPoly::variable(v, i));
  return {pfaffian(linear_combination(web.mats, coeffs)), web};
}

SingularLocus singular_locus(const PfaffianCubic& s, std::uint64_t seed) {
  if (s.is_zero()) throw std::invalid_argument("singular locus of the zero form");
  const VarSet& v = s.form.vars();
  std::vector<MultiPoly> partials;
  for (std::size_t i = 0; i < v.size(); ++i) partials.push_back(s.form.derivative(i));
  Ideal jac = with_basis(Ideal(v, partials));
  SingularLocus out;
  out.jacobian = hilbert_polynomial(jac);
  out.dimension = out.jacobian.projective_dimension();
  if (out.dimension != 0) return out;
  out.length = out.jacobian.degree;
  for (auto& p : rational_points(jac)) {
    std::size_t r = rank(combination(s.web, p));
    out.points.push_back({p, r, r == 2});
    MultiPoly dir(v);
    for (std::size_t i = 0; i < v.size(); ++i) dir += partials[i] * p[i];
    if (dir.is_zero()) out.cone_vertex = p;
  }
  out.distinct = count_distinct_points(jac, seed);
  out.unlocated = out.distinct - static_cast<int>(out.points.size());
  return out;
}

std::optional<CubicSplit> split_cubic(const PfaffianCubic& s, std::uint64_t seed) {
  if (s.is_zero()) throw std::invalid_argument("split of the zero form");
  const VarSet& v = s.form.vars();
  std::mt19937_64 rng(seed);
  // Rational points of S on random lines, grouped per line.
  std::vector<std::vector<QVector>> found;
  for (int attempt = 0; attempt < 8; ++attempt) {
    QVector p = draw_vector(rng, v.size(), 9), q = draw_vector(rng, v.size(), 9);
    MultiPoly r = restrict_to_line({s.form}, p, q)[0];
    if (r.is_zero()) continue;
    std::vector<QVector> pts;
    for (const auto& root : binary_rational_roots(BinaryForm::from_multi(r, 0, 1))) {
      QVector x(v.size());
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = root[0] * p[i] + root[1] * q[i];
      pts.push_back(x);
    }
    if (!pts.empty()) found.push_back(std::move(pts));
  }
  for (std::size_t i = 0; i < found.size(); ++i)
    for (std::size_t j = i + 1; j < found.size(); ++j)
      for (std::size_t k = j + 1; k < found.size(); ++k)
        for (const auto& x : found[i])
          for (const auto& y : found[j])
            for (const auto& z : found[k]) {
              QMatrix m = from_rows({x, y, z}, v.size());
              auto ker = kernel(m);
              if (ker.size() != 1) continue;
              MultiPoly l = linear_form(v, ker[0]).primitive();
              auto quad = exact_divide(s.form, l);
              if (!quad) continue;
              QMatrix hess(v.size(), v.size(), Rational(0));
              for (std::size_t a = 0; a < v.size(); ++a)
                for (std::size_t b = 0; b < v.size(); ++b) {
                  MultiPoly h = quad->derivative(a).derivative(b);
                  hess(a, b) = h.is_zero() ? Rational(0) : h.coefficient(Monomial());
                }
              return CubicSplit{l, *quad, rank(hess)};
            }
  return std::nullopt;
}

bool misses_sampled_lines(const Congruence& c, const Ideal& I, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<MultiPoly> gens;
  for (const auto& g : I.generators())
    if (!g.is_zero()) gens.push_back(g);
  int done = 0;
  for (int attempt = 0; done < samples && attempt < 20 * samples; ++attempt) {
    QVector x = draw_vector(rng, c.n() + 1, 9);
    if (is_zero_vector(x) || incidence_corank(c, x) != 1) continue;
    auto [p, q] = line_through_point(c, x).points();
    std::vector<BinaryForm> forms;
    for (const auto& r : restrict_to_line(gens, p, q))
      if (!r.is_zero()) forms.push_back(BinaryForm::from_multi(r, 0, 1));
    ++done;
    if (forms.empty() || binary_form_gcd(forms).degree() > 0) return false;
  }
  return true;
}

std::vector<Component> decompose_focal(const Congruence& c, const std::vector<SingularPointRecord>& points) {
  Ideal focal = with_basis(focal_ideal(c));
  Ideal residual = focal;
  std::vector<Component> out;
  std::vector<Ideal> planes;
  for (const auto& pt : points) {
    if (!pt.on_g35) continue;
    LinearSubspace pi = kernel_space(SkewMatrix(combination(c.web(), pt.point)));
    Ideal J = with_basis(linear_ideal(c.vars(), pi.forms()));
    if (!is_subset(focal, J)) throw ContractViolation("3-space of a rank-2 singular point is not in the focal locus");
    residual = ideal_quotient(residual, J);
    const std::string name = std::string("pi_") + static_cast<char>('A' + out.size());
    Component comp = make_component(name, "3-space of the dual point " + to_string(pt.point), J);
    comp.parasitic = misses_sampled_lines(c, J, 20, 0x9a + out.size());
    out.push_back(std::move(comp));
    planes.push_back(J);
  }
  if (planes.empty()) return out;
  const std::size_t k = std::min<std::size_t>(planes.size(), 4);
  Component res = make_component(kResidualNames[k - 1], kResidualDescriptions[k - 1], residual);
  for (std::size_t i = 0; i < planes.size(); ++i) {
    HilbertData meet = hilbert_polynomial(ideal_sum(residual, planes[i]));
    res.notes.push_back("meets " + out[i].name + " in dimension " + std::to_string(meet.projective_dimension()) +
                        ", degree " + meet.degree.get_str());
  }
  res.parasitic = misses_sampled_lines(c, res.ideal, 20, 0x9f);
  out.push_back(std::move(res));
  return out;
}

std::vector<Component> decompose_reducible(const Congruence& c, const MultiPoly& linear) {
  const VarSet& dv = linear.vars();
  QMatrix lrow(1, dv.size(), Rational(0));
  for (std::size_t i = 0; i < dv.size(); ++i) lrow(0, i) = linear.coefficient(Monomial::var(i));
  auto basis = kernel(lrow);
  const VarSet& x = c.vars();
  const std::size_t s = c.n() + 1;
  Matrix<MultiPoly> m(basis.size(), s, MultiPoly(x));
  for (std::size_t r = 0; r < basis.size(); ++r) {
    QMatrix b = combination(c.web(), basis[r]);
    for (std::size_t j = 0; j < s; ++j) {
      QVector row(s);
      for (std::size_t l = 0; l < s; ++l) row[l] = b(j, l);
      m(r, j) = linear_form(x, row);
    }
  }
  std::vector<MultiPoly> minors;
  for (auto& f : maximal_minors(m))
    if (!f.is_zero()) minors.push_back(f);
  Ideal z1(x, minors);
  Ideal focal = with_basis(focal_ideal(c));
  Ideal residual = saturate(focal, z1);
  std::vector<Component> out;
  out.push_back(make_component("Z1", "locus of the sub-web over the plane of S", z1));
  out.push_back(make_component("residual", "residual focal component", residual));
  for (auto& comp : out) comp.parasitic = misses_sampled_lines(c, comp.ideal, 20, 0xa1);
  return out;
}

ClassificationReport classify(const SkewWeb& web) {
  web.validate();
  if (web.n != 5) throw std::invalid_argument("classify needs n = 5");
  ClassificationReport rep;
  rep.n = 5;
  PfaffianCubic s = pfaffian_cubic(web);
  Congruence c = build_congruence(web);
  rep.focal = hilbert_polynomial(with_basis(focal_ideal(c)));
  CubicData cubic;
  cubic.form = s.form;

  auto degenerate = [&](const std::string& why) {
    rep.label = "degenerate";
    rep.table_row = "successive degenerations";
    rep.notes.push_back(why);
    rep.notes.push_back("focal locus: dimension " + std::to_string(rep.focal->projective_dimension()) + ", degree " +
                        rep.focal->degree.get_str());
  };

  if (s.is_zero()) {
    cubic.kind = "degenerate";
    rep.cubic = cubic;
    degenerate("Pfaffian cubic vanishes identically: the dual 3-space lies in the dual Grassmannian, dim F > 3");
    return rep;
  }
  cubic.sing = singular_locus(s);
  if (rep.focal->projective_dimension() != 3) {
    cubic.kind = "degenerate";
    rep.cubic = cubic;
    degenerate("focal locus is not a threefold");
    return rep;
  }

  std::vector<SingularPointRecord> g35;
  for (const auto& p : cubic.sing.points)
    if (p.on_g35) g35.push_back(p);

  if (!g35.empty()) {
    cubic.kind = cubic.sing.cone_vertex ? "cone" : "isolated singularities";
    rep.cubic = cubic;
    rep.components = decompose_focal(c, g35);
    rep.label = "pi-split (" + std::to_string(g35.size()) + " 3-space" + (g35.size() > 1 ? "s" : "") + " on G(3,5))";
    rep.table_row = "irreducible with isolated singularities";
    rep.subcase = "P_i on G(3,5), k = " + std::to_string(g35.size());
    if (cubic.sing.cone_vertex) rep.notes.push_back("S is a cone with vertex on G(3,5); the 3-space of the vertex counts twice");
    Integer sum = 0;
    for (const auto& comp : rep.components) sum += comp.degree;
    if (sum != rep.focal->degree)
      rep.notes.push_back("unresolved: component degrees sum to " + sum.get_str() + ", focal degree " +
                          rep.focal->degree.get_str());
    return rep;
  }

  cubic.split = split_cubic(s);
  if (cubic.split) {
    cubic.kind = "reducible";
    rep.cubic = cubic;
    rep.table_row = "reducible pi+Q";
    rep.label = "reducible S";
    rep.components = decompose_reducible(c, cubic.split->linear);
    const Integer d = rep.components[1].degree;
    static const char* names[] = {"X", "Y", "Z2", "T"};
    static const char* z1names[] = {"L'", "Gamma'", "Z1", "C(V)"};
    static const char* notes[] = {"L' is a parasitic component", "Gamma' has a parasitic line as embedded component",
                                  "the lines of the congruence are secant to both Z1 and Z2",
                                  "the lines of the congruence are the trisecants of C(V) meeting T"};
    if (d >= 3 && d <= 6) {
      const int i = 6 - static_cast<int>(d.get_si());
      rep.subcase = "case (" + std::to_string(i + 1) + ")";
      rep.label = std::string("reducible S: ") + z1names[i] + " + " + names[i] + " (deg " + names[i] + " = " + d.get_str() + ")";
      rep.components[0].name = z1names[i];
      rep.components[1].name = names[i];
      rep.notes.push_back(notes[i]);
    } else {
      rep.subcase = "unresolved";
      rep.notes.push_back("unresolved: residual component of degree " + d.get_str());
    }
    if (cubic.split->quadric_rank == 4) rep.notes.push_back("residual quadric of maximal rank");
    return rep;
  }

  rep.table_row = "irreducible with isolated singularities";
  if (cubic.sing.dimension >= 1) {
    cubic.kind = "double line";
    rep.label = "singular Palatini scroll (S ruled with a double line)";
    rep.table_row = "irreducible ruled with a double line";
    rep.notes.push_back("orbit of the double line not identified");
  } else if (cubic.sing.dimension == 0) {
    cubic.kind = cubic.sing.cone_vertex ? "cone" : "isolated singularities";
    rep.label = "singular Palatini scroll";
    rep.subcase = "P_i off G(3,5)";
    if (cubic.sing.cone_vertex) rep.notes.push_back("S is a cubic cone with vertex " + to_string(*cubic.sing.cone_vertex));
    if (cubic.sing.unlocated > 0)
      rep.notes.push_back(std::to_string(cubic.sing.unlocated) + " singular point(s) with irrational coordinates, not located");
  } else {
    cubic.kind = "smooth";
    rep.label = "smooth Palatini scroll";
    rep.table_row = "smooth";
  }
  rep.cubic = cubic;
  return rep;
}

ClassificationReport classify_low(const SkewWeb& web) {
  web.validate();
  ClassificationReport rep;
  rep.n = web.n;
  if (web.n == 3) {
    VarSet v{"a", "b"};
    MultiPoly q = pfaffian(linear_combination(web.mats, {MultiPoly::variable(v, 0), MultiPoly::variable(v, 1)}));
    rep.table_row = "P^3";
    if (q.is_zero()) {
      rep.label = "pencil contained in the dual Klein quadric";
      rep.subcase = "contained";
      rep.notes.push_back("every complex of the pencil is special: not a congruence of order one");
      return rep;
    }
    BinaryForm f = BinaryForm::from_multi(q, 0, 1);
    const auto& k = f.coeffs();  // k[i] * a^i b^(2-i)
    Rational disc = k[1] * k[1] - 4 * k[0] * k[2];
    if (disc == 0) {
      rep.label = "tangent pencil: focal locus a double line";
      rep.subcase = "double point";
    } else {
      rep.label = "two distinct dual points: join of two lines";
      rep.subcase = sgn(disc) > 0 ? "real points" : "complex conjugate points";
    }
    for (const auto& r : binary_rational_roots(f)) {
      QMatrix m = combination(web, r);
      LinearSubspace line = kernel_space(SkewMatrix(m));
      rep.notes.push_back("dual point " + to_string(r) + " is the line through " + to_string(line.points()[0]) + " and " +
                          to_string(line.points()[1]));
    }
    rep.notes.push_back("discriminant " + disc.get_str());
    return rep;
  }
  if (web.n == 4) {
    VarSet v{"a", "b", "c"};
    std::vector<MultiPoly> coeffs;
    for (std::size_t i = 0; i < 3; ++i) coeffs.push_back(MultiPoly::variable(v, i));
    Matrix<MultiPoly> m = linear_combination(web.mats, coeffs);
    std::vector<MultiPoly> pf;
    for (std::size_t drop = 0; drop < 5; ++drop) {
      std::vector<std::size_t> rows;
      for (std::size_t i = 0; i < 5; ++i)
        if (i != drop) rows.push_back(i);
      MultiPoly p = pfaffian_of(m, rows);
      if (!p.is_zero()) pf.push_back(p);
    }
    rep.table_row = "P^4";
    HilbertData h = pf.empty() ? hilbert_polynomial(Ideal(v, {})) : hilbert_polynomial(Ideal(v, pf));
    rep.focal.reset();
    const int dim = h.projective_dimension();
    if (dim < 0) {
      rep.label = "trisecants of a projected Veronese surface";
      rep.subcase = "empty dual intersection";
    } else if (dim == 0) {
      const Integer len = h.degree;
      rep.subcase = "length " + len.get_str();
      if (len == 1) rep.label = "secants of a cubic scroll meeting a plane";
      else if (len == 2) rep.label = "lines meeting two planes and a quadric";
      else if (len == 3) rep.label = "lines meeting three planes";
      else {
        rep.label = "degenerate";
        rep.notes.push_back("unresolved: length " + len.get_str() + " exceeds 3");
      }
      if (!pf.empty())
        for (const auto& p : rational_points(with_basis(Ideal(v, pf)))) rep.notes.push_back("dual point " + to_string(p));
    } else {
      rep.label = "not a congruence";
      rep.subcase = "positive-dimensional dual intersection";
    }
    rep.notes.push_back("dual intersection: dimension " + std::to_string(dim) + ", Hilbert polynomial " +
                        h.polynomial_string());
    return rep;
  }
  throw std::invalid_argument("classify_low needs n = 3 or 4");
}

}  // namespace plab
