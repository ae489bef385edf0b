#include "plueckerlab/pde/flux.hpp"

#include <random>

#include "plueckerlab/arith/parse.hpp"
#include "plueckerlab/arith/sampling.hpp"
#include "plueckerlab/kernels/minors.hpp"

namespace plab {

namespace {

Matrix<MultiPoly> scaled_jacobian_of(const VarSet& v, const std::vector<MultiPoly>& g, const MultiPoly& h) {
  const std::size_t m = g.size();
  Matrix<MultiPoly> j(m, m, MultiPoly(v));
  const bool poly = h.is_constant();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (poly) j(a, b) = g[a].derivative(b) * (1 / h.coefficient(Monomial()));
      else j(a, b) = h * g[a].derivative(b) - g[a] * h.derivative(b);
    }
  return j;
}

Matrix<MultiPoly> drop(const Matrix<MultiPoly>& k, std::size_t row, std::size_t col) {
  Matrix<MultiPoly> out(k.rows() - 1, k.cols() - 1, MultiPoly(k(0, 0).vars()));
  for (std::size_t i = 0, r = 0; i < k.rows(); ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, c = 0; j < k.cols(); ++j) {
      if (j == col) continue;
      out(r, c++) = k(i, j);
    }
    ++r;
  }
  return out;
}

// chi(lambda, u) = det(lambda s I - J~) with s = h^2 (or 1), and its adjugate
// columns, as first-order jets at a sample: u = u0 + e with e^2 = 0. Every
// check below needs values and first derivatives only.
struct Local {
  VarSet big;  // lambda, e1..em
  std::size_t m = 0;
  MultiPoly chi;
  std::vector<std::vector<MultiPoly>> adj_cols;  // adj_cols[c][i]

  MultiPoly truncate(const MultiPoly& p) const {
    std::vector<MultiPoly::Term> keep;
    for (const auto& [mono, c] : p.terms()) {
      unsigned d = 0;
      for (std::size_t j = 1; j <= m; ++j) d += mono[j];
      if (d <= 1) keep.emplace_back(mono, c);
    }
    return MultiPoly(big, std::move(keep));
  }

  Local(const FluxSystem& sys, const QVector& u0) : m(sys.m()) {
    big = VarSet({"lambda"}) + VarSet::numbered(static_cast<int>(m), "e");
    std::vector<MultiPoly> images;
    for (std::size_t i = 0; i < m; ++i) images.push_back(MultiPoly(big, u0[i]) + MultiPoly::variable(big, i + 1));
    MultiPoly lam = MultiPoly::variable(big, 0);
    MultiPoly s = sys.is_polynomial() ? MultiPoly(big, Rational(1))
                                      : truncate(sys.denominator().substitute(images).pow(2));
    Matrix<MultiPoly> k(m, m, MultiPoly(big));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        k(a, b) = -truncate(sys.scaled_jacobian()(a, b).substitute(images));
        if (a == b) k(a, b) += lam * s;
      }
    chi = truncate(determinant(k));
    for (std::size_t c = 0; c < m; ++c) {
      std::vector<MultiPoly> col;
      for (std::size_t i = 0; i < m; ++i) {
        if (m == 1) {
          col.push_back(MultiPoly(big, Rational(1)));
          continue;
        }
        MultiPoly d = truncate(determinant(drop(k, c, i)));
        col.push_back((i + c) % 2 == 0 ? d : -d);
      }
      adj_cols.push_back(std::move(col));
    }
  }

  // Value at u0 as a polynomial in lambda.
  UPoly at0(const MultiPoly& p) const {
    VarSet t{"lambda"};
    std::vector<MultiPoly> images{MultiPoly::variable(t, 0)};
    for (std::size_t j = 0; j < m; ++j) images.push_back(MultiPoly(t));
    return UPoly::from_multi(p.substitute(images), 0);
  }
  UPoly d_lambda(const MultiPoly& p) const { return at0(p.derivative(0)); }
  UPoly d_u(const MultiPoly& p, std::size_t j) const { return at0(p.derivative(j + 1)); }
};

// The first adjugate column that does not vanish at the eigenvalue.
const std::vector<MultiPoly>& pick_column(const Local& s, const QVector& u, const IsolatingInterval& iv) {
  for (const auto& col : s.adj_cols)
    for (const auto& v : col)
      if (!vanishes_at_root(s.at0(v), iv)) return col;
  throw std::domain_error("eigenvector normalization breaks down at " + to_string(u));
}

IsolatingInterval eigenvalue_at(const FluxSystem& sys, const QVector& u, std::size_t i) {
  EigenData e = eigen_data(sys, u);
  if (!e.strictly_hyperbolic) throw NotStrictlyHyperbolic(u);
  if (i >= e.eigenvalues.size()) throw std::out_of_range("family index out of range");
  return e.eigenvalues[i];
}

}  // namespace

FluxSystem::FluxSystem(VarSet vars, std::vector<MultiPoly> numerators, std::optional<MultiPoly> denominator)
    : vars_(std::move(vars)), g_(std::move(numerators)), h_(denominator ? *denominator : MultiPoly(vars_, Rational(1))) {
  if (g_.empty()) throw std::invalid_argument("flux system needs at least one unknown");
  if (g_.size() != vars_.size()) throw std::invalid_argument("one flux per unknown");
  for (const auto& g : g_)
    if (!(g.vars() == vars_)) throw VarSetMismatch();
  if (!(h_.vars() == vars_)) throw VarSetMismatch();
  if (h_.is_zero()) throw std::invalid_argument("zero flux denominator");
  jt_ = scaled_jacobian_of(vars_, g_, h_);
}

FluxSystem FluxSystem::parse(const std::vector<std::string>& fluxes, const std::string& denominator) {
  VarSet v = VarSet::numbered(static_cast<int>(fluxes.size()), "u");
  std::vector<MultiPoly> g;
  for (const auto& f : fluxes) g.push_back(parse_poly(f, v));
  return FluxSystem(v, std::move(g), parse_poly(denominator, v));
}

QVector FluxSystem::flux_at(const QVector& u) const {
  Rational h = h_.evaluate(u);
  if (h == 0) throw std::domain_error("flux denominator vanishes at " + to_string(u));
  QVector f;
  for (const auto& g : g_) f.push_back(g.evaluate(u) / h);
  return f;
}

QMatrix FluxSystem::jacobian_at(const QVector& u) const {
  Rational h = h_.evaluate(u);
  if (h == 0) throw std::domain_error("flux denominator vanishes at " + to_string(u));
  Rational s = is_polynomial() ? Rational(1) : h * h;
  QMatrix j(m(), m(), Rational(0));
  for (std::size_t a = 0; a < m(); ++a)
    for (std::size_t b = 0; b < m(); ++b) j(a, b) = jt_(a, b).evaluate(u) / s;
  return j;
}

FluxSystem reparametrize(const FluxSystem& sys, const QMatrix& p, const QVector& q) {
  auto pinv = inverse(p);
  if (!pinv) throw std::invalid_argument("reparametrization matrix is singular");
  const VarSet& v = sys.vars();
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < sys.m(); ++i) {
    MultiPoly e(v, q[i]);
    for (std::size_t j = 0; j < sys.m(); ++j) e += MultiPoly::variable(v, j) * p(i, j);
    images.push_back(e);
  }
  std::vector<MultiPoly> moved;
  for (const auto& g : sys.numerators()) moved.push_back(g.substitute(images));
  std::vector<MultiPoly> g;
  for (std::size_t i = 0; i < sys.m(); ++i) {
    MultiPoly s(v);
    for (std::size_t j = 0; j < sys.m(); ++j) s += moved[j] * (*pinv)(i, j);
    g.push_back(s);
  }
  return FluxSystem(v, std::move(g), sys.denominator().substitute(images));
}

std::pair<QVector, QVector> LineFamily::points(const QVector& u) const {
  const std::size_t m = sys.m();
  QVector p(m + 2, Rational(0)), q(m + 2, Rational(0));
  p[0] = 1;
  for (std::size_t i = 0; i < m; ++i) p[i + 1] = u[i];
  QVector f = sys.flux_at(u);
  for (std::size_t i = 0; i < m; ++i) q[i + 1] = -f[i];
  q[m + 1] = 1;
  return {p, q};
}

PluckerVector LineFamily::at(const QVector& u) const {
  auto [p, q] = points(u);
  return plucker_from_points(p, q);
}

LineFamily line_family(const FluxSystem& sys) { return LineFamily{sys}; }

EigenData eigen_data(const FluxSystem& sys, const QVector& u) {
  if (u.size() != sys.m()) throw std::invalid_argument("sample has the wrong dimension");
  EigenData e;
  e.u = u;
  QMatrix j = sys.jacobian_at(u);
  const std::size_t m = sys.m();
  // det(t I - J) via the polynomial determinant over Q[t].
  VarSet t{"t"};
  Matrix<MultiPoly> k(m, m, MultiPoly(t));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      k(a, b) = MultiPoly(t, -j(a, b));
      if (a == b) k(a, b) += MultiPoly::variable(t, 0);
    }
  e.charpoly = UPoly::from_multi(determinant(k), 0);
  e.eigenvalues = isolate_real_roots(e.charpoly);
  e.strictly_hyperbolic = e.eigenvalues.size() == m;
  for (const auto& iv : e.eigenvalues) {
    e.strictly_hyperbolic = e.strictly_hyperbolic && iv.multiplicity == 1;
    std::optional<QVector> vec;
    if (auto r = rational_value(iv)) {
      QMatrix a = j;
      for (std::size_t d = 0; d < m; ++d) a(d, d) -= *r;
      auto ker = kernel(a);
      if (ker.size() == 1) {
        QVector v = ker[0];
        Rational lead = 0;
        for (const auto& x : v)
          if (x != 0) {
            lead = x;
            break;
          }
        for (auto& x : v) x /= lead;
        vec = v;
      }
    }
    e.eigenvectors.push_back(vec);
  }
  return e;
}

FocusEigenReport focus_eigenvalue_check(const FluxSystem& sys, const QVector& u) {
  EigenData e = eigen_data(sys, u);
  if (!e.strictly_hyperbolic) throw NotStrictlyHyperbolic(u);
  const std::size_t m = sys.m();
  const Rational h = sys.denominator().evaluate(u);
  VarSet lm{"l", "m"};
  const MultiPoly l = MultiPoly::variable(lm, 0), mu = MultiPoly::variable(lm, 1);
  // Rows: P, Q and the u-derivatives of l P + m Q, with Q = (0, -g, h).
  Matrix<MultiPoly> d(m + 2, m + 2, MultiPoly(lm));
  d(0, 0) = MultiPoly(lm, Rational(1));
  for (std::size_t i = 0; i < m; ++i) {
    d(0, i + 1) = MultiPoly(lm, u[i]);
    d(1, i + 1) = MultiPoly(lm, -sys.numerators()[i].evaluate(u));
  }
  d(1, m + 1) = MultiPoly(lm, h);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      d(j + 2, i + 1) = mu * (-sys.numerators()[i].derivative(j).evaluate(u));
      if (i == j) d(j + 2, i + 1) += l;
    }
    d(j + 2, m + 1) = mu * sys.denominator().derivative(j).evaluate(u);
  }
  MultiPoly det = determinant(d);
  FocusEigenReport r;
  r.u = u;
  r.charpoly = e.charpoly;
  if (det.is_zero()) return r;
  // y0 / yn = l / (m h): substitute l = h t, m = 1.
  VarSet tv{"t"};
  std::vector<MultiPoly> images{MultiPoly::variable(tv, 0) * h, MultiPoly(tv, Rational(1))};
  UPoly f = UPoly::from_multi(det.substitute(images), 0);
  if (f.is_zero()) return r;
  r.focus_poly = f.monic();
  r.foci = isolate_real_roots(r.focus_poly);
  r.matches = r.focus_poly == e.charpoly.monic();
  return r;
}

SampleVerdict linear_degeneracy_check(const FluxSystem& sys, const std::vector<QVector>& samples, std::size_t i) {
  SampleVerdict out;
  out.family = i;
  for (const auto& u : samples) {
    IsolatingInterval iv = eigenvalue_at(sys, u, i);
    Local s(sys, u);
    const auto& v = pick_column(s, u, iv);
    UPoly n;
    for (std::size_t j = 0; j < sys.m(); ++j) n = n + s.d_u(s.chi, j) * s.at0(v[j]);
    if (!vanishes_at_root(n, iv)) {
      out.holds = false;
      out.witness = u;
      out.detail = "Lie derivative of eigenvalue " + std::to_string(i) + " is nonzero";
      return out;
    }
  }
  return out;
}

SampleVerdict straight_rarefaction_check(const FluxSystem& sys, const std::vector<QVector>& samples, std::size_t i) {
  SampleVerdict out;
  out.family = i;
  const std::size_t m = sys.m();
  for (const auto& u : samples) {
    IsolatingInterval iv = eigenvalue_at(sys, u, i);
    if (m == 1) continue;
    Local s(sys, u);
    const auto& col = pick_column(s, u, iv);
    const UPoly chi_l = s.d_lambda(s.chi);
    std::vector<UPoly> v, w;
    for (const auto& c : col) v.push_back(s.at0(c));
    // chi_l * (Dv . v) with d lambda / du_j = -chi_u_j / chi_l.
    for (std::size_t a = 0; a < m; ++a) {
      UPoly acc;
      for (std::size_t j = 0; j < m; ++j)
        acc = acc + (chi_l * s.d_u(col[a], j) - s.d_lambda(col[a]) * s.d_u(s.chi, j)) * v[j];
      w.push_back(acc);
    }
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        if (!vanishes_at_root(v[a] * w[b] - v[b] * w[a], iv)) {
          out.holds = false;
          out.witness = u;
          out.detail = "rarefaction curve of family " + std::to_string(i) + " is not straight";
          return out;
        }
  }
  return out;
}

TempleReport is_temple(const FluxSystem& sys, const std::vector<QVector>& samples) {
  if (samples.empty()) throw std::invalid_argument("no samples");
  TempleReport r;
  r.samples = samples.size();
  for (const auto& u : samples)
    if (!eigen_data(sys, u).strictly_hyperbolic) {
      r.verdict = "not_strictly_hyperbolic";
      r.witness = u;
      r.detail = "Jf has a repeated or non-real eigenvalue";
      return r;
    }
  r.verdict = "temple_at_samples";
  for (std::size_t i = 0; i < sys.m(); ++i) {
    r.degeneracy.push_back(linear_degeneracy_check(sys, samples, i));
    r.straightness.push_back(straight_rarefaction_check(sys, samples, i));
    for (const auto* v : {&r.degeneracy.back(), &r.straightness.back()})
      if (!v->holds && r.verdict == "temple_at_samples") {
        r.verdict = "not_temple";
        r.witness = v->witness;
        r.detail = v->detail;
      }
  }
  return r;
}

std::vector<QVector> sample_points(const FluxSystem& sys, std::size_t count, std::uint64_t seed, int bound) {
  std::mt19937_64 rng(seed);
  std::vector<QVector> out;
  for (std::size_t guard = 0; out.size() < count && guard < 100 * count + 100; ++guard) {
    QVector u(sys.m());
    for (auto& x : u) x = draw(rng, bound);
    if (sys.denominator().evaluate(u) == 0) continue;
    out.push_back(u);
  }
  return out;
}

FluxSystem flux_of_congruence(const Congruence& c) {
  const std::size_t n = c.n(), m = n - 1;
  VarSet u = VarSet::numbered(static_cast<int>(m), "u");
  std::vector<MultiPoly> images{MultiPoly(u, Rational(1))};
  for (std::size_t i = 0; i < m; ++i) images.push_back(MultiPoly::variable(u, i));
  images.push_back(MultiPoly(u));
  // M(1, u, 0) = [N | b]; Q = (0, w, 1) in its kernel gives N w = -b and f = -w.
  Matrix<MultiPoly> nmat(m, m, MultiPoly(u));
  std::vector<MultiPoly> b;
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < m; ++j) nmat(k, j) = c.matrix()(k, j + 1).substitute(images);
    b.push_back(c.matrix()(k, n).substitute(images));
  }
  MultiPoly h = determinant(nmat);
  if (h.is_zero()) throw std::invalid_argument("chart is degenerate for this web");
  std::vector<MultiPoly> g;
  for (std::size_t i = 0; i < m; ++i) {
    Matrix<MultiPoly> cr = nmat;
    for (std::size_t k = 0; k < m; ++k) cr(k, i) = b[k];
    g.push_back(determinant(cr));
  }
  return FluxSystem(u, std::move(g), h);
}

}  // namespace plab
