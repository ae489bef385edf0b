#include "plueckerlab/congruence/congruence.hpp"

#include <random>

#include "plueckerlab/arith/sampling.hpp"
#include "plueckerlab/groebner/hilbert.hpp"
#include "plueckerlab/kernels/minors.hpp"

namespace plab {

void SkewWeb::validate() const {
  if (n < 2) throw std::invalid_argument("ambient dimension must be at least 2");
  if (mats.size() != n - 1)
    throw std::invalid_argument("a web in P^" + std::to_string(n) + " needs " + std::to_string(n - 1) + " matrices");
  std::vector<QVector> rows;
  for (const auto& a : mats) {
    if (a.size() != n + 1) throw std::invalid_argument("web matrices must be " + std::to_string(n + 1) + "x" + std::to_string(n + 1));
    rows.push_back(a.upper());
  }
  if (rank(from_rows(rows, rows[0].size())) != mats.size()) throw DependentWeb("web matrices are linearly dependent");
}

QMatrix Congruence::at(const QVector& point) const {
  if (point.size() != web_.n + 1) throw std::invalid_argument("point has the wrong length");
  QMatrix r(web_.mats.size(), web_.n + 1);
  for (std::size_t k = 0; k < web_.mats.size(); ++k)
    for (std::size_t j = 0; j <= web_.n; ++j) {
      Rational s = 0;
      for (std::size_t i = 0; i <= web_.n; ++i) s += web_.mats[k](j, i) * point[i];
      r(k, j) = s;
    }
  return r;
}

Congruence build_congruence(const SkewWeb& web) {
  web.validate();
  Congruence c;
  c.web_ = web;
  c.vars_ = VarSet::projective(static_cast<int>(web.n));
  c.m_ = Matrix<MultiPoly>(web.mats.size(), web.n + 1, MultiPoly(c.vars_));
  for (std::size_t k = 0; k < web.mats.size(); ++k)
    for (std::size_t j = 0; j <= web.n; ++j)
      for (std::size_t i = 0; i <= web.n; ++i)
        if (web.mats[k](j, i) != 0) c.m_(k, j) += MultiPoly::variable(c.vars_, i) * web.mats[k](j, i);

  // Row k reproduces the pairing with A_k on sampled lines.
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 10; ++trial) {
    QVector p = draw_vector(rng, web.n + 1, 9);
    if (is_zero_vector(p) || incidence_corank(c, p) != 1) continue;
    PluckerVector l = line_through_point(c, p);
    for (const auto& a : web.mats)
      if (l.pairing(a) != 0) throw ContractViolation("congruence row does not reproduce its complex");
  }
  return c;
}

std::vector<MultiPoly> focal_generators(const Congruence& c, bool parallel) {
  auto minors = parallel ? maximal_minors(c.matrix()) : maximal_minors_serial(c.matrix());
  std::vector<MultiPoly> out;
  for (auto& m : minors)
    if (!m.is_zero()) out.push_back(std::move(m));
  return out;
}

Ideal focal_ideal(const Congruence& c) { return Ideal(c.vars(), focal_generators(c)); }

std::size_t incidence_corank(const Congruence& c, const QVector& point) {
  return c.n() + 1 - rank(c.at(point)) - 1;
}

PluckerVector line_through_point(const Congruence& c, const QVector& point) {
  if (is_zero_vector(point)) throw std::invalid_argument("zero vector is not a point");
  QMatrix r = c.at(point);
  const std::size_t n = c.n();
  if (rank(r) != n - 1) throw FocalPoint("point lies on the focal locus; use the pencil mode");
  std::vector<std::size_t> rows(n - 1);
  for (std::size_t k = 0; k < n - 1; ++k) rows[k] = k;
  QVector coords;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      std::vector<std::size_t> cols;
      for (std::size_t k = 0; k <= n; ++k)
        if (k != i && k != j) cols.push_back(k);
      Rational d = det(r.select(rows, cols));
      coords.push_back((i + j + 1) % 2 ? -d : d);
    }
  PluckerVector l(n, normalize_projective(coords));
  if (!l.satisfies_relations()) throw ContractViolation("line through point violates the Pluecker relations");
  if (!l.passes_through(point)) throw ContractViolation("line does not pass through the point");
  for (const auto& a : c.web().mats)
    if (l.pairing(a) != 0) throw ContractViolation("line is not in every complex");
  return l;
}

bool in_congruence(const Congruence& c, const PluckerVector& line) {
  if (line.ambient() != c.n() || line.is_zero() || !line.satisfies_relations()) return false;
  for (const auto& a : c.web().mats)
    if (line.pairing(a) != 0) return false;
  return true;
}

namespace {

Matrix<MultiPoly> restrict_to_line(const Congruence& c, const QVector& p, const QVector& q, const VarSet& lm) {
  QMatrix mp = c.at(p), mq = c.at(q);
  MultiPoly l = MultiPoly::variable(lm, 0), m = MultiPoly::variable(lm, 1);
  Matrix<MultiPoly> r(mp.rows(), mp.cols(), MultiPoly(lm));
  for (std::size_t i = 0; i < mp.rows(); ++i)
    for (std::size_t j = 0; j < mp.cols(); ++j) r(i, j) = l * mp(i, j) + m * mq(i, j);
  return r;
}

}  // namespace

FocusSet foci_on_line(const Congruence& c, const PluckerVector& line) {
  if (!in_congruence(c, line)) throw NotInCongruence();
  FocusSet fs;
  fs.line = line;
  std::tie(fs.p, fs.q) = line.points();
  VarSet lm{"l", "m"};
  auto minors = maximal_minors_serial(restrict_to_line(c, fs.p, fs.q, lm));
  std::vector<BinaryForm> forms;
  for (const auto& mi : minors) forms.push_back(BinaryForm::from_multi(mi, 0, 1));
  bool all_zero = true;
  for (const auto& f : forms) all_zero = all_zero && f.is_zero();
  const int deg = static_cast<int>(c.n()) - 1;
  if (all_zero) {
    fs.line_in_focal = true;
    fs.form = BinaryForm(deg, std::vector<Rational>(deg + 1, Rational(0)));
    return fs;
  }
  fs.form = binary_form_gcd(forms);
  fs.roots = binary_form_roots(fs.form);
  for (const auto& iv : fs.roots.finite) fs.multiplicities.push_back(iv.multiplicity);
  if (fs.roots.at_infinity > 0) fs.multiplicities.push_back(fs.roots.at_infinity);
  fs.nonreal = fs.roots.nonreal;
  return fs;
}

BinaryForm focus_form_shortcut(const Congruence& c, const PluckerVector& line) {
  if (!in_congruence(c, line)) throw NotInCongruence();
  auto [p, q] = line.points();
  VarSet lm{"l", "m"};
  auto r = restrict_to_line(c, p, q, lm);
  std::vector<std::size_t> rows, cols;
  for (std::size_t k = 0; k < r.rows(); ++k) rows.push_back(k);
  for (std::size_t j = 2; j < r.cols(); ++j) cols.push_back(j);
  return BinaryForm::from_multi(determinant(r.select(rows, cols)), 0, 1);
}

LinearSubspace pencil_plane(const Congruence& c, const QVector& point) {
  if (is_zero_vector(point)) throw std::invalid_argument("zero vector is not a point");
  QMatrix r = c.at(point);
  const std::size_t n = c.n();
  const std::size_t rk = rank(r);
  if (rk == n - 1) throw FocalPoint("point is not on the focal locus");
  if (rk + 2 < n) throw DegenerateFocus(n - 1 - rk);
  LinearSubspace plane = LinearSubspace::from_forms(n, row_space(r));
  if (plane.dimension() != 2 || !plane.contains(point)) throw ContractViolation("pencil plane construction failed");
  for (const auto& q : plane.points())
    for (const auto& a : c.web().mats) {
      Rational s = 0;
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) s += point[i] * a(i, j) * q[j];
      if (s != 0) throw ContractViolation("pencil line outside a complex");
    }
  return plane;
}

int residual_plane_curve_degree(const Congruence& c, const QVector& point) {
  LinearSubspace plane = pencil_plane(c, point);
  VarSet s{"s0", "s1", "s2"};
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i <= c.n(); ++i) {
    MultiPoly x(s);
    for (std::size_t k = 0; k < 3; ++k) x += MultiPoly::variable(s, k) * plane.points()[k][i];
    images.push_back(x);
  }
  std::vector<MultiPoly> restricted;
  for (const auto& f : focal_generators(c)) {
    MultiPoly r = f.substitute(images);
    if (!r.is_zero()) restricted.push_back(r);
  }
  if (restricted.empty()) throw PlaneInFocalLocus();
  HilbertData h = hilbert_polynomial(Ideal(s, restricted));
  if (h.projective_dimension() < 1) return 0;
  return static_cast<int>(h.degree.get_si());
}

int expected_degree(int n) {
  if (n < 3) throw std::invalid_argument("expected degree needs n >= 3");
  return (n * n - 3 * n + 4) / 2;
}

Congruence apply_projectivity(const Congruence& c, const QMatrix& g) {
  if (g.rows() != c.n() + 1 || g.cols() != c.n() + 1) throw std::invalid_argument("projectivity has the wrong size");
  auto ginv = inverse(g);
  if (!ginv) throw SingularProjectivity();
  SkewWeb w;
  w.n = c.n();
  QMatrix gt = ginv->transpose();
  for (const auto& a : c.web().mats) w.mats.emplace_back(gt * a.matrix() * *ginv);
  return build_congruence(w);
}

Ideal transform_ideal(const Ideal& I, const QMatrix& g) {
  auto ginv = inverse(g);
  if (!ginv) throw SingularProjectivity();
  const VarSet& v = I.vars();
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < v.size(); ++i) {
    MultiPoly x(v);
    for (std::size_t j = 0; j < v.size(); ++j)
      if ((*ginv)(i, j) != 0) x += MultiPoly::variable(v, j) * (*ginv)(i, j);
    images.push_back(x);
  }
  return map_ideal(I, images);
}

}  // namespace plab
