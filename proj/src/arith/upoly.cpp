#include "plueckerlab/arith/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace plab {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

UPoly UPoly::from_multi(const MultiPoly& p, std::size_t var) {
  std::vector<Rational> c(p.is_zero() ? 0 : p.degree_in(var) + 1);
  for (const auto& [m, coef] : p.terms()) {
    if (m.degree != m.exp[var]) throw std::invalid_argument("polynomial is not univariate in the requested variable");
    c[m.exp[var]] += coef;
  }
  return UPoly(std::move(c));
}

UPoly UPoly::from_multi(const MultiPoly& p) {
  std::optional<std::size_t> var;
  for (const auto& [m, coef] : p.terms())
    for (std::size_t i = 0; i < p.vars().size(); ++i)
      if (m.exp[i] != 0) {
        if (var && *var != i) throw std::invalid_argument("polynomial is not univariate");
        var = i;
      }
  return from_multi(p, var.value_or(0));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const Rational& s) {
  std::vector<Rational> c = a.c_;
  for (auto& x : c) x *= s;
  return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Rational> r = c_;
  int dd = d.degree();
  if (degree() < dd) return {UPoly(), *this};
  std::vector<Rational> q(degree() - dd + 1);
  for (int k = degree(); k >= dd; --k) {
    if (sgn(r[k]) == 0) continue;
    Rational f = r[k] / d.leading();
    q[k - dd] = f;
    for (int j = 0; j <= dd; ++j) r[k - dd + j] -= f * d.c_[j];
  }
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return UPoly(std::move(c));
}

Rational UPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * Rational(1 / leading());
}

UPoly UPoly::primitive() const {
  if (is_zero()) return *this;
  Integer g = 0, l = 1;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational f(l, g);
  f.canonicalize();
  if (sgn(leading()) < 0) f = -f;
  return *this * f;
}

MultiPoly UPoly::to_multi(const VarSet& vars, std::size_t var) const {
  std::vector<MultiPoly::Term> terms;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) terms.emplace_back(Monomial::var(var, static_cast<unsigned>(i)), c_[i]);
  return MultiPoly(vars, std::move(terms));
}

std::string UPoly::to_string(const std::string& var) const {
  VarSet vs({var});
  return to_multi(vs, 0).to_string();
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.divmod(b).second;
    a = std::move(b);
    b = r.is_zero() ? r : r.primitive();
  }
  return a.monic();
}

std::vector<std::pair<UPoly, int>> square_free_decomposition(const UPoly& p) {
  if (p.is_zero()) throw ZeroPolynomialError();
  std::vector<std::pair<UPoly, int>> out;
  if (p.degree() == 0) return out;
  UPoly dp = p.derivative();
  UPoly a = gcd(p, dp);
  UPoly b = p.divmod(a).first;
  UPoly c = dp.divmod(a).first;
  UPoly d = c - b.derivative();
  int k = 1;
  while (b.degree() > 0) {
    a = gcd(b, d);
    if (a.degree() > 0) out.emplace_back(a.primitive(), k);
    b = b.divmod(a).first;
    c = d.divmod(a).first;
    d = c - b.derivative();
    ++k;
  }
  return out;
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq;
  seq.push_back(p);
  UPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d);
  for (;;) {
    UPoly r = seq[seq.size() - 2].divmod(seq.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps the sign pattern; shrinks coefficients.
    UPoly pr = r.primitive();
    if (sgn(pr.leading()) != sgn(r.leading())) pr = -pr;
    seq.push_back(-pr);
  }
  return seq;
}

namespace {

int sign_changes(const std::vector<UPoly>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& f : seq) {
    int s = f.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int sturm_count(const std::vector<UPoly>& seq, const Rational& lo, const Rational& hi) {
  return sign_changes(seq, lo) - sign_changes(seq, hi);
}

Rational root_bound(const UPoly& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p[i] / p.leading());
    if (r > m) m = r;
  }
  return m + 1;
}

namespace {

// Isolates the roots of a square-free polynomial.
std::vector<IsolatingInterval> isolate_squarefree(const UPoly& q, int multiplicity) {
  std::vector<IsolatingInterval> out;
  if (q.degree() <= 0) return out;
  auto seq = sturm_sequence(q);
  Rational bound = root_bound(q);
  struct Job {
    Rational lo, hi;
    int count;
  };
  std::vector<Job> stack;
  int total = sturm_count(seq, -bound, bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  while (!stack.empty()) {
    Job job = stack.back();
    stack.pop_back();
    if (job.count == 0) continue;
    if (job.count == 1) {
      out.push_back({job.lo, job.hi, multiplicity, std::nullopt, q});
      continue;
    }
    Rational mid = (job.lo + job.hi) / 2;
    if (q.sign_at(mid) == 0) {
      Rational eps = (job.hi - job.lo) / 4;
      while (q.sign_at(mid - eps) == 0 || q.sign_at(mid + eps) == 0 ||
             sturm_count(seq, mid - eps, mid + eps) != 1)
        eps /= 2;
      out.push_back({mid - eps, mid + eps, multiplicity, mid, q});
      int left = sturm_count(seq, job.lo, mid - eps);
      stack.push_back({mid + eps, job.hi, job.count - 1 - left});
      stack.push_back({job.lo, mid - eps, left});
      continue;
    }
    int left = sturm_count(seq, job.lo, mid);
    stack.push_back({mid, job.hi, job.count - left});
    stack.push_back({job.lo, mid, left});
  }
  return out;
}

void bisect_once(IsolatingInterval& iv) {
  if (iv.exact) {
    Rational half = (iv.hi - iv.lo) / 4;
    iv.lo = *iv.exact - half;
    iv.hi = *iv.exact + half;
    return;
  }
  Rational mid = (iv.lo + iv.hi) / 2;
  int sm = iv.factor.sign_at(mid);
  if (sm == 0) {
    iv.exact = mid;
    Rational half = (iv.hi - iv.lo) / 4;
    iv.lo = mid - half;
    iv.hi = mid + half;
    return;
  }
  if (iv.factor.sign_at(iv.lo) * sm < 0) iv.hi = mid;
  else iv.lo = mid;
}

}  // namespace

std::vector<IsolatingInterval> isolate_real_roots(const UPoly& p) {
  if (p.is_zero()) throw ZeroPolynomialError();
  std::vector<IsolatingInterval> all;
  for (const auto& [f, k] : square_free_decomposition(p)) {
    auto part = isolate_squarefree(f, k);
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  // Intervals from different square-free factors may overlap; their roots are distinct.
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      if (all[i].hi > all[i + 1].lo) {
        bisect_once(all[i]);
        bisect_once(all[i + 1]);
        again = true;
      }
    }
    if (again) std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
  }
  return all;
}

std::vector<IsolatingInterval> isolate_real_roots(const MultiPoly& p) {
  if (p.is_zero()) throw ZeroPolynomialError();
  return isolate_real_roots(UPoly::from_multi(p));
}

void refine(IsolatingInterval& iv, const Rational& width) {
  while (iv.hi - iv.lo > width) bisect_once(iv);
}

std::vector<Rational> rational_roots(const UPoly& p) {
  std::vector<Rational> roots;
  if (p.is_zero()) throw ZeroPolynomialError();
  for (const auto& [f, k] : square_free_decomposition(p)) {
    UPoly g = f.primitive();
    Integer lead = g.leading().get_num();
    for (auto iv : isolate_squarefree(g, k)) {
      if (iv.exact) {
        roots.push_back(*iv.exact);
        continue;
      }
      // A rational root k/q of an integer polynomial has q | lead.
      refine(iv, Rational(1, 2) / Rational(lead));
      if (iv.exact) {
        roots.push_back(*iv.exact);
        continue;
      }
      Rational scaled = iv.lo * lead;
      Integer num;
      mpz_cdiv_q(num.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
      Rational cand(num, lead);
      cand.canonicalize();
      if (iv.contains(cand) && g.sign_at(cand) == 0) roots.push_back(cand);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::optional<Rational> rational_value(const IsolatingInterval& iv) {
  if (iv.exact) return iv.exact;
  for (const auto& q : rational_roots(iv.factor))
    if (iv.lo < q && q <= iv.hi) return q;
  return std::nullopt;
}

bool vanishes_at_root(const UPoly& q, const IsolatingInterval& iv) {
  if (iv.exact) return q.sign_at(*iv.exact) == 0;
  if (q.is_zero()) return true;
  UPoly g = gcd(q, iv.factor);
  if (g.degree() <= 0) return false;
  return g.sign_at(iv.lo) * g.sign_at(iv.hi) < 0;
}

int sign_at_root(const UPoly& q, const IsolatingInterval& iv) {
  if (iv.exact) return q.sign_at(*iv.exact);
  if (vanishes_at_root(q, iv)) return 0;
  // q has no root at the isolated point; shrink until q has no root in [lo, hi].
  UPoly qsf = q.divmod(gcd(q, q.derivative())).first;
  auto seq = sturm_sequence(qsf);
  IsolatingInterval cur = iv;
  while (qsf.sign_at(cur.lo) == 0 || qsf.sign_at(cur.hi) == 0 || sturm_count(seq, cur.lo, cur.hi) != 0) {
    bisect_once(cur);
    if (cur.exact) return q.sign_at(*cur.exact);
  }
  return q.sign_at(cur.lo);
}

// ---------------------------------------------------------------- BinaryForm

BinaryForm::BinaryForm(int degree, std::vector<Rational> coeffs) : degree_(degree), c_(std::move(coeffs)) {
  if (degree < 0 || c_.size() != static_cast<std::size_t>(degree + 1))
    throw std::invalid_argument("binary form needs degree+1 coefficients");
}

BinaryForm BinaryForm::from_multi(const MultiPoly& p, std::size_t l_var, std::size_t m_var) {
  if (p.is_zero()) return BinaryForm(0, {Rational(0)});
  if (!p.is_homogeneous()) throw std::invalid_argument("binary form must be homogeneous");
  int d = p.total_degree();
  std::vector<Rational> c(d + 1);
  for (const auto& [m, coef] : p.terms()) {
    if (m.exp[l_var] + m.exp[m_var] != m.degree) throw std::invalid_argument("binary form uses extra variables");
    c[m.exp[l_var]] += coef;
  }
  return BinaryForm(d, std::move(c));
}

bool BinaryForm::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

UPoly BinaryForm::dehomogenize() const { return UPoly(c_); }

int BinaryForm::multiplicity_at_infinity() const { return degree_ - dehomogenize().degree(); }

BinaryForm BinaryForm::primitive() const {
  if (is_zero()) return *this;
  UPoly p = dehomogenize().primitive();
  std::vector<Rational> c(degree_ + 1);
  for (int i = 0; i <= p.degree(); ++i) c[i] = p[i];
  return BinaryForm(degree_, std::move(c));
}

MultiPoly BinaryForm::to_multi(const VarSet& vars, std::size_t l_var, std::size_t m_var) const {
  std::vector<MultiPoly::Term> terms;
  for (int i = 0; i <= degree_; ++i) {
    if (sgn(c_[i]) == 0) continue;
    Monomial m;
    m.set(l_var, i);
    m.set(m_var, degree_ - i);
    terms.emplace_back(m, c_[i]);
  }
  return MultiPoly(vars, std::move(terms));
}

std::string BinaryForm::to_string() const { return to_multi(VarSet({"l", "m"}), 0, 1).to_string(); }

BinaryForm binary_form_gcd(const std::vector<BinaryForm>& forms) {
  std::optional<UPoly> g;
  int mu = 0;
  bool any = false;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    UPoly d = f.dehomogenize();
    int inf = f.degree() - d.degree();
    if (!any) {
      g = d;
      mu = inf;
      any = true;
    } else {
      g = gcd(*g, d);
      mu = std::min(mu, inf);
    }
  }
  if (!any) throw std::invalid_argument("gcd of all-zero binary forms");
  UPoly p = g->primitive();
  int deg = p.degree() + mu;
  std::vector<Rational> c(deg + 1);
  for (int i = 0; i <= p.degree(); ++i) c[i] = p[i];
  return BinaryForm(deg, std::move(c));
}

BinaryRoots binary_form_roots(const BinaryForm& f) {
  if (f.is_zero()) throw ZeroPolynomialError();
  BinaryRoots r;
  UPoly d = f.dehomogenize();
  r.at_infinity = f.degree() - d.degree();
  if (d.degree() > 0) r.finite = isolate_real_roots(d);
  int real = r.at_infinity;
  for (const auto& iv : r.finite) real += iv.multiplicity;
  r.nonreal = f.degree() - real;
  return r;
}

}  // namespace plab
