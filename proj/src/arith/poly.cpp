#include "plueckerlab/arith/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace plab {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(std::size_t index, unsigned power) {
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVars) throw std::out_of_range("monomial variable index out of range");
  if (e > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
  degree = static_cast<std::uint16_t>(degree - exp[i] + e);
  exp[i] = static_cast<std::uint8_t>(e);
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(exp[i]) + other.exp[i];
    if (e > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
    r.exp[i] = static_cast<std::uint8_t>(e);
  }
  r.degree = static_cast<std::uint16_t>(degree + other.degree);
  return r;
}

Monomial operator/(const Monomial& num, const Monomial& den) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = num.exp[i] - den.exp[i];
  r.degree = static_cast<std::uint16_t>(num.degree - den.degree);
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp[i] = std::max(exp[i], other.exp[i]);
    d += r.exp[i];
  }
  r.degree = static_cast<std::uint16_t>(d);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  unsigned d = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exp[i] = std::min(exp[i], other.exp[i]);
    d += r.exp[i];
  }
  r.degree = static_cast<std::uint16_t>(d);
  return r;
}

// ---------------------------------------------------------------- VarSet

VarSet::VarSet(std::vector<std::string> names) {
  if (names.size() > kMaxVars)
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables supported");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw std::invalid_argument("duplicate variable name " + names[i]);
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarSet VarSet::projective(int n, const std::string& stem) {
  std::vector<std::string> names;
  for (int i = 0; i <= n; ++i) names.push_back(stem + std::to_string(i));
  return VarSet(std::move(names));
}

VarSet VarSet::numbered(int k, const std::string& stem, int first) {
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back(stem + std::to_string(first + i));
  return VarSet(std::move(names));
}

const std::vector<std::string>& VarSet::names() const {
  static const std::vector<std::string> empty;
  return names_ ? *names_ : empty;
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  const auto& ns = names();
  for (std::size_t i = 0; i < ns.size(); ++i)
    if (ns[i] == name) return i;
  return std::nullopt;
}

std::size_t VarSet::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
  return *i;
}

VarSet VarSet::operator+(const VarSet& other) const {
  std::vector<std::string> all = names();
  all.insert(all.end(), other.names().begin(), other.names().end());
  return VarSet(std::move(all));
}

// ---------------------------------------------------------------- MultiPoly

namespace {

bool term_greater(const MultiPoly::Term& a, const MultiPoly::Term& b) {
  return grevlex_cmp(a.first, b.first) > 0;
}

}  // namespace

MultiPoly::MultiPoly(VarSet vars, const Rational& constant) : vars_(std::move(vars)) {
  if (!plab::is_zero(constant)) terms_.emplace_back(Monomial{}, constant);
}

MultiPoly::MultiPoly(VarSet vars, std::vector<Term> terms) : vars_(std::move(vars)) {
  std::sort(terms.begin(), terms.end(), term_greater);
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().first == t.first) {
      terms_.back().second += t.second;
      if (plab::is_zero(terms_.back().second)) terms_.pop_back();
    } else if (!plab::is_zero(t.second)) {
      terms_.push_back(std::move(t));
    }
  }
  for (const auto& t : terms_)
    for (std::size_t i = vars_.size(); i < kMaxVars; ++i)
      if (t.first.exp[i] != 0) throw std::invalid_argument("monomial uses a variable outside the set");
}

MultiPoly MultiPoly::variable(const VarSet& vars, std::size_t index) {
  if (index >= vars.size()) throw std::out_of_range("variable index");
  return monomial(vars, Monomial::var(index), 1);
}

MultiPoly MultiPoly::variable(const VarSet& vars, std::string_view name) {
  return variable(vars, vars.require(name));
}

MultiPoly MultiPoly::monomial(const VarSet& vars, const Monomial& m, const Rational& c) {
  MultiPoly p(vars);
  if (!plab::is_zero(c)) p.terms_.emplace_back(m, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree == 0);
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.front().first.degree;  // grevlex is degree-compatible
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  auto d = terms_.front().first.degree;
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.first.degree == d; });
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
    return grevlex_cmp(t.first, key) > 0;
  });
  if (it != terms_.end() && it->first == m) return it->second;
  return 0;
}

unsigned MultiPoly::degree_in(std::size_t i) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.first.exp[i]);
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

namespace {

std::vector<MultiPoly::Term> merge_terms(const std::vector<MultiPoly::Term>& a,
                                         const std::vector<MultiPoly::Term>& b, bool subtract) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : grevlex_cmp(a[i].first, b[j].first);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.emplace_back(b[j].first, subtract ? Rational(-b[j].second) : b[j].second);
      ++j;
    } else {
      Rational s = subtract ? Rational(a[i].second - b[j].second) : Rational(a[i].second + b[j].second);
      if (!plab::is_zero(s)) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_same(other);
  terms_ = merge_terms(terms_, other.terms_, false);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_same(other);
  terms_ = merge_terms(terms_, other.terms_, true);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (plab::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same(b);
  MultiPoly r(a.vars_);
  if (a.is_zero() || b.is_zero()) return r;
  if (b.size() == 1) return a.mul_term(b.terms_[0].first, b.terms_[0].second);
  if (a.size() == 1) return b.mul_term(a.terms_[0].first, a.terms_[0].second);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  Rational prod;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      acc[ma * mb] += prod;
    }
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!plab::is_zero(c)) r.terms_.emplace_back(m, std::move(c));
  std::sort(r.terms_.begin(), r.terms_.end(), term_greater);
  return r;
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const Rational& c) const {
  MultiPoly r(vars_);
  if (plab::is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.emplace_back(t.first * m, t.second * c);
  return r;  // multiplication by a monomial preserves grevlex order
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result(vars_, Rational(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!(a.vars_ == b.vars_)) return false;
  return a.terms_ == b.terms_;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size()) throw std::invalid_argument("evaluation point has wrong dimension");
  Rational sum = 0;
  std::vector<std::vector<Rational>> powers(vars_.size());
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      unsigned e = m.exp[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Rational(1));
      while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
      v *= pw[e];
    }
    sum += v;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != vars_.size()) throw std::invalid_argument("substitution needs one image per variable");
  if (images.empty()) return *this;
  const VarSet& target = images[0].vars();
  for (const auto& im : images)
    if (!(im.vars() == target)) throw VarSetMismatch();
  std::vector<std::vector<MultiPoly>> powers(vars_.size());
  std::vector<Term> acc;
  for (const auto& [m, c] : terms_) {
    MultiPoly v(target, c);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      unsigned e = m.exp[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.emplace_back(target, Rational(1));
      while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
      v = v * pw[e];
    }
    acc.insert(acc.end(), v.terms_.begin(), v.terms_.end());
  }
  return MultiPoly(target, std::move(acc));
}

MultiPoly MultiPoly::rename_into(const VarSet& target) const {
  std::vector<std::optional<std::size_t>> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) map[i] = target.index_of(vars_.name(i));
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    Monomial r;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (m.exp[i] == 0) continue;
      if (!map[i]) target.require(vars_.name(i));
      r.set(*map[i], m.exp[i]);
    }
    out.emplace_back(r, c);
  }
  return MultiPoly(target, std::move(out));
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  if (var >= vars_.size()) throw std::out_of_range("derivative variable");
  std::vector<Term> out;
  for (const auto& [m, c] : terms_) {
    unsigned e = m.exp[var];
    if (e == 0) continue;
    Monomial r = m;
    r.set(var, e - 1);
    out.emplace_back(r, c * e);
  }
  return MultiPoly(vars_, std::move(out));
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return 1;
  Integer g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.second.get_den_mpz_t());
  }
  Rational q(g, l);
  q.canonicalize();
  return q;
}

MultiPoly MultiPoly::primitive() const {
  if (terms_.empty()) return *this;
  Rational f = 1 / content();
  if (sgn(leading_coefficient()) < 0) f = -f;
  return *this * f;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (a != 1 || m.degree == 0) {
      os << plab::to_string(a);
      wrote = true;
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      unsigned e = m.exp[i];
      if (e == 0) continue;
      if (wrote) os << "*";
      os << vars_.name(i);
      if (e > 1) os << "^" << e;
      wrote = true;
    }
  }
  return os.str();
}

std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (!(a.vars() == b.vars())) throw VarSetMismatch();
  MultiPoly rem = a;
  std::vector<MultiPoly::Term> quot;
  const Monomial& lb = b.leading_monomial();
  const Rational& cb = b.leading_coefficient();
  while (!rem.is_zero()) {
    const Monomial& lr = rem.leading_monomial();
    if (!lb.divides(lr)) return std::nullopt;
    Monomial qm = lr / lb;
    Rational qc = rem.leading_coefficient() / cb;
    rem -= b.mul_term(qm, qc);
    quot.emplace_back(qm, qc);
  }
  return MultiPoly(a.vars(), std::move(quot));
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  throw std::logic_error("unreachable");
}

MultiPoly partial_derivative(const MultiPoly& p, std::string_view var) {
  return p.derivative(p.vars().require(var));
}

}  // namespace plab
