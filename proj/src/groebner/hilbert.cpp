#include "plueckerlab/groebner/hilbert.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace plab {

namespace {

using IPoly = std::vector<Integer>;

void trim(IPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IPoly add(IPoly a, const IPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

IPoly shift(const IPoly& a, unsigned e) {
  if (a.empty()) return a;
  IPoly out(e, 0);
  out.insert(out.end(), a.begin(), a.end());
  return out;
}

IPoly mul(const IPoly& a, const IPoly& b) {
  if (a.empty() || b.empty()) return {};
  IPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.exp < b.exp;
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

IPoly numerator_rec(std::vector<Monomial> gens, std::size_t nvars) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().degree == 0) return {};

  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j) coprime = gens[i].coprime(gens[j]);
  if (coprime) {
    IPoly out{1};
    for (const auto& g : gens) {
      IPoly f(g.degree + 1u, 0);
      f[0] = 1;
      f[g.degree] = -1;
      out = mul(out, f);
    }
    return out;
  }

  // Pivot x^e on the variable shared by the most generators, e the median exponent.
  std::size_t best = 0, best_count = 0;
  for (std::size_t v = 0; v < nvars; ++v) {
    std::size_t c = 0;
    for (const auto& g : gens) c += g.exp[v] != 0;
    if (c > best_count) {
      best_count = c;
      best = v;
    }
  }
  std::vector<unsigned> exps;
  for (const auto& g : gens)
    if (g.exp[best] != 0) exps.push_back(g.exp[best]);
  std::sort(exps.begin(), exps.end());
  const unsigned e = exps[(exps.size() - 1) / 2];
  const Monomial p = Monomial::var(best, e);

  std::vector<Monomial> plus = gens;
  plus.push_back(p);
  std::vector<Monomial> colon;
  for (const auto& g : gens) colon.push_back(g / g.gcd(p));
  return add(numerator_rec(std::move(plus), nvars), shift(numerator_rec(std::move(colon), nvars), e));
}

Integer binomial(const Integer& n, unsigned k) {
  if (n < 0) return 0;
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

// Coefficients in s of C(s + a, d) = (s+a)(s+a-1)...(s+a-d+1)/d!.
std::vector<Rational> binomial_poly(const Integer& a, unsigned d) {
  std::vector<Rational> p{Rational(1)};
  Integer fact = 1;
  for (unsigned i = 0; i < d; ++i) {
    Rational c = Rational(a - i);
    std::vector<Rational> q(p.size() + 1, Rational(0));
    for (std::size_t j = 0; j < p.size(); ++j) {
      q[j] += p[j] * c;
      q[j + 1] += p[j];
    }
    p = std::move(q);
    fact *= (i + 1);
  }
  for (auto& c : p) c /= Rational(fact);
  return p;
}

}  // namespace

std::vector<Integer> hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars) {
  return numerator_rec(std::move(gens), nvars);
}

HilbertData hilbert_from_monomials(const std::vector<Monomial>& lead, std::size_t nvars) {
  HilbertData h;
  h.nvars = nvars;
  h.first_numerator = hilbert_numerator(lead, nvars);
  IPoly q = h.first_numerator;
  int d = static_cast<int>(nvars);
  // Divide by (1 - t) while Q(1) = 0.
  while (!q.empty() && d > 0) {
    Integer s = 0;
    for (const auto& c : q) s += c;
    if (s != 0) break;
    IPoly r(q.size() - 1, 0);
    Integer acc = 0;
    for (std::size_t i = 0; i + 1 < q.size(); ++i) {
      acc += q[i];
      r[i] = acc;
    }
    trim(r);
    q = std::move(r);
    --d;
  }
  h.numerator = q;
  unsigned maxdeg = 0;
  for (const auto& m : lead) maxdeg = std::max<unsigned>(maxdeg, m.degree);
  h.regularity_bound = static_cast<int>(maxdeg + nvars);
  if (q.empty()) {  // unit ideal
    h.krull_dimension = 0;
    h.index_of_regularity = 0;
    return h;
  }
  h.krull_dimension = d;
  for (const auto& c : q) h.degree += c;
  const int degq = static_cast<int>(q.size()) - 1;
  h.index_of_regularity = std::max(0, degq - d + 1);
  if (d == 0) return h;  // HP = 0
  h.polynomial.assign(static_cast<std::size_t>(d), Rational(0));
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (q[j] == 0) continue;
    auto b = binomial_poly(Integer(d - 1) - Integer(static_cast<unsigned long>(j)), static_cast<unsigned>(d - 1));
    for (std::size_t i = 0; i < b.size(); ++i) h.polynomial[i] += b[i] * Rational(q[j]);
  }
  while (!h.polynomial.empty() && h.polynomial.back() == 0) h.polynomial.pop_back();
  return h;
}

HilbertData hilbert_polynomial(const Ideal& I) {
  if (!I.is_homogeneous()) throw std::invalid_argument("Hilbert polynomial needs a homogeneous ideal");
  Ideal g = I.has_basis() ? I : buchberger(I);
  return hilbert_from_monomials(g.leading_monomials(), I.vars().size());
}

Integer hilbert_function(const HilbertData& h, int s) {
  if (s < 0) return 0;
  Integer v = 0;
  const auto& k = h.first_numerator;
  const unsigned n = static_cast<unsigned>(h.nvars);
  for (std::size_t j = 0; j < k.size() && static_cast<int>(j) <= s; ++j) {
    if (n == 0) {
      if (static_cast<int>(j) == s) v += k[j];
      continue;
    }
    v += k[j] * binomial(Integer(s - static_cast<int>(j) + static_cast<int>(n) - 1), n - 1);
  }
  return v;
}

Rational HilbertData::evaluate(const Rational& t) const {
  Rational v = 0;
  for (std::size_t i = polynomial.size(); i-- > 0;) v = v * t + polynomial[i];
  return v;
}

std::string format_polynomial(const std::vector<Rational>& coeffs, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const Rational& c = coeffs[i];
    if (c == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << " ";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return first ? "0" : os.str();
}

std::string HilbertData::polynomial_string() const { return format_polynomial(polynomial); }

Integer count_standard_monomials(const std::vector<Monomial>& lead, std::size_t nvars, int s) {
  if (s < 0) return 0;
  Integer count = 0;
  if (nvars == 0) {
    if (s != 0) return 0;
    for (const auto& m : lead)
      if (m.degree == 0) return 0;
    return 1;
  }
  Monomial m;
  // Enumerate compositions of s into nvars parts.
  std::vector<unsigned> e(nvars, 0);
  e[nvars - 1] = static_cast<unsigned>(s);
  for (;;) {
    for (std::size_t i = 0; i < nvars; ++i) m.set(i, e[i]);
    bool standard = true;
    for (const auto& l : lead)
      if (l.divides(m)) {
        standard = false;
        break;
      }
    if (standard) ++count;
    // next composition: move one unit from the last nonzero part (before the tail) leftward
    std::size_t k = nvars - 1;
    while (k > 0 && e[k] == 0) --k;
    if (k == 0) break;
    unsigned tail = e[k];
    e[k] = 0;
    e[k - 1] += 1;
    e[nvars - 1] = tail - 1;
  }
  return count;
}

std::optional<Rational> sectional_genus(const HilbertData& h) {
  if (h.projective_dimension() < 1) return std::nullopt;
  std::vector<Rational> p = h.polynomial;
  for (int r = 1; r < h.projective_dimension(); ++r) {
    // p(t) - p(t-1), with p(t-1) by Horner in (t-1)
    std::vector<Rational> shifted;
    for (std::size_t k = p.size(); k-- > 0;) {
      std::vector<Rational> next(shifted.size() + 1, Rational(0));
      for (std::size_t i = 0; i < shifted.size(); ++i) {
        next[i + 1] += shifted[i];
        next[i] -= shifted[i];
      }
      next[0] += p[k];
      shifted = std::move(next);
    }
    for (std::size_t i = 0; i < p.size(); ++i) p[i] -= shifted[i];
    while (!p.empty() && p.back() == 0) p.pop_back();
  }
  return Rational(1) - (p.empty() ? Rational(0) : p[0]);
}

}  // namespace plab
