#include "plueckerlab/groebner/zpoly.hpp"

#include <algorithm>

#include "plueckerlab/parallel.hpp"

namespace plab::gb {

ZPoly to_zpoly(const MultiPoly& p, const MonomialOrder& order, Rational* factor) {
  ZPoly z;
  if (p.is_zero()) {
    if (factor) *factor = 1;
    return z;
  }
  Rational f = 1 / p.content();
  z.terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    Rational v = c * f;
    z.terms.push_back({m, v.get_num()});
  }
  std::sort(z.terms.begin(), z.terms.end(), [&](const ZTerm& a, const ZTerm& b) { return order.compare(a.m, b.m) > 0; });
  if (sgn(z.lc()) < 0) {
    for (auto& t : z.terms) t.c = -t.c;
    f = -f;
  }
  z.sugar = static_cast<unsigned>(p.total_degree());
  if (factor) *factor = f;
  return z;
}

MultiPoly to_multi(const ZPoly& p, const VarSet& vars) {
  std::vector<MultiPoly::Term> terms;
  terms.reserve(p.terms.size());
  for (const auto& t : p.terms) terms.emplace_back(t.m, Rational(t.c));
  return MultiPoly(vars, std::move(terms));
}

namespace {

Integer content_of(const std::vector<ZTerm>& terms, std::size_t n) {
  Integer g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), terms[i].c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void divide_content(std::vector<ZTerm>& terms, std::size_t n, const Integer& g) {
  for (std::size_t i = 0; i < n; ++i) mpz_divexact(terms[i].c.get_mpz_t(), terms[i].c.get_mpz_t(), g.get_mpz_t());
}

// Reusable output slot: assigning into existing ZTerms keeps their limbs.
struct Sink {
  std::vector<ZTerm>& v;
  std::size_t n = 0;
  ZTerm& next() {
    if (n == v.size()) v.emplace_back();
    return v[n++];
  }
};

}  // namespace

Rational make_primitive(ZPoly& p) {
  if (p.is_zero()) return 1;
  Integer g = content_of(p.terms, p.terms.size());
  Rational f(1);
  if (g != 1) {
    divide_content(p.terms, p.terms.size(), g);
    f = Rational(1, 1) / Rational(g);
  }
  if (sgn(p.lc()) < 0) {
    for (auto& t : p.terms) t.c = -t.c;
    f = -f;
  }
  return f;
}

ZPoly spoly(const ZPoly& f, const ZPoly& g, const MonomialOrder& order) {
  Monomial l = f.lm().lcm(g.lm());
  Monomial qf = l / f.lm(), qg = l / g.lm();
  Integer d;
  mpz_gcd(d.get_mpz_t(), f.lc().get_mpz_t(), g.lc().get_mpz_t());
  Integer af = g.lc() / d, ag = f.lc() / d;  // af*lc(f) == ag*lc(g)
  ZPoly s;
  s.sugar = std::max(f.sugar + qf.degree, g.sugar + qg.degree);
  std::size_t i = 1, j = 1;
  while (i < f.terms.size() || j < g.terms.size()) {
    int c;
    Monomial mf, mg;
    if (i < f.terms.size()) mf = f.terms[i].m * qf;
    if (j < g.terms.size()) mg = g.terms[j].m * qg;
    if (i == f.terms.size()) c = -1;
    else if (j == g.terms.size()) c = 1;
    else c = order.compare(mf, mg);
    if (c > 0) {
      s.terms.push_back({mf, f.terms[i].c * af});
      ++i;
    } else if (c < 0) {
      s.terms.push_back({mg, -(g.terms[j].c * ag)});
      ++j;
    } else {
      Integer v = f.terms[i].c * af - g.terms[j].c * ag;
      if (v != 0) s.terms.push_back({mf, std::move(v)});
      ++i;
      ++j;
    }
  }
  make_primitive(s);
  return s;
}

void reduce(ZPoly& f, std::span<const ZPoly* const> reducers, const MonomialOrder& order, bool full,
            Rational* scale, std::size_t start) {
  std::vector<ZTerm> cur = std::move(f.terms);
  std::vector<ZTerm> nxt;
  std::size_t ncur = cur.size();
  std::size_t pos = std::min(start, ncur);  // terms before pos are irreducible
  Rational sc = 1;
  Integer a, b, d;
  unsigned steps = 0;
  while (pos < ncur) {
    const Monomial lead = cur[pos].m;
    const ZPoly* g = nullptr;
    for (const ZPoly* r : reducers)
      if (r->lm().divides(lead)) {
        g = r;
        break;
      }
    if (!g) {
      if (!full) break;
      ++pos;
      continue;
    }
    const Monomial q = lead / g->lm();
    mpz_gcd(d.get_mpz_t(), g->lc().get_mpz_t(), cur[pos].c.get_mpz_t());
    mpz_divexact(a.get_mpz_t(), g->lc().get_mpz_t(), d.get_mpz_t());
    mpz_divexact(b.get_mpz_t(), cur[pos].c.get_mpz_t(), d.get_mpz_t());
    if (sgn(a) < 0) {  // keep the scale positive
      a = -a;
      b = -b;
    }
    const bool unit = (a == 1);
    Sink out{nxt};
    for (std::size_t i = 0; i < pos; ++i) {
      ZTerm& t = out.next();
      t.m = cur[i].m;
      if (unit) t.c = cur[i].c;
      else mpz_mul(t.c.get_mpz_t(), cur[i].c.get_mpz_t(), a.get_mpz_t());
    }
    std::size_t i = pos + 1, j = 1;
    const auto& gt = g->terms;
    Monomial mg;
    if (j < gt.size()) mg = gt[j].m * q;
    while (i < ncur || j < gt.size()) {
      int c;
      if (i == ncur) c = -1;
      else if (j == gt.size()) c = 1;
      else c = order.compare(cur[i].m, mg);
      if (c > 0) {
        ZTerm& t = out.next();
        t.m = cur[i].m;
        if (unit) t.c = cur[i].c;
        else mpz_mul(t.c.get_mpz_t(), cur[i].c.get_mpz_t(), a.get_mpz_t());
        ++i;
      } else if (c < 0) {
        ZTerm& t = out.next();
        t.m = mg;
        mpz_mul(t.c.get_mpz_t(), gt[j].c.get_mpz_t(), b.get_mpz_t());
        mpz_neg(t.c.get_mpz_t(), t.c.get_mpz_t());
        ++j;
        if (j < gt.size()) mg = gt[j].m * q;
      } else {
        ZTerm& t = out.next();
        t.m = mg;
        if (unit) t.c = cur[i].c;
        else mpz_mul(t.c.get_mpz_t(), cur[i].c.get_mpz_t(), a.get_mpz_t());
        mpz_submul(t.c.get_mpz_t(), gt[j].c.get_mpz_t(), b.get_mpz_t());
        if (sgn(t.c) == 0) --out.n;
        ++i;
        ++j;
        if (j < gt.size()) mg = gt[j].m * q;
      }
    }
    f.sugar = std::max(f.sugar, g->sugar + q.degree);
    std::swap(cur, nxt);
    ncur = out.n;
    if (!unit) sc *= a;
    if (++steps % 4 == 0 && ncur > 0) {
      Integer cg = content_of(cur, ncur);
      if (cg > 1) {
        divide_content(cur, ncur, cg);
        sc /= cg;
      }
    }
  }
  cur.resize(ncur);
  f.terms = std::move(cur);
  sc *= make_primitive(f);
  if (scale) *scale = sc;
}

std::vector<ZPoly> reduce_batch(std::vector<ZPoly> batch, std::span<const ZPoly* const> reducers,
                                const MonomialOrder& order, bool full) {
  const long n = static_cast<long>(batch.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(parallel::thread_count())
  for (long i = 0; i < n; ++i) reduce(batch[static_cast<std::size_t>(i)], reducers, order, full);
  return batch;
}

std::vector<ZPoly> reduce_batch_serial(std::vector<ZPoly> batch, std::span<const ZPoly* const> reducers,
                                       const MonomialOrder& order, bool full) {
  for (auto& p : batch) reduce(p, reducers, order, full);
  return batch;
}

}  // namespace plab::gb
