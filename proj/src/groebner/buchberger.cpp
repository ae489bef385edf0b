#include <algorithm>
#include <chrono>
#include <tuple>

#include "plueckerlab/groebner/ideal.hpp"
#include "plueckerlab/parallel.hpp"

namespace plab {

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

class Engine {
 public:
  Engine(const MonomialOrder& order, const GbOptions& opts) : order_(order), opts_(opts) {}

  void add_input(gb::ZPoly h) { insert(std::move(h)); }

  void run() {
    while (!pairs_.empty()) {
      // Normal strategy: all pairs of the lowest lcm degree form one batch.
      unsigned deg = pairs_.front().lcm.degree;
      for (const auto& p : pairs_) deg = std::min<unsigned>(deg, p.lcm.degree);
      std::vector<Pair> batch;
      std::vector<Pair> rest;
      for (auto& p : pairs_) (p.lcm.degree == deg ? batch : rest).push_back(p);
      pairs_ = std::move(rest);
      std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) {
        if (a.sugar != b.sugar) return a.sugar < b.sugar;
        int c = order_.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });
      std::vector<gb::ZPoly> sp;
      sp.reserve(batch.size());
      for (const auto& p : batch) sp.push_back(gb::spoly(polys_[p.i], polys_[p.j], order_));
      stats.pairs_reduced += batch.size();
      auto snapshot = active_ptrs();
      const std::size_t known = polys_.size();
      sp = opts_.parallel ? gb::reduce_batch(std::move(sp), snapshot, order_, false)
                          : gb::reduce_batch_serial(std::move(sp), snapshot, order_, false);
      for (auto& r : sp) {
        if (!r.is_zero()) {
          if (polys_.size() != known) gb::reduce(r, active_ptrs(), order_, false);
        }
        if (r.is_zero()) {
          ++stats.zero_reductions;
          continue;
        }
        insert(std::move(r));
      }
    }
  }

  /// Minimal, tail-reduced, sorted by leading monomial (ascending).
  std::vector<gb::ZPoly> reduced_basis() const {
    std::vector<gb::ZPoly> g;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) g.push_back(polys_[k]);
    std::sort(g.begin(), g.end(), [&](const gb::ZPoly& a, const gb::ZPoly& b) { return order_.compare(a.lm(), b.lm()) < 0; });
    std::vector<const gb::ZPoly*> ptrs;
    for (const auto& p : g) ptrs.push_back(&p);
    std::vector<gb::ZPoly> out(g.size());
    const long n = static_cast<long>(g.size());
    if (opts_.parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(parallel::thread_count())
      for (long k = 0; k < n; ++k) {
        out[k] = g[k];
        gb::reduce(out[k], ptrs, order_, true, nullptr, 1);
      }
    } else {
      for (long k = 0; k < n; ++k) {
        out[k] = g[k];
        gb::reduce(out[k], ptrs, order_, true, nullptr, 1);
      }
    }
    return out;
  }

  GbStats stats;

 private:
  std::vector<const gb::ZPoly*> active_ptrs() const {
    std::vector<const gb::ZPoly*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(&polys_[k]);
    return out;
  }

  // Gebauer-Moeller update for a new element.
  void insert(gb::ZPoly h) {
    const std::size_t k = polys_.size();
    polys_.push_back(std::move(h));
    active_.push_back(true);
    const Monomial lh = polys_[k].lm();

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> c;
    for (std::size_t g = 0; g < k; ++g)
      if (active_[g]) c.push_back({g, lh.lcm(polys_[g].lm()), lh.coprime(polys_[g].lm())});

    // Chain criterion among the new pairs; coprime pairs shield others but are dropped.
    std::vector<Cand> d;
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool keep = c[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < c.size() && keep; ++b)
          if (c[b].lcm.divides(c[a].lcm)) keep = false;
        for (const auto& e : d)
          if (keep && e.lcm.divides(c[a].lcm)) keep = false;
      }
      if (keep) d.push_back(c[a]);
    }

    std::vector<Pair> kept;
    for (auto& p : pairs_) {
      if (lh.divides(p.lcm) && lh.lcm(polys_[p.i].lm()) != p.lcm && lh.lcm(polys_[p.j].lm()) != p.lcm) continue;
      kept.push_back(p);
    }
    pairs_ = std::move(kept);
    for (const auto& e : d) {
      if (e.coprime) continue;
      const auto& g = polys_[e.g];
      unsigned s = std::max(g.sugar + (e.lcm / g.lm()).degree, polys_[k].sugar + (e.lcm / lh).degree);
      pairs_.push_back({e.g, k, e.lcm, s});
      ++stats.pairs_created;
    }
    for (std::size_t g = 0; g < k; ++g)
      if (active_[g] && lh.divides(polys_[g].lm())) active_[g] = false;
  }

  MonomialOrder order_;
  GbOptions opts_;
  std::vector<gb::ZPoly> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

Ideal buchberger(const Ideal& ideal, const MonomialOrder& order, const GbOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  if (ideal.vars().size() > kMaxVars) throw std::invalid_argument("too many variables");

  std::vector<gb::ZPoly> input;
  for (const auto& g : ideal.generators())
    if (!g.is_zero()) input.push_back(gb::to_zpoly(g, order));
  std::stable_sort(input.begin(), input.end(), [&](const gb::ZPoly& a, const gb::ZPoly& b) {
    if (a.lm().degree != b.lm().degree) return a.lm().degree < b.lm().degree;
    return order.compare(a.lm(), b.lm()) < 0;
  });

  Engine eng(order, opts);
  {
    std::vector<gb::ZPoly> placed;
    for (auto& f : input) {
      std::vector<const gb::ZPoly*> ptrs;
      for (const auto& p : placed) ptrs.push_back(&p);
      gb::reduce(f, ptrs, order, false);
      if (f.is_zero()) continue;
      placed.push_back(f);
      eng.add_input(std::move(f));
    }
  }
  eng.run();

  auto basis = std::make_shared<gb::Basis>();
  basis->order = order;
  basis->polys = eng.reduced_basis();
  basis->stats = eng.stats;

  if (opts.certify) {
    std::vector<const gb::ZPoly*> ptrs;
    for (const auto& p : basis->polys) ptrs.push_back(&p);
    std::vector<gb::ZPoly> checks;
    for (std::size_t i = 0; i < basis->polys.size(); ++i)
      for (std::size_t j = i + 1; j < basis->polys.size(); ++j) {
        const auto& a = basis->polys[i];
        const auto& b = basis->polys[j];
        if (a.lm().coprime(b.lm())) continue;
        checks.push_back(gb::spoly(a, b, order));
      }
    basis->stats.pairs_certified = checks.size();
    for (const auto& g : ideal.generators())
      if (!g.is_zero()) checks.push_back(gb::to_zpoly(g, order));
    checks = opts.parallel ? gb::reduce_batch(std::move(checks), ptrs, order, false)
                           : gb::reduce_batch_serial(std::move(checks), ptrs, order, false);
    for (const auto& r : checks)
      if (!r.is_zero()) throw ContractViolation("Groebner basis certification failed");
  }

  for (const auto& p : basis->polys) basis->multi.push_back(gb::to_multi(p, ideal.vars()));
  basis->stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  Ideal out = ideal;
  out.gb_ = std::move(basis);
  return out;
}

}  // namespace plab
