#include <doctest.h>

#include <random>

#include "plueckerlab/arith/sampling.hpp"
#include "plueckerlab/congruence/congruence.hpp"
#include "plueckerlab/io/fixtures.hpp"
#include "plueckerlab/pde/flux.hpp"

using namespace plab;

namespace {

std::vector<Rational> exact_values(const std::vector<IsolatingInterval>& ivs) {
  std::vector<Rational> out;
  for (const auto& iv : ivs)
    if (auto q = rational_value(iv)) out.push_back(*q);
  return out;
}

const FluxSystem kWave = FluxSystem::parse({"-u2", "-u1"});

}  // namespace

TEST_CASE("wave eigen data") {
  auto e = eigen_data(kWave, {2, 1});
  CHECK(e.strictly_hyperbolic);
  CHECK(e.charpoly == UPoly({-1, 0, 1}));
  CHECK(exact_values(e.eigenvalues) == std::vector<Rational>{-1, 1});
  for (const auto& v : e.eigenvectors) REQUIRE(v);
}

TEST_CASE("rotation has no real eigenvalues") {
  auto e = eigen_data(FluxSystem::parse({"u2", "-u1"}), {1, 1});
  CHECK_FALSE(e.strictly_hyperbolic);
  CHECK(e.eigenvalues.empty());
  auto t = is_temple(FluxSystem::parse({"u2", "-u1"}), {{1, 1}});
  CHECK(t.verdict == "not_strictly_hyperbolic");
}

TEST_CASE("scalar law f = u^2") {
  FluxSystem s = FluxSystem::parse({"u1^2"});
  for (int u : {-3, 1, 4}) CHECK(exact_values(eigen_data(s, {u}).eigenvalues) == std::vector<Rational>{2 * u});
}

TEST_CASE("foci are the eigenvalues") {
  auto r = focus_eigenvalue_check(kWave, {2, 1});
  CHECK(r.matches);
  CHECK(exact_values(r.foci) == std::vector<Rational>{-1, 1});
  auto lin = focus_eigenvalue_check(FluxSystem::parse({"2*u1 + u2", "u1 + 3*u2"}), {5, -2});
  CHECK(lin.matches);
  CHECK(lin.focus_poly == lin.charpoly);
}

TEST_CASE("wave line family meets both fixed lines") {
  auto fam = line_family(kWave);
  auto w = io::builtin_web("wave").web;
  auto c = build_congruence(w);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) {
    auto l = fam.at(draw_vector(rng, 2, 9));
    CHECK(l.satisfies_relations());
    CHECK(in_congruence(c, l));
  }
}

TEST_CASE("Temple verdicts") {
  auto samples = sample_points(kWave, 10, 1);
  CHECK(is_temple(kWave, samples).verdict == "temple_at_samples");
  auto lin = FluxSystem::parse({"2*u1 + u2", "u1 + 3*u2"});
  CHECK(is_temple(lin, sample_points(lin, 10, 1)).verdict == "temple_at_samples");
  auto burgers = FluxSystem::parse({"1/2*u1^2"});
  auto b = is_temple(burgers, sample_points(burgers, 10, 1));
  CHECK(b.verdict == "not_temple");
  CHECK(b.witness);
  CHECK_THROWS_AS(is_temple(kWave, {}), std::invalid_argument);
}

TEST_CASE("rotating eigenvectors are not straight") {
  auto rot = FluxSystem::parse({"1/2*u1^2 + u2", "u1 + 1/2*u2^2"});
  auto samples = sample_points(rot, 10, 3);
  bool any_fail = false;
  for (std::size_t i = 0; i < 2; ++i) {
    auto s = straight_rarefaction_check(rot, samples, i);
    if (!s.holds) {
      any_fail = true;
      CHECK(s.witness);
    }
  }
  CHECK(any_fail);
}

TEST_CASE("reparametrization keeps the wave system Temple") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 10; ++t) {
    QMatrix p(2, 2, Rational(0));
    do {
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) p(i, j) = draw(rng, 4);
    } while (rank(p) < 2);
    auto s = reparametrize(kWave, p, draw_vector(rng, 2, 4));
    CHECK(is_temple(s, sample_points(s, 5, 2)).verdict == "temple_at_samples");
    auto e = eigen_data(s, {1, 2});
    CHECK(exact_values(e.eigenvalues) == std::vector<Rational>{-1, 1});
  }
}

TEST_CASE("congruence-induced fluxes are Temple") {
  auto wave = flux_of_congruence(build_congruence(io::builtin_web("wave").web));
  CHECK(is_temple(wave, sample_points(wave, 8, 4)).verdict == "temple_at_samples");
  auto planes = flux_of_congruence(build_congruence(io::builtin_web("n4-three-planes").web));
  CHECK(planes.m() == 3);
  CHECK(is_temple(planes, sample_points(planes, 6, 4)).verdict == "temple_at_samples");
}

TEST_CASE("rational fluxes skip poles") {
  auto s = FluxSystem::parse({"u1^2"}, "u1 - 1");
  CHECK_FALSE(s.is_polynomial());
  for (const auto& u : sample_points(s, 20, 8)) CHECK(u[0] != 1);
}

TEST_CASE("generic congruence fluxes are Temple where hyperbolic") {
  for (const char* name : {"n4-generic", "palatini-generic"}) {
    auto f = flux_of_congruence(build_congruence(io::builtin_web(name).web));
    std::vector<QVector> hyperbolic;
    for (const auto& u : sample_points(f, 40, 1))
      if (hyperbolic.size() < 4 && eigen_data(f, u).strictly_hyperbolic) hyperbolic.push_back(u);
    REQUIRE(hyperbolic.size() == 4);
    CHECK(is_temple(f, hyperbolic).verdict == "temple_at_samples");
  }
}
