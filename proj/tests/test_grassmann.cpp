#include <doctest.h>

#include <random>

#include "plueckerlab/arith/parse.hpp"
#include "plueckerlab/arith/sampling.hpp"
#include "plueckerlab/grassmann/plucker.hpp"
#include "plueckerlab/grassmann/skew.hpp"
#include "plueckerlab/kernels/minors.hpp"

using namespace plab;

namespace {

SkewMatrix random_skew(std::mt19937_64& rng, std::size_t size, int bound) {
  QMatrix m(size, size, Rational(0));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j) {
      m(i, j) = draw(rng, bound);
      m(j, i) = -m(i, j);
    }
  return SkewMatrix(m);
}

}  // namespace

TEST_CASE("Pfaffian squared is the determinant, 4x4 and 6x6") {
  std::mt19937_64 rng(7);
  for (std::size_t size : {2u, 4u, 6u})
    for (int t = 0; t < 50; ++t) {
      auto a = random_skew(rng, size, 9);
      Rational pf = pfaffian(a);
      CHECK(pf * pf == determinant(a.matrix()));
      CHECK(pf == pfaffian_matching(a.matrix()));
    }
}

TEST_CASE("symbolic 4x4 Pfaffian") {
  VarSet v({"a", "b", "c", "d", "e", "f"});
  Matrix<MultiPoly> m(4, 4, MultiPoly(v));
  const char* names[] = {"a", "b", "c", "d", "e", "f"};
  int k = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j, ++k) {
      m(i, j) = MultiPoly::variable(v, names[k]);
      m(j, i) = -m(i, j);
    }
  CHECK(pfaffian(m) == parse_poly("a*f - b*e + c*d", v));
  CHECK(pfaffian(m) * pfaffian(m) == determinant(m));
}

TEST_CASE("NotSkew and odd sizes") {
  QMatrix m(2, 2, Rational(0));
  m(0, 1) = 1;
  CHECK_THROWS_AS(SkewMatrix{m}, NotSkew);
  QMatrix odd(3, 3, Rational(0));
  CHECK_THROWS_AS(pfaffian(odd), std::invalid_argument);
}

TEST_CASE("strata by rank") {
  CHECK(in_dual_strata(SkewMatrix::elementary(6, 0, 1)) == DualStratum::on_g35);
  CHECK(in_dual_strata(SkewMatrix::elementary(6, 0, 1) + SkewMatrix::elementary(6, 2, 3)) ==
        DualStratum::on_dual_grassmannian);
  auto gen = SkewMatrix::elementary(6, 0, 1) + SkewMatrix::elementary(6, 2, 3) + SkewMatrix::elementary(6, 4, 5);
  CHECK(in_dual_strata(gen) == DualStratum::general);
  CHECK(pfaffian(gen) == 1);
  CHECK(in_dual_strata(SkewMatrix::zero(6)) == DualStratum::zero);
}

TEST_CASE("kernel 3-space of a decomposable form") {
  auto pi = kernel_space(SkewMatrix::elementary(6, 0, 1));
  CHECK(pi.dimension() == 3);
  CHECK(pi.contains(QVector{0, 0, 1, 0, 0, 0}));
  CHECK_FALSE(pi.contains(QVector{1, 0, 0, 0, 0, 0}));
  CHECK_THROWS_AS(kernel_space(SkewMatrix::elementary(6, 0, 1) + SkewMatrix::elementary(6, 2, 3)), RankMismatch);
}

TEST_CASE("Pluecker lines from points") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) {
    QVector p = draw_vector(rng, 6, 5), q = draw_vector(rng, 6, 5);
    if (rank(from_rows({p, q}, 6)) < 2) continue;
    auto l = plucker_from_points(p, q);
    CHECK(l.satisfies_relations());
    CHECK(l.passes_through(p));
    CHECK(l.passes_through(q));
    auto [a, b] = l.points();
    CHECK(l.same_line(plucker_from_points(a, b)));
    CHECK(skew_rank(l.to_skew()) == 2);
  }
  CHECK_THROWS_AS(plucker_from_points({1, 2, 3}, {2, 4, 6}), CoincidentPoints);
}

TEST_CASE("meeting complex pairs to zero exactly on meeting lines") {
  auto q = plucker_from_points({1, 0, 0, 0}, {0, 1, 0, 0});
  auto a = meeting_complex(q);
  CHECK(plucker_from_points({1, 1, 0, 0}, {0, 0, 1, 0}).pairing(a) == 0);
  CHECK(plucker_from_points({0, 0, 1, 0}, {0, 0, 0, 1}).pairing(a) != 0);
  CHECK(q.pairing(a) == 0);
}

TEST_CASE("subspaces from points and forms agree") {
  auto s = LinearSubspace::from_points(4, {{1, 0, 0, 0, 0}, {0, 1, 1, 0, 0}});
  auto t = LinearSubspace::from_forms(4, s.forms());
  CHECK(s == t);
  CHECK(s.dimension() == 1);
}
