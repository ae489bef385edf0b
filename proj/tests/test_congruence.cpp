#include <doctest.h>

#include <random>

#include "plueckerlab/arith/sampling.hpp"
#include "plueckerlab/congruence/congruence.hpp"
#include "plueckerlab/io/fixtures.hpp"
#include "plueckerlab/kernels/minors.hpp"

using namespace plab;

namespace {

Congruence fixture(const std::string& name) { return build_congruence(io::builtin_web(name).web); }

QVector off_focal_point(const Congruence& c, std::mt19937_64& rng) {
  for (;;) {
    QVector p = draw_vector(rng, c.n() + 1, 7);
    if (!is_zero_vector(p) && incidence_corank(c, p) == 1) return p;
  }
}

}  // namespace

TEST_CASE("expected focal degrees") {
  CHECK(expected_degree(3) == 2);
  CHECK(expected_degree(4) == 4);
  CHECK(expected_degree(5) == 7);
}

TEST_CASE("validation of webs") {
  SkewWeb w{3, {SkewMatrix::elementary(4, 0, 1), SkewMatrix::elementary(4, 0, 1, 2)}};
  CHECK_THROWS_AS(w.validate(), DependentWeb);
  SkewWeb short_web{4, {SkewMatrix::elementary(5, 0, 1)}};
  CHECK_THROWS(short_web.validate());
}

TEST_CASE("order one: a unique line through general points") {
  for (const char* name : {"wave", "n4-generic", "n4-three-planes", "palatini-generic"}) {
    auto c = fixture(name);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 10; ++t) {
      QVector p = off_focal_point(c, rng);
      auto l = line_through_point(c, p);
      CHECK(l.satisfies_relations());
      CHECK(l.passes_through(p));
      CHECK(in_congruence(c, l));
    }
  }
}

TEST_CASE("focus forms have degree n-1") {
  for (const char* name : {"wave", "n4-generic", "palatini-generic"}) {
    auto c = fixture(name);
    std::mt19937_64 rng(5);
    for (int t = 0; t < 5; ++t) {
      auto f = foci_on_line(c, line_through_point(c, off_focal_point(c, rng)));
      CHECK_FALSE(f.line_in_focal);
      CHECK(f.form.degree() == static_cast<int>(c.n()) - 1);
      auto s = focus_form_shortcut(c, f.line);
      if (!s.is_zero()) CHECK(s.primitive().coeffs() == f.form.primitive().coeffs());
    }
  }
}

TEST_CASE("wave: the foci are the meeting points with the two fixed lines") {
  auto c = fixture("wave");
  auto f = foci_on_line(c, line_through_point(c, {1, 3, 5, 2}));
  int finite = static_cast<int>(f.roots.finite.size());
  CHECK(finite + f.roots.at_infinity == 2);
  CHECK(f.nonreal == 0);
}

TEST_CASE("lines outside the congruence are rejected") {
  auto c = fixture("wave");
  PluckerVector l = plucker_from_points({1, 0, 0, 0}, {0, 0, 1, 7});
  if (!in_congruence(c, l)) CHECK_THROWS_AS(foci_on_line(c, l), NotInCongruence);
}

TEST_CASE("pencil plane at a focal point of a split web") {
  auto c = fixture("af-k1");
  QVector p{0, 0, 1, 2, 3, 4};
  CHECK(incidence_corank(c, p) == 2);
  auto plane = pencil_plane(c, p);
  CHECK(plane.dimension() == 2);
  CHECK(plane.contains(p));
  CHECK(residual_plane_curve_degree(c, p) == 3);
  CHECK_THROWS_AS(pencil_plane(c, {1, 2, 3, 5, 7, 11}), std::invalid_argument);
}

TEST_CASE("projectivities carry the focal locus along") {
  auto c = fixture("wave");
  QMatrix g = from_rows({{1, 1, 0, 0}, {0, 1, 2, 0}, {0, 0, 1, 1}, {1, 0, 0, 3}}, 4);
  auto moved = apply_projectivity(c, g);
  CHECK(ideals_equal(focal_ideal(moved), transform_ideal(focal_ideal(c), g)));
  QVector p{1, 3, 5, 2};
  auto l = line_through_point(c, p);
  auto l2 = line_through_point(moved, g * p);
  auto [a, b] = l.points();
  CHECK(l2.same_line(plucker_from_points(g * a, g * b)));
  CHECK_THROWS_AS(apply_projectivity(c, QMatrix(4, 4, Rational(0))), SingularProjectivity);
}

TEST_CASE("serial and parallel minors agree") {
  auto c = fixture("palatini-generic");
  CHECK(maximal_minors(c.matrix()) == maximal_minors_serial(c.matrix()));
  CHECK(focal_generators(c, true) == focal_generators(c, false));
}
