#include <doctest.h>

#include <random>

#include "plueckerlab/arith/parse.hpp"
#include "plueckerlab/arith/sampling.hpp"
#include "plueckerlab/classify/classify5.hpp"
#include "plueckerlab/classify/points.hpp"
#include "plueckerlab/io/fixtures.hpp"

using namespace plab;

namespace {

SkewWeb web(const std::string& name) { return io::builtin_web(name).web; }

bool proportional_forms(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a * b.leading_coefficient() == b * a.leading_coefficient();
}

}  // namespace

TEST_CASE("block web: the cubic is a product of block Pfaffians") {
  SkewWeb w{5, {SkewMatrix::elementary(6, 0, 1), SkewMatrix::elementary(6, 2, 3), SkewMatrix::elementary(6, 4, 5),
                SkewMatrix::elementary(6, 0, 1) + SkewMatrix::elementary(6, 2, 3)}};
  auto s = pfaffian_cubic(w);
  CHECK(s.form == parse_poly("(a+d)*(b+d)*c", s.form.vars()));
  CHECK(split_cubic(s));
}

TEST_CASE("split of a(b^2 + cd)") {
  VarSet v({"a", "b", "c", "d"});
  PfaffianCubic s{parse_poly("a*b^2 + a*c*d", v), {}};
  auto sp = split_cubic(s);
  REQUIRE(sp);
  CHECK(proportional_forms(sp->linear, parse_poly("a", v)));
  CHECK(sp->linear * sp->quadric == s.form);
  CHECK(sp->quadric_rank == 3);
}

TEST_CASE("generic web: smooth cubic, no linear factor") {
  auto s = pfaffian_cubic(web("palatini-generic"));
  CHECK(s.form.total_degree() == 3);
  CHECK_FALSE(split_cubic(s));
  auto sing = singular_locus(s);
  CHECK(sing.dimension == -1);
  CHECK(sing.points.empty());
}

TEST_CASE("one rank-2 member gives a single singular point at (1:0:0:0)") {
  auto sing = singular_locus(pfaffian_cubic(web("af-k1")));
  CHECK(sing.dimension == 0);
  REQUIRE(sing.points.size() == 1);
  CHECK(sing.points[0].point == QVector{1, 0, 0, 0});
  CHECK(sing.points[0].rank == 2);
  CHECK(sing.points[0].on_g35);
  CHECK_FALSE(sing.cone_vertex);
}

TEST_CASE("cone fixture: vertex found") {
  auto sing = singular_locus(pfaffian_cubic(web("cone")));
  REQUIRE(sing.cone_vertex);
  CHECK(*sing.cone_vertex == QVector{1, 0, 0, 0});
  auto r = classify(web("cone"));
  CHECK(r.label == "singular Palatini scroll");
}

TEST_CASE("the cubic is invariant under projectivities up to a scalar") {
  auto w = web("palatini-generic");
  auto c = build_congruence(w);
  auto s = pfaffian_cubic(w).form;
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    QMatrix g(6, 6, Rational(0));
    do {
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) g(i, j) = draw(rng, 3);
    } while (rank(g) < 6);
    auto moved = pfaffian_cubic(apply_projectivity(c, g).web()).form;
    CHECK(proportional_forms(moved.rename_into(s.vars()), s));
  }
}

TEST_CASE("classification of the generic and split fixtures") {
  auto g = classify(web("palatini-generic"));
  CHECK(g.label == "smooth Palatini scroll");
  REQUIRE(g.focal);
  CHECK(g.focal->degree == 7);
  auto k1 = classify(web("af-k1"));
  CHECK(k1.subcase == "P_i on G(3,5), k = 1");
  REQUIRE(k1.components.size() == 2);
  CHECK(k1.components[0].degree == 1);
  CHECK(k1.components[1].degree == 6);
  bool quadric_meet = false;
  for (const auto& n : k1.components[1].notes)
    if (n.find("dimension 2, degree 2") != std::string::npos) quadric_meet = true;
  CHECK(quadric_meet);
}

TEST_CASE("low n") {
  CHECK(classify_low(web("wave")).label == "two distinct dual points: join of two lines");
  CHECK(classify_low(web("n3-tangent")).subcase == "double point");
  CHECK(classify_low(web("n4-generic")).label == "trisecants of a projected Veronese surface");
  CHECK(classify_low(web("n4-three-planes")).subcase == "length 3");
  CHECK_THROWS_AS(classify_low(web("palatini-generic")), std::invalid_argument);
}

TEST_CASE("rational points of a finite scheme") {
  VarSet v = VarSet::projective(2);
  Ideal I(v, {parse_poly("x0*x1", v), parse_poly("x2*(x0 - x2)", v), parse_poly("x1*(x1 - 2*x2)", v)});
  auto pts = rational_points(with_basis(I));
  CHECK(pts.size() == 2);
  CHECK(count_distinct_points(with_basis(I), 1) == 2);
  CHECK_THROWS_AS(rational_points(with_basis(Ideal(v, {parse_poly("x0", v)}))), PositiveDimensional);
}

TEST_CASE("sectional genera of the Palatini scroll and the Castelnuovo threefold") {
  auto g = classify(web("palatini-generic"));
  CHECK(*sectional_genus(*g.focal) == 4);
  auto k2 = classify(web("af-k2"));
  CHECK(*sectional_genus(k2.components.back().hilbert) == 2);
}
