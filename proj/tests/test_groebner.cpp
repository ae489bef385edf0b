#include <doctest.h>

#include <random>

#include "plueckerlab/arith/parse.hpp"
#include "plueckerlab/arith/sampling.hpp"
#include "plueckerlab/groebner/hilbert.hpp"
#include "plueckerlab/groebner/ideal.hpp"

using namespace plab;

namespace {

Ideal make(const VarSet& v, std::initializer_list<const char*> gens) {
  std::vector<MultiPoly> g;
  for (auto s : gens) g.push_back(parse_poly(s, v));
  return Ideal(v, g);
}

}  // namespace

TEST_CASE("reduced basis of a small system") {
  VarSet v({"x", "y"});
  auto I = buchberger(make(v, {"x^2 - y", "x*y - 1"}), MonomialOrder::lex());
  // lex x > y: <x - y^2, y^3 - 1>
  CHECK(ideals_equal(I, make(v, {"x - y^2", "y^3 - 1"})));
  CHECK(I.basis().size() == 2);
  CHECK(contains(I, parse_poly("x^3 - 1", v)));
  CHECK_FALSE(contains(I, parse_poly("x - 1", v)));
}

TEST_CASE("parallel and serial reduction agree") {
  VarSet v = VarSet::projective(3);
  auto I = make(v, {"x0*x1 - x2*x3", "x0^2 - x1*x3 + x2^2", "x1^2*x2 - x0*x3^2"});
  GbOptions par, ser;
  ser.parallel = false;
  auto a = buchberger(I, MonomialOrder::grevlex(), par);
  auto b = buchberger(I, MonomialOrder::grevlex(), ser);
  CHECK(a.basis() == b.basis());
}

TEST_CASE("unit ideal") {
  VarSet v({"x", "y"});
  CHECK(with_basis(make(v, {"x", "x - 1"})).is_unit());
}

TEST_CASE("ideal quotient") {
  VarSet v({"x", "y"});
  auto I = make(v, {"x*y"});
  CHECK(ideals_equal(ideal_quotient(I, make(v, {"x"})), make(v, {"y"})));
  CHECK(ideals_equal(ideal_quotient(I, Ideal::unit(v)), I));
  auto J = make(v, {"x^2", "x*y"});
  CHECK(ideals_equal(ideal_quotient(J, make(v, {"y"})), make(v, {"x"})));
}

TEST_CASE("saturation") {
  VarSet v({"x", "y"});
  auto I = make(v, {"x^2", "x*y"});
  // x^2 lies in I, so every power of x kills the quotient ring
  CHECK(saturate(I, make(v, {"x"})).is_unit());
  CHECK(ideals_equal(saturate(I, make(v, {"y"})), make(v, {"x"})));
  CHECK(ideals_equal(saturate(I, make(v, {"x", "y"})), make(v, {"x"})));
}

TEST_CASE("elimination: twisted cubic") {
  VarSet v({"t", "y", "z"});
  auto E = eliminate(make(v, {"y - t^2", "z - t^3"}), {"t"});
  CHECK(E.vars().size() == 2);
  CHECK(contains(with_basis(E), parse_poly("y^3 - z^2", E.vars())));
  CHECK(ideals_equal(eliminate(E, {}), E));
}

TEST_CASE("intersection and sum") {
  VarSet v({"x", "y"});
  auto a = make(v, {"x"}), b = make(v, {"y"});
  CHECK(ideals_equal(intersect(a, b), make(v, {"x*y"})));
  CHECK(ideals_equal(ideal_sum(a, b), make(v, {"x", "y"})));
  CHECK(ideals_equal(ideal_product(a, b), make(v, {"x*y"})));
}

TEST_CASE("Hilbert polynomial of the twisted cubic curve") {
  VarSet v = VarSet::projective(3);
  auto I = make(v, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"});
  auto h = hilbert_polynomial(I);
  CHECK(h.polynomial_string() == "3 t + 1");
  CHECK(h.degree == 3);
  CHECK(h.projective_dimension() == 1);
  auto lead = with_basis(I).leading_monomials();
  for (int s = 0; s <= 8; ++s) CHECK(hilbert_function(h, s) == count_standard_monomials(lead, 4, s));
}

TEST_CASE("Hilbert data of points, a unit ideal and the zero ideal") {
  VarSet v = VarSet::projective(2);
  auto pts = hilbert_polynomial(make(v, {"x0*x1", "x2*(x0 - x2)"}));
  CHECK(pts.projective_dimension() == 0);
  CHECK(pts.degree == 4);
  auto empty = hilbert_polynomial(Ideal::unit(v));
  CHECK(empty.polynomial.empty());
  auto plane = hilbert_polynomial(Ideal::zero(v));
  CHECK(plane.polynomial_string() == "1/2 t^2 + 3/2 t + 1");
  CHECK_THROWS_AS(hilbert_polynomial(make(v, {"x0^2 - x1"})), std::invalid_argument);
}

TEST_CASE("pivot numerator matches a hand count") {
  // <x^2, xy> in k[x,y]: HS = (1 - 2t^2 + t^3)/(1-t)^2
  Monomial x2 = Monomial::var(0, 2), xy = Monomial::var(0) * Monomial::var(1);
  auto k = hilbert_numerator({x2, xy}, 2);
  REQUIRE(k.size() == 4);
  CHECK(k[0] == 1);
  CHECK(k[1] == 0);
  CHECK(k[2] == -2);
  CHECK(k[3] == 1);
}

TEST_CASE("sectional genus from the Hilbert polynomial") {
  VarSet v = VarSet::projective(3);
  CHECK(*sectional_genus(hilbert_polynomial(make(v, {"x0*x2 - x1^2", "x1*x3 - x2^2", "x0*x3 - x1*x2"}))) == 0);
  CHECK(*sectional_genus(hilbert_polynomial(Ideal::zero(VarSet::projective(2)))) == 0);
  // plane cubic curve
  CHECK(*sectional_genus(hilbert_polynomial(make(VarSet::projective(2), {"x0^3 + x1^3 + x2^3"}))) == 1);
  CHECK_FALSE(sectional_genus(hilbert_polynomial(make(VarSet::projective(1), {"x0*x1"}))));
}

TEST_CASE("parabola elimination and normal forms") {
  VarSet v({"t", "x", "y"});
  auto E = eliminate(make(v, {"x - t", "y - t^2"}), {"t"});
  CHECK(ideals_equal(E, Ideal(E.vars(), {parse_poly("y - x^2", E.vars())})));
  VarSet w({"x", "y"});
  auto xy = with_basis(make(w, {"x", "y"}));
  CHECK(normal_form(parse_poly("x", w), xy).is_zero());
  CHECK(normal_form(MultiPoly(w, Rational(1)), xy) == MultiPoly(w, Rational(1)));
}

TEST_CASE("random ideal elements reduce to zero") {
  VarSet v = VarSet::projective(2);
  auto I = with_basis(make(v, {"x0^2 - x1*x2", "x1^3 - x0*x2^2 + x2^3"}));
  std::mt19937_64 rng(200);
  const char* mons[] = {"x0", "x1", "x2", "x0*x1", "x2^2", "1"};
  for (int t = 0; t < 200; ++t) {
    MultiPoly f(v);
    for (const auto& g : I.generators()) {
      MultiPoly h(v);
      for (int k = 0; k < 3; ++k) h += parse_poly(mons[rng() % 6], v) * Rational(draw(rng, 5));
      f += h * g;
    }
    CHECK(normal_form(f, I).is_zero());
  }
}
