#include <doctest.h>

#include <random>

#include "plueckerlab/arith/matrix.hpp"
#include "plueckerlab/arith/parse.hpp"
#include "plueckerlab/arith/poly.hpp"
#include "plueckerlab/arith/rational.hpp"
#include "plueckerlab/arith/sampling.hpp"
#include "plueckerlab/arith/upoly.hpp"

using namespace plab;

TEST_CASE("rational parsing normalizes") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(parse_rational("10/5")) == "2");
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational("6/-4"));
}

TEST_CASE("polynomial ring identities") {
  VarSet v = VarSet::projective(2);
  auto x = parse_poly("x0 + 2*x1 - x2", v);
  auto y = parse_poly("x0^2 - 1/3*x1*x2", v);
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x * y).total_degree() == 3);
  auto q = exact_divide(x * y, x);
  REQUIRE(q);
  CHECK(*q == y);
  CHECK_FALSE(exact_divide(y, x));
  CHECK_THROWS_AS(exact_divide(y, MultiPoly(v)), std::domain_error);
}

TEST_CASE("parser rejects junk with an offset") {
  VarSet v = VarSet::projective(2);
  CHECK_THROWS_AS(parse_poly("x0 + * x1", v), ParseError);
  CHECK_THROWS_AS(parse_poly("x7", v), ParseError);
  CHECK(parse_poly("(x0+x1)^2", v) == parse_poly("x0^2 + 2*x0*x1 + x1^2", v));
}

TEST_CASE("derivative and substitution") {
  VarSet v({"a", "b"});
  auto p = parse_poly("a^3*b - 2*b^2", v);
  CHECK(partial_derivative(p, "a") == parse_poly("3*a^2*b", v));
  std::vector<MultiPoly> img = {parse_poly("a+b", v), parse_poly("b", v)};
  CHECK(p.substitute(img) == parse_poly("(a+b)^3*b - 2*b^2", v));
  std::vector<Rational> pt = {2, 3};
  CHECK(p.evaluate(pt) == 6);
}

TEST_CASE("mismatched variable sets are refused") {
  auto p = parse_poly("a", VarSet({"a"}));
  auto q = parse_poly("b", VarSet({"b"}));
  CHECK_THROWS_AS(p + q, VarSetMismatch);
}

TEST_CASE("Sturm isolation: (t^2-2)(t-1)(t+3)") {
  UPoly p = (UPoly({-2, 0, 1}) * UPoly({-1, 1})) * UPoly({3, 1});
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 4);
  for (std::size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1].hi <= roots[i].lo);
  CHECK(rational_roots(p) == std::vector<Rational>{-3, 1});
  int exact = 0;
  for (auto& iv : roots)
    if (rational_value(iv)) ++exact;
  CHECK(exact == 2);
  auto iv = roots[3];
  refine(iv, Rational(1, 1000000));
  CHECK(iv.hi - iv.lo <= Rational(1, 1000000));
  CHECK(iv.lo * iv.lo < 2);
  CHECK(iv.hi * iv.hi > 2);
}

TEST_CASE("Sturm: multiple roots and none") {
  UPoly p = UPoly({-1, 1}) * UPoly({-1, 1}) * UPoly({1, 0, 1});
  auto roots = isolate_real_roots(p);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].multiplicity == 2);
  CHECK(isolate_real_roots(UPoly({1, 0, 1})).empty());
  CHECK_THROWS_AS(isolate_real_roots(UPoly()), ZeroPolynomialError);
}

TEST_CASE("sign at an algebraic root") {
  UPoly p({-2, 0, 1});
  auto roots = isolate_real_roots(p);
  CHECK(vanishes_at_root(UPoly({-4, 0, 0, 0, 1}), roots[1]));
  CHECK(sign_at_root(UPoly({0, 1}), roots[0]) == -1);
  CHECK(sign_at_root(UPoly({-1, 1}), roots[1]) == 1);
}

TEST_CASE("matrix kernel, rank and inverse") {
  QMatrix m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  CHECK(rank(m) == 2);
  auto k = kernel(m);
  REQUIRE(k.size() == 1);
  CHECK(is_zero_vector(m * k[0]));
  CHECK_FALSE(inverse(m));
  QMatrix g = from_rows({{2, 1}, {1, 1}}, 2);
  auto gi = inverse(g);
  REQUIRE(gi);
  CHECK(*gi * g == identity(2));
}

namespace {

Rational ratio(const Integer& a, const Integer& b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

MultiPoly random_poly(std::mt19937_64& rng, const VarSet& v, int terms) {
  MultiPoly p(v);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (std::size_t i = 0; i < v.size(); ++i) m.set(i, static_cast<unsigned>(rng() % 3));
    p += MultiPoly::monomial(v, m, ratio(draw(rng, 9), 1 + static_cast<int>(rng() % 4)));
  }
  return p;
}

}  // namespace

TEST_CASE("ring axioms, exact division and Leibniz on random polynomials") {
  VarSet v({"x", "y", "z"});
  std::mt19937_64 rng(1000);
  for (int t = 0; t < 1000; ++t) {
    auto a = random_poly(rng, v, 3), b = random_poly(rng, v, 3), c = random_poly(rng, v, 2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a.derivative(0) * b + a * b.derivative(0) == (a * b).derivative(0));
    if (!b.is_zero()) {
      auto q = exact_divide(b * a, b);
      REQUIRE(q);
      CHECK(*q == a);
    }
  }
}

TEST_CASE("rational arithmetic agrees with cross multiplication") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 1000; ++t) {
    Integer a = draw(rng, 50), b = 1 + rng() % 50, c = draw(rng, 50), d = 1 + rng() % 50;
    CHECK(ratio(a, b) + ratio(c, d) == ratio(a * d + b * c, b * d));
  }
}

TEST_CASE("squaring doubles root multiplicities") {
  UPoly p = UPoly({-2, 0, 1}) * UPoly({-1, 1}) * UPoly({-1, 1});
  auto once = isolate_real_roots(p);
  auto twice = isolate_real_roots(p * p);
  REQUIRE(once.size() == twice.size());
  for (std::size_t i = 0; i < once.size(); ++i) CHECK(twice[i].multiplicity == 2 * once[i].multiplicity);
}
