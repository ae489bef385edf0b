#include "plueckerlab/io/fixtures.hpp"

#include <functional>
#include <map>

#include "plueckerlab/arith/parse.hpp"

namespace plab::io {

SkewMatrix from_upper(std::size_t size, const std::vector<int>& upper) {
  if (upper.size() != size * (size - 1) / 2) throw std::invalid_argument("wrong upper-triangle length");
  QMatrix m(size, size, Rational(0));
  std::size_t k = 0;
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i + 1; j < size; ++j) {
      m(i, j) = upper[k++];
      m(j, i) = -m(i, j);
    }
  return SkewMatrix(m);
}

SkewWeb from_pattern(std::size_t size, const std::vector<std::string>& upper) {
  if (upper.size() != size * (size - 1) / 2) throw std::invalid_argument("wrong upper-triangle length");
  VarSet v{"a", "b", "c", "d"};
  std::vector<MultiPoly> forms;
  for (const auto& e : upper) forms.push_back(parse_poly(e, v));
  SkewWeb w{size - 1, {}};
  for (std::size_t var = 0; var + 1 < size && var < v.size(); ++var) {
    QMatrix m(size, size, Rational(0));
    std::size_t k = 0;
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = i + 1; j < size; ++j) {
        m(i, j) = forms[k++].coefficient(Monomial::var(var));
        m(j, i) = -m(i, j);
      }
    w.mats.emplace_back(m);
  }
  return w;
}

namespace {

// Integer literals drawn with Python's random.Random(20240607), range [-5, 5].
const std::vector<std::vector<int>> kGeneric5 = {
    {4, 1, 3, 3, 2, -4, 4, -2, 4, -2, -3, 0, -3, -1, -5},
    {5, 4, 5, 2, 4, 2, -5, -1, 3, 3, -2, -3, -4, -2, -3},
    {-5, 1, -3, -1, -2, 5, -1, 3, -1, 2, -4, -1, -3, -1, 2},
    {2, -4, 4, 3, 4, 5, 2, 2, -2, 0, 4, 0, 5, 5, 5},
};
const std::vector<std::vector<int>> kSplitRows = {
    {3, 2, 2, 3, -2, -2, 2, 4, 1, 1, 2, 2, 1, -5, 0},
    {0, -5, 2, -2, -4, -4, 0, -5, -2, 2, 1, 3, -2, 5, 5},
    {3, -1, -2, -5, 5, 3, -2, 1, 3, 4, 4, -3, -3, 2, -1},
};
const std::vector<std::vector<int>> kGeneric4 = {
    {2, 2, -2, -1, 4, 0, -2, 2, -4, -2},
    {4, -5, -3, -4, 2, 1, 2, 5, 2, -5},
    {-1, -3, -1, 4, -1, -5, 1, 3, -5, 0},
};

const char* kSeedNote = "generic entries drawn with Python random.Random(20240607) in [-5, 5]";

WebRecord split_web(int k) {
  SkewWeb w{5, {}};
  w.mats.push_back(SkewMatrix::elementary(6, 0, 1));
  if (k >= 2) w.mats.push_back(SkewMatrix::elementary(6, 2, 3));
  if (k >= 3) w.mats.push_back(SkewMatrix::elementary(6, 4, 5));
  if (k == 4) w.mats.push_back(SkewMatrix::wedge({1, 2, -1, 3, 1, -2}, {2, -1, 1, 1, -3, 1}));
  for (std::size_t r = 0; w.mats.size() < 4; ++r) w.mats.push_back(from_upper(6, kSplitRows[r]));
  static const char* residual[] = {"singular Bordiga scroll of degree 6", "Castelnuovo threefold of degree 5",
                                   "Del Pezzo threefold of degree 4, complete intersection x0L0+x1L1 = x4L4+x5L5 = 0",
                                   "rational normal cubic scroll of degree 3"};
  WebRecord r;
  r.name = "af-k" + std::to_string(k);
  r.citation = "linear congruence in P^5 whose cubic S has " + std::to_string(k) +
               " singular point(s) on G(3,5): the 3-spaces pi_P are components of F; residual " + residual[k - 1];
  r.notes = {"rank-2 members e0^e1, e2^e3, e4^e5 and u^v with u = (1,2,-1,3,1,-2), v = (2,-1,1,1,-3,1), used in that order",
             kSeedNote};
  r.web = w;
  return r;
}

WebRecord pattern_web(const std::string& name, const std::string& citation, const std::vector<std::string>& upper) {
  WebRecord r;
  r.name = name;
  r.citation = citation;
  r.notes = {"matrix a A + b B + c C + d D transcribed verbatim"};
  r.web = from_pattern(6, upper);
  return r;
}

const std::map<std::string, std::function<WebRecord()>>& webs() {
  static const std::map<std::string, std::function<WebRecord()>> m = {
      {"palatini-generic",
       [] {
         WebRecord r;
         r.name = "palatini-generic";
         r.citation = "general linear congruence in P^5: focal locus a smooth Palatini scroll of degree 7, "
                      "P_F(t) = 7/6 t^3 + 2 t^2 + 11/6 t + 1";
         r.notes = {kSeedNote};
         r.web.n = 5;
         for (const auto& u : kGeneric5) r.web.mats.push_back(from_upper(6, u));
         return r;
       }},
      {"af-k1", [] { return split_web(1); }},
      {"af-k2", [] { return split_web(2); }},
      {"af-k3", [] { return split_web(3); }},
      {"af-k4", [] { return split_web(4); }},
      {"af-case1",
       [] {
         return pattern_web("af-case1",
                            "reducible S, case (1): F = L' + X with L' a parasitic 3-space and P_X(t) = t^3 + 3t^2 + 2",
                            {"-d", "a", "b", "c", "0", "0", "a", "b", "c", "d", "0", "d", "0", "0", "-d"});
       }},
      {"af-case2",
       [] {
         return pattern_web("af-case2",
                            "reducible S, case (2): F = Gamma' + Y with Y a quintic, P_Y(t) = 5/6t^3 + 5/2t^2 + 5/3t + 1",
                            {"a", "b", "c", "d", "0", "0", "d", "c", "b", "0", "d", "0", "0", "d", "a"});
       }},
      {"af-case3",
       [] {
         return pattern_web("af-case3",
                            "reducible S, case (3): F = Z1 + Z2, Z1 a rational cubic scroll P^1 x P^2, Z2 a singular "
                            "Del Pezzo threefold",
                            {"a", "b", "d", "0", "0", "c", "0", "d", "0", "0", "0", "d", "a", "b", "c"});
       }},
      {"af-case4",
       [] {
         return pattern_web("af-case4", "reducible S, case (4): F = C(V) + T with T a cubic threefold",
                            {"a", "b", "c", "d", "0", "c", "d", "b", "0", "0", "0", "d", "a", "0", "0"});
       }},
      {"cone",
       [] {
         return pattern_web("cone", "S a cubic cone with vertex A off G(3,5): F singular along the line of A",
                            {"c", "a", "d-c", "b", "0", "d", "a", "0", "b", "c", "d", "0", "0", "c", "0"});
       }},
      {"wave",
       [] {
         WebRecord r;
         r.name = "wave";
         r.citation = "wave system: the lines meeting the skew lines L: y0 = y3, y1 = y2 and L': y0 = -y3, y1 = -y2";
         r.notes = {"complexes of lines meeting L and L'"};
         r.web.n = 3;
         r.web.mats = {meeting_complex(PluckerVector(3, {1, 1, 0, 0, -1, -1})),
                       meeting_complex(PluckerVector(3, {1, -1, 0, 0, 1, -1}))};
         return r;
       }},
      {"n3-tangent",
       [] {
         WebRecord r;
         r.name = "n3-tangent";
         r.citation = "pencil of complexes in P^3 tangent to the dual Klein quadric: focal locus a double line";
         r.notes = {"Pf(a A + b B) = -b^2"};
         r.web.n = 3;
         r.web.mats = {SkewMatrix::elementary(4, 0, 1), SkewMatrix::elementary(4, 0, 2) + SkewMatrix::elementary(4, 1, 3)};
         return r;
       }},
      {"n4-generic",
       [] {
         WebRecord r;
         r.name = "n4-generic";
         r.citation = "general linear congruence in P^4: trisecant lines of a projected Veronese surface";
         r.notes = {kSeedNote};
         r.web.n = 4;
         for (const auto& u : kGeneric4) r.web.mats.push_back(from_upper(5, u));
         return r;
       }},
      {"n4-three-planes",
       [] {
         WebRecord r;
         r.name = "n4-three-planes";
         r.citation = "linear congruence in P^4 meeting three planes (dual intersection of length 3)";
         r.notes = {"rank-2 members e0^e1, e2^e3 and (1,1,1,1,1)^(0,1,2,3,4)"};
         r.web.n = 4;
         r.web.mats = {SkewMatrix::wedge({1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}), SkewMatrix::wedge({0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}),
                       SkewMatrix::wedge({1, 1, 1, 1, 1}, {0, 1, 2, 3, 4})};
         return r;
       }},
  };
  return m;
}

FluxRecord flux(std::string name, std::string citation, std::vector<std::string> fluxes, std::vector<std::string> notes = {}) {
  FluxRecord r;
  r.name = std::move(name);
  r.citation = std::move(citation);
  r.fluxes = std::move(fluxes);
  r.notes = std::move(notes);
  return r;
}

const std::map<std::string, std::function<FluxRecord()>>& fluxes() {
  static const std::map<std::string, std::function<FluxRecord()>> m = {
      {"wave-flux",
       [] {
         return flux("wave-flux", "wave system u_t = v_x, v_t = u_x: a Temple system with eigenvalues -1, +1",
                     {"-u2", "-u1"});
       }},
      {"burgers-flux",
       [] { return flux("burgers-flux", "Burgers equation: genuinely nonlinear, not a Temple system", {"1/2*u1^2"}); }},
      {"rotating-flux",
       [] {
         return flux("rotating-flux", "constructed system with a rotating eigenvector field",
                     {"1/2*u1^2 + u2", "u1 + 1/2*u2^2"});
       }},
      {"linear-flux",
       [] { return flux("linear-flux", "linear fluxes: constant eigen-structure", {"2*u1 + u2", "u1 + 3*u2"}); }},
      {"elliptic-flux",
       [] { return flux("elliptic-flux", "Jf = [[0,1],[-1,0]]: no real eigenvalues", {"u2", "-u1"}); }},
  };
  return m;
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : webs()) out.push_back(k);
  for (const auto& [k, v] : fluxes()) out.push_back(k);
  return out;
}

std::optional<json> builtin_fixture(const std::string& name) {
  if (auto it = webs().find(name); it != webs().end()) return to_json(it->second());
  if (auto it = fluxes().find(name); it != fluxes().end()) return to_json(it->second());
  return std::nullopt;
}

WebRecord builtin_web(const std::string& name) {
  auto it = webs().find(name);
  if (it == webs().end()) throw std::out_of_range("no built-in web " + name);
  return it->second();
}

FluxRecord builtin_flux(const std::string& name) {
  auto it = fluxes().find(name);
  if (it == fluxes().end()) throw std::out_of_range("no built-in flux system " + name);
  return it->second();
}

}  // namespace plab::io
