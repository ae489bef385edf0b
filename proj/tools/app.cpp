#include "plueckerlab/cli/app.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>

#include "plueckerlab/arith/sampling.hpp"
#include "plueckerlab/io/fixtures.hpp"
#include "plueckerlab/io/report.hpp"

#ifndef PLUECKERLAB_VERSION
#define PLUECKERLAB_VERSION "0.0.0"
#endif

namespace plab::cli {

namespace {

using io::json;

struct Options {
  std::string input;
  bool as_json = false;
  bool timing = false;
  std::uint64_t seed = 1;
  int samples = 20;
  std::string line, point, ideal = "focal";
  bool pencil = false;
};

struct Loaded {
  json record;
  std::string name, citation;
};

Loaded load(const Options& o) {
  Loaded l;
  l.record = io::load_input(o.input);
  if (l.record.is_object()) {
    if (l.record.contains("name") && l.record["name"].is_string()) l.name = l.record["name"];
    if (l.record.contains("citation") && l.record["citation"].is_string()) l.citation = l.record["citation"];
  }
  if (l.name.empty()) l.name = o.input;
  return l;
}

json web_summary(const SkewWeb& w) { return {{"n", w.n}, {"complexes", w.mats.size()}}; }

json cmd_classify(const io::WebRecord& r) {
  const std::size_t n = r.web.n;
  if (n == 5) return io::classification_json(classify(r.web));
  if (n == 3 || n == 4) return io::classification_json(classify_low(r.web));
  throw io::Unsupported("classification is implemented for n = 3, 4, 5 (got n = " + std::to_string(n) + ")");
}

QVector random_off_focal(const Congruence& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 1000; ++i) {
    QVector p = draw_vector(rng, c.n() + 1, 9);
    if (!is_zero_vector(p) && incidence_corank(c, p) == 1) return p;
  }
  throw ContractViolation("no off-focal sample point found");
}

json cmd_foci(const io::WebRecord& r, const Options& o) {
  Congruence c = build_congruence(r.web);
  json j = web_summary(r.web);
  if (o.pencil) {
    if (o.point.empty()) throw io::InputError("--pencil needs --point");
    QVector p = io::parse_point(o.point);
    if (p.size() != c.n() + 1 || is_zero_vector(p)) throw io::InputError("point needs n+1 coordinates, not all zero");
    const std::size_t deficiency = c.n() - 1 - rank(c.at(p));
    if (deficiency == 0) throw io::InputError("point is not on the focal locus; drop --pencil");
    j["point"] = io::vector_json(p);
    j["rank_deficiency"] = deficiency;
    LinearSubspace plane = pencil_plane(c, p);
    json pts = json::array();
    for (const auto& x : plane.points()) pts.push_back(io::vector_json(x));
    j["pencil_plane"] = pts;
    j["residual_curve_degree"] = residual_plane_curve_degree(c, p);
    return j;
  }
  PluckerVector line;
  if (!o.line.empty()) {
    line = io::parse_line(o.line, c.n());
    j["mode"] = "line";
  } else {
    QVector p;
    if (!o.point.empty()) {
      p = io::parse_point(o.point);
      if (p.size() != c.n() + 1 || is_zero_vector(p)) throw io::InputError("point needs n+1 coordinates, not all zero");
      if (incidence_corank(c, p) != 1)
        throw io::InputError("point lies on the focal locus; use --pencil to get the pencil plane");
      j["mode"] = "point";
    } else {
      p = random_off_focal(c, o.seed);
      j["mode"] = "random point";
      j["seed"] = o.seed;
    }
    j["point"] = io::vector_json(p);
    line = line_through_point(c, p);
  }
  try {
    j["foci"] = io::focus_json(foci_on_line(c, line));
  } catch (const NotInCongruence& e) {
    throw io::InputError(e.what());
  }
  return j;
}

json cmd_hilbert(const io::WebRecord& r, const Options& o) {
  json j = web_summary(r.web);
  j["ideal"] = o.ideal;
  if (o.ideal == "focal") {
    Congruence c = build_congruence(r.web);
    Ideal f = with_basis(focal_ideal(c));
    j["generators"] = f.generators().size();
    j["basis_size"] = f.basis().size();
    j["hilbert"] = io::hilbert_json(hilbert_polynomial(f));
    j["expected_degree"] = expected_degree(static_cast<int>(r.web.n));
    return j;
  }
  const std::string prefix = "residual:";
  if (o.ideal.rfind(prefix, 0) != 0 && o.ideal != "residual")
    throw io::InputError("--ideal must be focal, residual or residual:<component>");
  if (r.web.n != 5) throw io::Unsupported("component ideals are available for n = 5 only");
  ClassificationReport rep = classify(r.web);
  if (rep.components.empty()) throw io::InputError("the focal locus of this web has no computed components");
  const std::string name = o.ideal == "residual" ? rep.components.back().name : o.ideal.substr(prefix.size());
  for (const auto& comp : rep.components)
    if (comp.name == name) {
      j["component"] = comp.name;
      j["description"] = comp.description;
      j["hilbert"] = io::hilbert_json(comp.hilbert);
      return j;
    }
  std::string names;
  for (const auto& comp : rep.components) names += (names.empty() ? "" : ", ") + comp.name;
  throw io::InputError("no component " + name + " (available: " + names + ")");
}

json cmd_temple(const io::FluxRecord& r, const Options& o) {
  FluxSystem sys = r.system();
  std::vector<QVector> samples;
  if (r.samples) {
    samples = *r.samples;
  } else {
    if (o.samples <= 0) throw io::InputError("--samples must be positive");
    samples = sample_points(sys, static_cast<std::size_t>(o.samples), o.seed);
  }
  if (samples.empty()) throw io::InputError("empty sample list");
  json j;
  j["unknowns"] = sys.m();
  j["fluxes"] = r.fluxes;
  j["denominator"] = r.denominator;
  j["seed"] = r.samples ? json(nullptr) : json(o.seed);
  j["temple"] = io::temple_json(is_temple(sys, samples));
  json s = json::array();
  for (const auto& u : samples) s.push_back(io::eigen_json(eigen_data(sys, u)));
  j["eigen"] = s;
  return j;
}

json cmd_pfaffian(const io::WebRecord& r) {
  const std::size_t k = r.web.mats.size();
  if (k > 26) throw io::Unsupported("too many complexes");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  VarSet v(names);
  std::vector<MultiPoly> coeffs;
  for (std::size_t i = 0; i < k; ++i) coeffs.push_back(MultiPoly::variable(v, i));
  Matrix<MultiPoly> m = linear_combination(r.web.mats, coeffs);
  json j = web_summary(r.web);
  j["variables"] = names;
  const std::size_t size = r.web.n + 1;
  if (size % 2 == 0) {
    MultiPoly p = pfaffian(m);
    j["pfaffian"] = p.to_string();
    if (r.web.n == 5 && !p.is_zero()) {
      PfaffianCubic s{p, r.web};
      auto split = split_cubic(s);
      j["linear_factor"] = split ? json(split->linear.to_string()) : json(nullptr);
      if (split) j["quadric_rank"] = split->quadric_rank;
    }
  } else {
    json subs = json::array();
    for (std::size_t drop = 0; drop < size; ++drop) {
      std::vector<std::size_t> rows;
      for (std::size_t i = 0; i < size; ++i)
        if (i != drop) rows.push_back(i);
      subs.push_back(pfaffian_of(m, rows).to_string());
    }
    j["sub_pfaffians"] = subs;
  }
  return j;
}

int execute(const std::string& command, const Options& o, std::ostream& out) {
  auto t0 = std::chrono::steady_clock::now();
  Loaded l = load(o);
  io::Report rep;
  rep.command = command;
  rep.version = PLUECKERLAB_VERSION;
  rep.input_digest = io::digest(l.record);
  rep.input_name = l.name;
  rep.citation = l.citation;
  if (command == "temple") {
    rep.result = cmd_temple(io::flux_from_json(l.record), o);
  } else {
    io::WebRecord w = io::web_from_json(l.record);
    if (command == "classify") rep.result = cmd_classify(w);
    else if (command == "foci") rep.result = cmd_foci(w, o);
    else if (command == "hilbert") rep.result = cmd_hilbert(w, o);
    else rep.result = cmd_pfaffian(w);
  }
  if (o.timing)
    rep.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (o.as_json) out << io::to_json(rep).dump(2) << "\n";
  else out << io::render_text(rep);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear congruences of lines, focal loci and Temple systems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", PLUECKERLAB_VERSION);
  Options o;
  std::string chosen;
  struct Spec {
    const char* name;
    const char* help;
  };
  const Spec specs[] = {
      {"classify", "classify the congruence of a web (n = 3, 4, 5)"},
      {"foci", "congruence line and its foci through a point or on a line"},
      {"hilbert", "Hilbert polynomial of the focal ideal or of a component"},
      {"temple", "Temple test of a flux system at rational samples"},
      {"pfaffian", "Pfaffian form of the linear span of the web"},
  };
  for (const auto& s : specs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("file", o.input, "JSON record or built-in fixture name")->required();
    sub->add_flag("--json", o.as_json, "emit the structured record");
    sub->add_flag("--timing", o.timing, "add wall-clock time (makes the report non-deterministic)");
    sub->add_option("--seed", o.seed, "seed for random samples");
    sub->add_option("--samples", o.samples, "number of random samples");
    sub->add_option("--line", o.line, "line literal: [p01,p02,...] or (..),(..)");
    sub->add_option("--point", o.point, "point literal, e.g. (1:3:5:2)");
    sub->add_flag("--pencil", o.pencil, "pencil plane at a focal point");
    sub->add_option("--ideal", o.ideal, "focal | residual | residual:<component>");
    sub->callback([&chosen, name = std::string(s.name)] { chosen = name; });
  }
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    out << PLUECKERLAB_VERSION << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  }
  try {
    return execute(chosen, o, out);
  } catch (const io::Unsupported& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const ContractViolation& e) {
    err << "contract violation: " << e.what() << "\n";
    return kContract;
  } catch (const IterationCapExceeded& e) {
    err << "contract violation: " << e.what() << "\n";
    return kContract;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kContract;
  }
}

}  // namespace plab::cli
