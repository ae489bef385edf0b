#include "plueckerlab/io/records.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "plueckerlab/arith/parse.hpp"
#include "plueckerlab/io/fixtures.hpp"

namespace plab::io {

json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from(const json& j) {
  try {
    if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad rational: ") + e.what());
  }
  throw InputError("rationals must be integers or \"p/q\" strings, got " + j.dump());
}

json vector_json(const QVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rational_json(x));
  return a;
}

QVector vector_from(const json& j) {
  if (!j.is_array()) throw InputError("expected an array of rationals");
  QVector v;
  for (const auto& x : j) v.push_back(rational_from(x));
  return v;
}

namespace {

std::vector<std::string> string_list(const json& j, const char* key) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  if (!j[key].is_array()) throw InputError(std::string(key) + " must be an array of strings");
  for (const auto& s : j[key]) {
    if (!s.is_string()) throw InputError(std::string(key) + " must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

std::string string_field(const json& j, const char* key) {
  if (!j.contains(key)) return "";
  if (!j[key].is_string()) throw InputError(std::string(key) + " must be a string");
  return j[key].get<std::string>();
}

void expect_kind(const json& j, const std::string& kind) {
  if (!j.is_object()) throw InputError("input must be a JSON object");
  if (!j.contains("kind") || j["kind"] != kind) throw InputError("expected a record of kind \"" + kind + "\"");
}

}  // namespace

json to_json(const WebRecord& r) {
  json j;
  j["kind"] = "web";
  j["name"] = r.name;
  j["citation"] = r.citation;
  j["notes"] = r.notes;
  j["n"] = r.web.n;
  json mats = json::array();
  for (const auto& a : r.web.mats) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.size(); ++i) {
      QVector row(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) row[k] = a(i, k);
      rows.push_back(vector_json(row));
    }
    mats.push_back(rows);
  }
  j["matrices"] = mats;
  return j;
}

WebRecord web_from_json(const json& j) {
  expect_kind(j, "web");
  WebRecord r;
  r.name = string_field(j, "name");
  r.citation = string_field(j, "citation");
  r.notes = string_list(j, "notes");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 2)
    throw InputError("n must be an integer >= 2");
  r.web.n = j["n"].get<std::size_t>();
  if (!j.contains("matrices") || !j["matrices"].is_array()) throw InputError("matrices must be an array");
  const std::size_t size = r.web.n + 1;
  for (const auto& m : j["matrices"]) {
    if (!m.is_array() || m.size() != size) throw InputError("each matrix needs n+1 rows");
    QMatrix q(size, size, Rational(0));
    for (std::size_t i = 0; i < size; ++i) {
      QVector row = vector_from(m[i]);
      if (row.size() != size) throw InputError("each row needs n+1 entries");
      for (std::size_t k = 0; k < size; ++k) q(i, k) = row[k];
    }
    try {
      r.web.mats.emplace_back(q);
    } catch (const NotSkew& e) {
      throw InputError(e.what());
    }
  }
  try {
    r.web.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return r;
}

FluxSystem FluxRecord::system() const {
  try {
    return FluxSystem::parse(fluxes, denominator);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("bad flux: ") + e.what());
  }
}

json to_json(const FluxRecord& r) {
  json j;
  j["kind"] = "flux";
  j["name"] = r.name;
  j["citation"] = r.citation;
  j["notes"] = r.notes;
  j["fluxes"] = r.fluxes;
  j["denominator"] = r.denominator;
  if (r.samples) {
    json s = json::array();
    for (const auto& u : *r.samples) s.push_back(vector_json(u));
    j["samples"] = s;
  }
  return j;
}

FluxRecord flux_from_json(const json& j) {
  expect_kind(j, "flux");
  FluxRecord r;
  r.name = string_field(j, "name");
  r.citation = string_field(j, "citation");
  r.notes = string_list(j, "notes");
  r.fluxes = string_list(j, "fluxes");
  if (r.fluxes.empty()) throw InputError("fluxes must list at least one polynomial");
  if (j.contains("denominator")) r.denominator = string_field(j, "denominator");
  if (j.contains("samples")) {
    if (!j["samples"].is_array()) throw InputError("samples must be an array");
    std::vector<QVector> s;
    for (const auto& u : j["samples"]) {
      QVector v = vector_from(u);
      if (v.size() != r.fluxes.size()) throw InputError("sample dimension differs from the number of unknowns");
      s.push_back(v);
    }
    r.samples = std::move(s);
  }
  r.system();  // validates the grammar
  return r;
}

QVector parse_point(const std::string& text) {
  std::string t;
  for (char ch : text) t += (ch == '(' || ch == ')' || ch == ':' || ch == ',' || ch == '[' || ch == ']') ? ' ' : ch;
  std::istringstream in(t);
  QVector v;
  for (std::string tok; in >> tok;) {
    try {
      v.push_back(parse_rational(tok));
    } catch (const std::invalid_argument&) {
      throw InputError("bad coordinate '" + tok + "' in " + text);
    }
  }
  if (v.empty()) throw InputError("empty point literal");
  return v;
}

PluckerVector parse_line(const std::string& text, std::size_t n) {
  const auto open = text.find('(');
  if (open == std::string::npos) {
    QVector c = parse_point(text);
    if (c.size() != (n + 1) * n / 2) throw InputError("a line in P^" + std::to_string(n) + " needs " + std::to_string((n + 1) * n / 2) + " Pluecker coordinates");
    PluckerVector l(n, c);
    if (l.is_zero() || !l.satisfies_relations()) throw InputError("coordinates violate the Pluecker relations");
    return l;
  }
  const auto close = text.find(')', open);
  if (close == std::string::npos) throw InputError("unbalanced parentheses in " + text);
  QVector p = parse_point(text.substr(open, close - open + 1));
  QVector q = parse_point(text.substr(close + 1));
  if (p.size() != n + 1 || q.size() != n + 1) throw InputError("points need n+1 coordinates");
  try {
    return plucker_from_points(p, q);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

json load_input(const std::string& path) {
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    try {
      return json::parse(in);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("malformed JSON: ") + e.what());
    }
  }
  if (auto f = builtin_fixture(path)) return *f;
  throw InputError("no such file or built-in fixture: " + path);
}

}  // namespace plab::io
