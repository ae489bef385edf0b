#pragma once

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "plueckerlab/congruence/congruence.hpp"
#include "plueckerlab/pde/flux.hpp"

namespace plab::io {

using json = nlohmann::json;

/// Malformed or invalid input (CLI exit code 2).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Valid input the toolkit does not handle (CLI exit code 3).
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct WebRecord {
  std::string name;
  std::string citation;
  std::vector<std::string> notes;
  SkewWeb web;
};

struct FluxRecord {
  std::string name;
  std::string citation;
  std::vector<std::string> notes;
  std::vector<std::string> fluxes;
  std::string denominator = "1";
  std::optional<std::vector<QVector>> samples;

  FluxSystem system() const;
};

json rational_json(const Rational& q);
/// Accepts JSON integers and strings "p" / "p/q".
Rational rational_from(const json& j);
json vector_json(const QVector& v);
QVector vector_from(const json& j);

json to_json(const WebRecord& r);
json to_json(const FluxRecord& r);
/// Validate skewness, sizes and independence; throw InputError.
WebRecord web_from_json(const json& j);
FluxRecord flux_from_json(const json& j);

/// "(1:3:5:2)", "1 3 5 2" or "1,3,5,2"; entries may be "p/q".
QVector parse_point(const std::string& text);
/// Either "[p01,p02,...]" in Pluecker coordinates (i<j, lexicographic) or two
/// points "(..),(..)".
PluckerVector parse_line(const std::string& text, std::size_t n);

/// Reads a file, or a built-in fixture when `path` names one.
json load_input(const std::string& path);

}  // namespace plab::io
