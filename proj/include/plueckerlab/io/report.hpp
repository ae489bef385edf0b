#pragma once

#include <optional>
#include <string>

#include "plueckerlab/classify/classify5.hpp"
#include "plueckerlab/io/records.hpp"
#include "plueckerlab/pde/flux.hpp"

namespace plab::io {

/// Command output. Everything except `timing_ms` is a pure function of the
/// input record and the toolkit version.
struct Report {
  std::string command;
  std::string version;
  std::string input_digest;
  std::string input_name;
  std::string citation;
  json result;
  std::optional<double> timing_ms;

  friend bool operator==(const Report&, const Report&) = default;
};

json to_json(const Report& r);
Report report_from_json(const json& j);
/// Indented "key: value" listing of the report.
std::string render_text(const Report& r);

/// FNV-1a 64 of the compact dump, as "fnv1a64:<hex>".
std::string digest(const json& input);

json interval_json(const IsolatingInterval& iv);
json hilbert_json(const HilbertData& h);
json classification_json(const ClassificationReport& r);
json focus_json(const FocusSet& f);
json eigen_json(const EigenData& e);
json temple_json(const TempleReport& t);

}  // namespace plab::io
