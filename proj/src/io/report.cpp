#include "plueckerlab/io/report.hpp"

#include <cstdio>
#include <sstream>

namespace plab::io {

json to_json(const Report& r) {
  json j;
  j["command"] = r.command;
  j["version"] = r.version;
  j["input"] = {{"digest", r.input_digest}, {"name", r.input_name}, {"citation", r.citation}};
  j["result"] = r.result;
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

Report report_from_json(const json& j) {
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.version = j.at("version").get<std::string>();
    const json& in = j.at("input");
    r.input_digest = in.at("digest").get<std::string>();
    r.input_name = in.at("name").get<std::string>();
    r.citation = in.at("citation").get<std::string>();
    r.result = j.at("result");
    if (j.contains("timing_ms")) r.timing_ms = j["timing_ms"].get<double>();
    return r;
  } catch (const json::exception& e) {
    throw InputError(std::string("not a report: ") + e.what());
  }
}

namespace {

void render(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  // Arrays without objects print on one line.
  auto flat = [](const json& v) {
    if (!v.is_array()) return false;
    std::string d = v.dump();
    return d.find('{') == std::string::npos;
  };
  auto inline_array = [&](const json& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      if (v[i].is_array()) {
        s += "(";
        for (std::size_t k = 0; k < v[i].size(); ++k) s += (k ? ", " : "") + scalar(v[i][k]);
        s += ")";
      } else {
        s += scalar(v[i]);
      }
    }
    return s + "]";
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_null()) continue;
      if (!v.is_structured()) {
        os << pad << k << ": " << scalar(v) << "\n";
      } else if (flat(v)) {
        os << pad << k << ": " << inline_array(v) << "\n";
      } else {
        os << pad << k << ":\n";
        render(os, v, indent + 1);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        os << pad << "-\n";
        render(os, v, indent + 1);
      } else {
        os << pad << "- " << scalar(v) << "\n";
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

std::string decimal(const Rational& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", q.get_d());
  return buf;
}

json vector_or_null(const std::optional<QVector>& v) { return v ? vector_json(*v) : json(nullptr); }

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  os << "version: " << r.version << "\n";
  os << "input: " << r.input_name << " (" << r.input_digest << ")\n";
  if (!r.citation.empty()) os << "source: " << r.citation << "\n";
  render(os, r.result, 0);
  if (r.timing_ms) os << "timing_ms: " << *r.timing_ms << "\n";
  return os.str();
}

std::string digest(const json& input) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : input.dump()) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

json interval_json(const IsolatingInterval& iv) {
  IsolatingInterval r = iv;
  if (!r.exact) r.exact = rational_value(r);
  if (!r.exact) refine(r, Rational("1/1000000000000"));
  json j;
  j["lo"] = rational_json(r.lo);
  j["hi"] = rational_json(r.hi);
  j["exact"] = r.exact ? rational_json(*r.exact) : json(nullptr);
  j["multiplicity"] = iv.multiplicity;
  j["approx"] = decimal(r.exact ? *r.exact : (r.lo + r.hi) / 2);
  return j;
}

json hilbert_json(const HilbertData& h) {
  json j;
  j["polynomial"] = h.polynomial_string();
  json c = json::array();
  for (const auto& x : h.polynomial) c.push_back(rational_json(x));
  j["coefficients"] = c;
  j["dimension"] = h.projective_dimension();
  j["degree"] = h.degree.get_str();
  json num = json::array();
  for (const auto& x : h.numerator) num.push_back(x.get_str());
  j["numerator"] = num;
  j["index_of_regularity"] = h.index_of_regularity;
  if (auto g = sectional_genus(h)) j["sectional_genus"] = rational_json(*g);
  return j;
}

json classification_json(const ClassificationReport& r) {
  json j;
  j["n"] = r.n;
  j["label"] = r.label;
  j["table_row"] = r.table_row;
  j["subcase"] = r.subcase;
  if (r.focal) j["focal"] = hilbert_json(*r.focal);
  if (r.cubic) {
    const CubicData& c = *r.cubic;
    json s;
    s["kind"] = c.kind;
    s["form"] = c.form.to_string();
    if (!c.form.is_zero()) {
      json sing;
      sing["dimension"] = c.sing.dimension;
      sing["length"] = c.sing.length.get_str();
      sing["distinct"] = c.sing.distinct;
      sing["unlocated"] = c.sing.unlocated;
      json pts = json::array();
      for (const auto& p : c.sing.points)
        pts.push_back({{"point", vector_json(p.point)}, {"rank", p.rank}, {"on_G35", p.on_g35}});
      sing["points"] = pts;
      sing["cone_vertex"] = vector_or_null(c.sing.cone_vertex);
      s["singular_locus"] = sing;
    }
    if (c.split)
      s["split"] = {{"linear", c.split->linear.to_string()},
                    {"quadric", c.split->quadric.to_string()},
                    {"quadric_rank", c.split->quadric_rank}};
    j["cubic"] = s;
  }
  json comps = json::array();
  for (const auto& c : r.components) {
    json e;
    e["name"] = c.name;
    e["description"] = c.description;
    e["degree"] = c.degree.get_str();
    e["hilbert"] = hilbert_json(c.hilbert);
    e["generators"] = c.ideal.generators().size();
    e["parasitic"] = c.parasitic ? json(*c.parasitic) : json(nullptr);
    e["notes"] = c.notes;
    comps.push_back(e);
  }
  j["components"] = comps;
  j["notes"] = r.notes;
  return j;
}

json focus_json(const FocusSet& f) {
  json j;
  j["line"] = vector_json(f.line.coords());
  j["points"] = {vector_json(f.p), vector_json(f.q)};
  j["form"] = f.form.to_string();
  j["degree"] = f.form.degree();
  j["line_in_focal_locus"] = f.line_in_focal;
  json roots = json::array();
  for (const auto& iv : f.roots.finite) roots.push_back(interval_json(iv));
  j["foci_l_over_m"] = roots;
  j["focus_at_infinity"] = f.roots.at_infinity;
  j["multiplicities"] = f.multiplicities;
  j["nonreal"] = f.nonreal;
  return j;
}

json eigen_json(const EigenData& e) {
  json j;
  j["u"] = vector_json(e.u);
  j["charpoly"] = e.charpoly.to_string();
  json ev = json::array();
  for (std::size_t i = 0; i < e.eigenvalues.size(); ++i) {
    json x = interval_json(e.eigenvalues[i]);
    x["eigenvector"] = vector_or_null(e.eigenvectors[i]);
    ev.push_back(x);
  }
  j["eigenvalues"] = ev;
  j["strictly_hyperbolic"] = e.strictly_hyperbolic;
  return j;
}

json temple_json(const TempleReport& t) {
  json j;
  j["verdict"] = t.verdict;
  j["certificate"] = "checked at the listed rational samples only; not a proof for all u";
  j["samples"] = t.samples;
  j["witness"] = vector_or_null(t.witness);
  j["detail"] = t.detail;
  json fam = json::array();
  for (std::size_t i = 0; i < t.degeneracy.size(); ++i)
    fam.push_back({{"family", i},
                   {"linearly_degenerate", t.degeneracy[i].holds},
                   {"straight_rarefaction", t.straightness[i].holds}});
  j["families"] = fam;
  return j;
}

}  // namespace plab::io
