// Copyright 2026 The reflectspin Authors - All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "reflectspin/model_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "reflectspin/errors.hpp"
#include "reflectspin/ground_state.hpp"

namespace reflectspin {

using nlohmann::json;

namespace {

class Parser {
 public:
  explicit Parser(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& path, const std::string& what) const {
    throw ParseError(source_ + ": " + path + ": " + what);
  }

  const json& field(const json& obj, const std::string& key, const std::string& path) const {
    if (!obj.is_object()) fail(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(path, "missing field '" + key + "'");
    return *it;
  }

  const json& array(const json& v, const std::string& path) const {
    if (!v.is_array()) fail(path, "expected an array");
    return v;
  }

  double number(const json& v, const std::string& path) const {
    if (!v.is_number()) fail(path, "expected a number");
    const double x = v.get<double>();
    if (!std::isfinite(x)) fail(path, "expected a finite number");
    return x;
  }

  std::size_t index(const json& v, const std::string& path) const {
    if (!v.is_number_integer() || v.get<long long>() < 0) fail(path, "expected a non-negative integer");
    return v.get<std::size_t>();
  }

  // Either a plain number or {"re": x, "im": y}.
  Complex complex(const json& v, const std::string& path) const {
    if (v.is_number()) return {number(v, path), 0.0};
    if (!v.is_object()) fail(path, "expected a number or {\"re\", \"im\"}");
    const double re = v.contains("re") ? number(v["re"], path + ".re") : 0.0;
    const double im = v.contains("im") ? number(v["im"], path + ".im") : 0.0;
    return {re, im};
  }

  Component component(const json& v, const std::string& path) const {
    try {
      if (v.is_number_integer()) return component_from_string(std::to_string(v.get<int>()));
      if (v.is_string()) return component_from_string(v.get<std::string>());
    } catch (const InvalidInput& e) {
      fail(path, e.what());
    }
    fail(path, "expected a component 1, 2, 3, \"+\" or \"-\"");
  }

  std::vector<CouplingTerm> terms(const json& arr, const std::string& path,
                                  std::size_t max_site) const {
    std::vector<CouplingTerm> out;
    array(arr, path);
    for (std::size_t t = 0; t < arr.size(); ++t) {
      const std::string tp = path + "[" + std::to_string(t) + "]";
      const json& sites = array(field(arr[t], "sites", tp), tp + ".sites");
      const json& comps = array(field(arr[t], "components", tp), tp + ".components");
      if (sites.size() != comps.size()) fail(tp, "'sites' and 'components' differ in length");
      if (sites.empty()) fail(tp + ".sites", "term needs at least one factor");
      CouplingTerm term;
      term.coefficient = arr[t].contains("coeff") ? complex(arr[t]["coeff"], tp + ".coeff") : 1.0;
      for (std::size_t f = 0; f < sites.size(); ++f) {
        const std::string fp = tp + ".sites[" + std::to_string(f) + "]";
        const std::size_t site = index(sites[f], fp);
        if (site >= max_site) fail(fp, "site index " + std::to_string(site) + " out of range");
        term.factors.push_back(
            {site, component(comps[f], tp + ".components[" + std::to_string(f) + "]")});
      }
      out.push_back(std::move(term));
    }
    return out;
  }

  Matrix matrix(const json& v, const std::string& path, Index d) const {
    Matrix m = Matrix::Zero(d, d);
    auto read = [&](const char* part, double scale_re, double scale_im) {
      if (!v.contains(part)) return;
      const std::string pp = path + "." + part;
      const json& rows = array(v[part], pp);
      if (static_cast<Index>(rows.size()) != d) fail(pp, "expected " + std::to_string(d) + " rows");
      for (Index r = 0; r < d; ++r) {
        const std::string rp = pp + "[" + std::to_string(r) + "]";
        const json& row = array(rows[r], rp);
        if (static_cast<Index>(row.size()) != d) fail(rp, "expected " + std::to_string(d) + " entries");
        for (Index c = 0; c < d; ++c) {
          const double x = number(row[c], rp + "[" + std::to_string(c) + "]");
          m(r, c) += Complex(scale_re * x, scale_im * x);
        }
      }
    };
    if (!v.is_object() || (!v.contains("re") && !v.contains("im"))) {
      fail(path, "expected {\"re\": [[...]], \"im\": [[...]]}");
    }
    read("re", 1.0, 0.0);
    read("im", 0.0, 1.0);
    return m;
  }

 private:
  std::string source_;
};

}  // namespace

std::vector<double> parse_b_grid(const std::string& text) {
  std::istringstream in(text);
  std::string lo, hi, n;
  if (!std::getline(in, lo, ':') || !std::getline(in, hi, ':') || !std::getline(in, n)) {
    throw InvalidInput("b-grid must look like lo:hi:n, got '" + text + "'");
  }
  try {
    const long count = std::stol(n);
    if (count < 1) throw InvalidInput("b-grid needs n >= 1");
    return uniform_grid(std::stod(lo), std::stod(hi), static_cast<std::size_t>(count));
  } catch (const std::logic_error&) {
    throw InvalidInput("b-grid must look like lo:hi:n, got '" + text + "'");
  }
}

ModelFile parse_model(const json& doc, const std::string& source,
                      std::optional<Index> dimension_cap_override) {
  Parser p(source);
  if (!doc.is_object()) p.fail("$", "model must be a JSON object");
  ModelFile model;
  model.name = doc.value("name", std::filesystem::path(source).stem().string());
  model.description = doc.value("description", std::string());

  // Options first: the dimension cap must be known before any allocation.
  if (doc.contains("options")) {
    const json& opt = doc["options"];
    if (!opt.is_object()) p.fail("options", "expected an object");
    if (opt.contains("degeneracy_tol")) {
      const double tol = p.number(opt["degeneracy_tol"], "options.degeneracy_tol");
      if (tol < 0) p.fail("options.degeneracy_tol", "must be non-negative");
      model.options.degeneracy_tol = tol;
    }
    if (opt.contains("dimension_cap")) {
      const std::size_t cap = p.index(opt["dimension_cap"], "options.dimension_cap");
      model.options.dimension_cap = static_cast<Index>(cap);
    }
    if (opt.contains("b_grid")) {
      const json& g = opt["b_grid"];
      if (g.is_array()) {
        std::vector<double> grid;
        for (std::size_t i = 0; i < g.size(); ++i) {
          grid.push_back(p.number(g[i], "options.b_grid[" + std::to_string(i) + "]"));
        }
        if (grid.empty()) p.fail("options.b_grid", "grid must not be empty");
        model.options.b_grid = grid;
      } else {
        const double lo = p.number(p.field(g, "lo", "options.b_grid"), "options.b_grid.lo");
        const double hi = p.number(p.field(g, "hi", "options.b_grid"), "options.b_grid.hi");
        const std::size_t n = p.index(p.field(g, "n", "options.b_grid"), "options.b_grid.n");
        if (n == 0) p.fail("options.b_grid.n", "must be positive");
        model.options.b_grid = uniform_grid(lo, hi, n);
      }
    }
  }
  model.spec.dimension_cap =
      dimension_cap_override.value_or(model.options.dimension_cap.value_or(kDefaultDimensionCap));

  const json& sites = p.array(p.field(doc, "sites", "$"), "sites");
  if (sites.empty()) p.fail("sites", "at least one site is required");
  std::vector<int> twice_s;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    const std::string sp = "sites[" + std::to_string(i) + "]";
    const std::size_t t = p.index(sites[i], sp);
    if (t < 1 || t > 64) p.fail(sp, "twice_s must be in [1, 64]");
    twice_s.push_back(static_cast<int>(t));
  }
  model.spec.sites = SiteList::from_twice_s(twice_s);
  try {
    check_capacity(model.spec.sites, model.spec.dimension_cap);
  } catch (const CapacityError& e) {
    throw CapacityError(source + ": " + e.what());
  }
  const std::size_t n = model.spec.sites.size();
  const Index d = model.spec.sites.dim();

  if (doc.contains("h") && doc.contains("left_terms")) {
    p.fail("$", "give either 'h' or 'left_terms', not both");
  }
  if (doc.contains("left_terms")) model.spec.left_terms = p.terms(doc["left_terms"], "left_terms", n);
  if (doc.contains("h")) model.spec.explicit_h = p.matrix(doc["h"], "h", d);
  if (doc.contains("asymmetric_terms")) {
    model.spec.asymmetric_terms = p.terms(doc["asymmetric_terms"], "asymmetric_terms", 2 * n);
  }

  const json& crossings = p.array(p.field(doc, "crossings", "$"), "crossings");
  for (std::size_t c = 0; c < crossings.size(); ++c) {
    const std::string cp = "crossings[" + std::to_string(c) + "]";
    const json& members = p.array(p.field(crossings[c], "members", cp), cp + ".members");
    CrossingSet set;
    for (std::size_t m = 0; m < members.size(); ++m) {
      const std::string mp = cp + ".members[" + std::to_string(m) + "]";
      const std::size_t site = p.index(p.field(members[m], "site", mp), mp + ".site");
      if (site >= n) p.fail(mp + ".site", "site index " + std::to_string(site) + " out of range");
      const Complex j = p.complex(p.field(members[m], "j", mp), mp + ".j");
      if (j.imag() != 0.0) {
        throw ValidationError(source + ": " + mp +
                              ".j: crossing coefficients j_i must be real, got imaginary part " +
                              std::to_string(j.imag()));
      }
      set.members.push_back({site, j.real()});
    }
    model.spec.crossings.push_back(std::move(set));
  }

  if (doc.contains("expect")) {
    const json& e = doc["expect"];
    if (!e.is_object()) p.fail("expect", "expected an object");
    if (e.contains("reflection_symmetric")) {
      if (!e["reflection_symmetric"].is_boolean()) p.fail("expect.reflection_symmetric", "expected a boolean");
      model.expect_reflection_symmetric = e["reflection_symmetric"].get<bool>();
    }
  }

  // Validate crossings and Hermiticity now so bad files fail at load time.
  try {
    validate_spec(model.spec);
  } catch (const ValidationError& e) {
    throw ValidationError(source + ": " + e.what());
  }
  return model;
}

ModelFile parse_model_text(const std::string& text, const std::string& source,
                           std::optional<Index> dimension_cap_override) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    // Convert the byte offset to line:column.
    std::size_t line = 1, col = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(source + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": invalid JSON: " + e.what());
  }
  return parse_model(doc, source, dimension_cap_override);
}

ModelFile load_model(const std::filesystem::path& path, std::optional<Index> dimension_cap_override) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open model file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model_text(buf.str(), path.string(), dimension_cap_override);
}

std::vector<std::filesystem::path> model_paths(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  if (!fs::exists(path)) throw IoError("no such model file or directory: " + path.string());
  if (!fs::is_directory(path)) return {path};
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(path)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  if (out.empty()) throw IoError("no *.json model files in " + path.string());
  return out;
}

namespace {

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json terms_json(const std::vector<CouplingTerm>& terms) {
  json arr = json::array();
  for (const auto& t : terms) {
    json sites = json::array(), comps = json::array();
    for (const auto& f : t.factors) {
      sites.push_back(f.site);
      comps.push_back(to_string(f.component));
    }
    arr.push_back({{"sites", sites}, {"components", comps}, {"coeff", complex_json(t.coefficient)}});
  }
  return arr;
}

}  // namespace

json model_to_json(const ModelFile& model) {
  json doc;
  doc["name"] = model.name;
  if (!model.description.empty()) doc["description"] = model.description;
  json sites = json::array();
  for (const auto& s : model.spec.sites.spins()) sites.push_back(s.twice_s());
  doc["sites"] = sites;
  if (model.spec.explicit_h) {
    const Matrix& h = *model.spec.explicit_h;
    json re = json::array(), im = json::array();
    for (Index r = 0; r < h.rows(); ++r) {
      json rr = json::array(), ri = json::array();
      for (Index c = 0; c < h.cols(); ++c) {
        rr.push_back(h(r, c).real());
        ri.push_back(h(r, c).imag());
      }
      re.push_back(rr);
      im.push_back(ri);
    }
    doc["h"] = {{"re", re}, {"im", im}};
  } else {
    doc["left_terms"] = terms_json(model.spec.left_terms);
  }
  json crossings = json::array();
  for (const auto& set : model.spec.crossings) {
    json members = json::array();
    for (const auto& m : set.members) members.push_back({{"site", m.site}, {"j", m.j}});
    crossings.push_back({{"members", members}});
  }
  doc["crossings"] = crossings;
  if (!model.spec.asymmetric_terms.empty()) {
    doc["asymmetric_terms"] = terms_json(model.spec.asymmetric_terms);
  }
  if (!model.expect_reflection_symmetric) doc["expect"] = {{"reflection_symmetric", false}};
  json opt = json::object();
  if (model.options.degeneracy_tol) opt["degeneracy_tol"] = *model.options.degeneracy_tol;
  if (model.options.b_grid) opt["b_grid"] = *model.options.b_grid;
  if (model.options.dimension_cap) opt["dimension_cap"] = *model.options.dimension_cap;
  if (!opt.empty()) doc["options"] = opt;
  return doc;
}

}  // namespace reflectspin
