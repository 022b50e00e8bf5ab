// Copyright 2026 The stochord Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stochord/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "stochord/errors.hpp"
#include "stochord/stieltjes.hpp"
#include "stochord/tolerance.hpp"

namespace stochord {
namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail_parse(const std::string& why) {
  throw Error(errc::parse_error, why);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail_parse("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "json" / "csv" from the extension, else by looking at the first
// non-whitespace byte.
std::string detect_format(const std::string& path, const std::string& text) {
  const std::size_t dot = path.find_last_of('.');
  if (dot != std::string::npos) {
    std::string ext = path.substr(dot + 1);
    for (char& c : ext) c = static_cast<char>(std::tolower(c));
    if (ext == "json") return "json";
    if (ext == "csv") return "csv";
  }
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return (c == '{' || c == '[') ? "json" : "csv";
  }
  return "csv";
}

ordered_json parse_json_or_die(const std::string& text) {
  ordered_json j = ordered_json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail_parse("malformed JSON");
  return j;
}

double finite_number(const ordered_json& j, const char* what) {
  if (!j.is_number()) fail_parse(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) fail_parse(std::string(what) + " must be finite");
  return v;
}

bool parse_double(const std::string& token, double& out) {
  const char* begin = token.c_str();
  char* end = nullptr;
  out = std::strtod(begin, &end);
  if (end != begin + token.size() || token.empty()) return false;
  return std::isfinite(out);
}

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Non-empty trimmed lines, split on commas.
std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(trim(field));
    rows.push_back(std::move(fields));
  }
  return rows;
}

bool numeric_row(const std::vector<std::string>& row) {
  double ignored;
  for (const std::string& f : row)
    if (!parse_double(f, ignored)) return false;
  return true;
}

DiscreteCdf cdf_from_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows = csv_rows(text);
  if (rows.empty()) fail_parse("empty CSV input");
  std::size_t first = 0;
  if (!numeric_row(rows[0])) first = 1;  // header line
  if (first == rows.size()) fail_parse("CSV has a header but no data rows");
  const std::size_t width = rows[first].size();
  if (width != 1 && width != 2)
    fail_parse("CSV rows must have one (samples) or two (value,mass) fields");
  std::vector<Atom> atoms;
  for (std::size_t i = first; i < rows.size(); ++i) {
    if (rows[i].size() != width)
      fail_parse("inconsistent CSV field count at data row " +
                 std::to_string(i + 1));
    double v = 0.0;
    double m = 1.0;
    if (!parse_double(rows[i][0], v))
      fail_parse("bad number in CSV at data row " + std::to_string(i + 1));
    if (width == 2 && !parse_double(rows[i][1], m))
      fail_parse("bad number in CSV at data row " + std::to_string(i + 1));
    atoms.push_back({v, m});
  }
  return DiscreteCdf::from_atoms(std::move(atoms), /*normalize=*/true);
}

DiscreteCdf cdf_from_json(const std::string& text) {
  const ordered_json j = parse_json_or_die(text);
  if (!j.is_object()) fail_parse("distribution JSON must be an object");
  const bool has_atoms = j.contains("atoms");
  const bool has_samples = j.contains("samples");
  if (has_atoms == has_samples)
    fail_parse("distribution JSON needs exactly one of \"atoms\", \"samples\"");
  std::vector<Atom> atoms;
  if (has_atoms) {
    const ordered_json& arr = j["atoms"];
    if (!arr.is_array()) fail_parse("\"atoms\" must be an array");
    for (const ordered_json& e : arr) {
      if (!e.is_array() || e.size() != 2)
        fail_parse("each atom must be a [value, mass] pair");
      atoms.push_back(
          {finite_number(e[0], "atom value"), finite_number(e[1], "atom mass")});
    }
  } else {
    const ordered_json& arr = j["samples"];
    if (!arr.is_array()) fail_parse("\"samples\" must be an array");
    for (const ordered_json& e : arr)
      atoms.push_back({finite_number(e, "sample"), 1.0});
  }
  return DiscreteCdf::from_atoms(std::move(atoms), /*normalize=*/true);
}

std::vector<Knot> knots_from_json(const ordered_json& arr, const char* name) {
  if (!arr.is_array() || arr.empty())
    fail_parse(std::string("\"") + name + "\" must be a non-empty knot array");
  std::vector<Knot> knots;
  for (const ordered_json& e : arr) {
    if (!e.is_array() || e.size() != 2)
      fail_parse(std::string("each ") + name + " knot must be an [x, y] pair");
    knots.push_back(
        {finite_number(e[0], "knot x"), finite_number(e[1], "knot y")});
  }
  return knots;
}

Continuity continuity_from_string(const std::string& s) {
  if (s == "left") return Continuity::kLeft;
  if (s == "right") return Continuity::kRight;
  if (s == "continuous") return Continuity::kContinuous;
  fail_parse("continuity tag must be left, right or continuous");
}

const char* continuity_to_string(Continuity c) {
  switch (c) {
    case Continuity::kLeft:
      return "left";
    case Continuity::kRight:
      return "right";
    default:
      return "continuous";
  }
}

ordered_json knots_to_json(const MonotonePL& f) {
  ordered_json arr = ordered_json::array();
  for (const Knot& k : f.knots()) arr.push_back({k.x, k.y});
  return arr;
}

}  // namespace

DiscreteCdf parse_distribution(const std::string& text,
                               const std::string& format) {
  if (format == "json") return cdf_from_json(text);
  if (format == "csv") return cdf_from_csv(text);
  fail_parse("unknown distribution format \"" + format + "\"");
}

DiscreteCdf load_distribution(const std::string& path) {
  const std::string text = read_file(path);
  return parse_distribution(text, detect_format(path, text));
}

std::string serialize_distribution(const DiscreteCdf& f,
                                   const std::string& format) {
  if (format == "json") {
    ordered_json j;
    ordered_json arr = ordered_json::array();
    for (const Atom& a : f.atoms()) arr.push_back({a.location, a.mass});
    j["atoms"] = std::move(arr);
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    std::string out = "value,mass\n";
    char buf[96];
    for (const Atom& a : f.atoms()) {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", a.location, a.mass);
      out += buf;
    }
    return out;
  }
  fail_parse("unknown distribution format \"" + format + "\"");
}

StandardPair parse_pair(const std::string& text) {
  const ordered_json j = parse_json_or_die(text);
  if (!j.is_object() || !j.contains("u0") || !j.contains("v0"))
    fail_parse("pair JSON must be an object with \"u0\" and \"v0\" knot lists");
  Continuity u0_tag = Continuity::kContinuous;
  Continuity v0_tag = Continuity::kContinuous;
  if (j.contains("continuity")) {
    const ordered_json& tags = j["continuity"];
    if (!tags.is_object()) fail_parse("\"continuity\" must be an object");
    if (tags.contains("u0"))
      u0_tag = continuity_from_string(tags["u0"].get<std::string>());
    if (tags.contains("v0"))
      v0_tag = continuity_from_string(tags["v0"].get<std::string>());
  }
  MonotonePL u0(knots_from_json(j["u0"], "u0"), u0_tag);
  MonotonePL v0(knots_from_json(j["v0"], "v0"), v0_tag);
  return make_standard_pair(std::move(u0), std::move(v0));
}

StandardPair load_pair(const std::string& path) {
  return parse_pair(read_file(path));
}

std::string serialize_pair(const StandardPair& pair) {
  ordered_json j;
  j["u0"] = knots_to_json(pair.u0);
  j["v0"] = knots_to_json(pair.v0);
  j["continuity"] = {{"u0", continuity_to_string(pair.u0.continuity())},
                     {"v0", continuity_to_string(pair.v0.continuity())}};
  return j.dump(2) + "\n";
}

std::vector<double> parse_vector(const std::string& text,
                                 const std::string& format) {
  std::vector<double> out;
  if (format == "json") {
    const ordered_json j = parse_json_or_die(text);
    if (!j.is_object() || !j.contains("samples") || !j["samples"].is_array())
      fail_parse("vector JSON must be an object with a \"samples\" array");
    for (const ordered_json& e : j["samples"])
      out.push_back(finite_number(e, "entry"));
    return out;
  }
  if (format == "csv") {
    std::vector<std::vector<std::string>> rows = csv_rows(text);
    if (rows.empty()) fail_parse("empty CSV input");
    std::size_t first = numeric_row(rows[0]) ? 0 : 1;
    for (std::size_t i = first; i < rows.size(); ++i) {
      if (rows[i].size() != 1)
        fail_parse("vector CSV must have a single column");
      double v = 0.0;
      if (!parse_double(rows[i][0], v))
        fail_parse("bad number in CSV at data row " + std::to_string(i + 1));
      out.push_back(v);
    }
    return out;
  }
  fail_parse("unknown vector format \"" + format + "\"");
}

std::vector<double> load_vector(const std::string& path) {
  const std::string text = read_file(path);
  return parse_vector(text, detect_format(path, text));
}

std::string report_to_json(const EquivalenceReport& report) {
  ordered_json j;
  j["schema_version"] = 1;
  j["theorem"] = report.theorem;
  j["trials"] = report.trials;
  j["agreements"] = report.agreements;
  j["tolerance_marginal"] = report.tolerance_marginal;
  j["hard_failures"] = report.hard_failures();
  ordered_json arr = ordered_json::array();
  for (const Counterexample& ce : report.counterexamples) {
    ordered_json c;
    c["trial"] = ce.trial;
    c["tolerance_marginal"] = ce.tolerance_marginal;
    c["instance"] = ce.instance;
    ordered_json clauses = ordered_json::array();
    for (const ClauseOutcome& cl : ce.clauses) {
      ordered_json e;
      e["clause"] = cl.clause;
      e["holds"] = cl.holds;
      e["margin"] = cl.margin;
      clauses.push_back(std::move(e));
    }
    c["clauses"] = std::move(clauses);
    arr.push_back(std::move(c));
  }
  j["counterexamples"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::vector<std::pair<double, double>> lorenz_table(const DiscreteCdf& f,
                                                    int n_points,
                                                    bool normalize) {
  if (n_points < 1)
    throw Error(errc::bad_params, "lorenz table needs n_points >= 1");
  double scale = 1.0;
  if (normalize) {
    const double mu = f.mean();
    if (std::fabs(mu) <= kMassTol)
      throw Error(errc::zero_mean_normalize,
                  "cannot normalize a zero-mean distribution");
    scale = 1.0 / mu;
  }
  const Piecewise quantile = step_of_quantile(f);
  const MonotonePL unit = MonotonePL::identity(0.0, 1.0);
  std::vector<std::pair<double, double>> rows;
  rows.reserve(static_cast<std::size_t>(n_points) + 1);
  rows.emplace_back(0.0, 0.0);
  for (int k = 1; k <= n_points; ++k) {
    const double p = static_cast<double>(k) / static_cast<double>(n_points);
    const double value = ls_integral(quantile, unit, 0.0, p).value;
    rows.emplace_back(p, scale * value);
  }
  return rows;
}

}  // namespace stochord
