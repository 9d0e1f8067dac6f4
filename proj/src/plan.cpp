#include "horolab/plan.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "horolab/catalog.hpp"

namespace horolab::cli {

namespace {

struct Entry {
  std::string value;
  int line;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

class Diagnostics {
 public:
  explicit Diagnostics(std::string source) : source_(std::move(source)) {}
  [[noreturn]] void fail(int line, const std::string& key, const std::string& msg) const {
    throw UsageError(source_ + ":" + std::to_string(line) + ": " + key + ": " + msg);
  }

 private:
  std::string source_;
};

double parse_number(const std::string& token, const Diagnostics& diag, int line,
                    const std::string& key) {
  double v = 0.0;
  const char* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v))
    diag.fail(line, key, "'" + token + "' is not a finite number");
  return v;
}

Vec parse_vec(const std::string& text, const Diagnostics& diag, int line, const std::string& key) {
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);
  std::string token;
  std::vector<double> values;
  while (in >> token) values.push_back(parse_number(token, diag, line, key));
  if (values.empty() || values.size() > Vec::kCapacity)
    diag.fail(line, key, "'" + text + "' must have between 1 and 4 coordinates");
  Vec v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v[i] = values[i];
  return v;
}

int parse_order(const Entry& e, const Diagnostics& diag, const std::string& key,
                bool even = true) {
  const double v = parse_number(e.value, diag, e.line, key);
  if (v < 1 || v > 4096 || std::floor(v) != v)
    diag.fail(e.line, key, "must be an integer in [1, 4096]");
  if (even && static_cast<int>(v) % 2) diag.fail(e.line, key, "must be even");
  return static_cast<int>(v);
}

}  // namespace

ExperimentPlan parse_plan(std::istream& in, const std::string& source) {
  const Diagnostics diag(source);
  std::map<std::string, Entry> entries;
  std::string section;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') diag.fail(line_no, line, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "quadrature" && section != "output" && section != "plan")
        diag.fail(line_no, section, "unknown section");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) diag.fail(line_no, line, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    if (section == "quadrature" || section == "output") key = section + "." + key;
    if (key == "output.csv" || key == "output.path") key = "output";
    if (entries.count(key)) diag.fail(line_no, key, "duplicate key");
    entries[key] = {trim(line.substr(eq + 1)), line_no};
  }

  static const std::vector<std::string> known = {
      "manifold", "points",         "radii",         "fields",          "suites",
      "tangents", "output",         "quadrature.directions", "quadrature.polar",
      "quadrature.azimuth", "quadrature.radial"};
  for (const auto& [key, e] : entries)
    if (std::find(known.begin(), known.end(), key) == known.end())
      diag.fail(e.line, key, "unknown key");

  ExperimentPlan plan;
  if (!entries.count("manifold")) diag.fail(line_no, "manifold", "missing required key");
  {
    const Entry& e = entries["manifold"];
    plan.manifold_name = e.value;
    try {
      plan.manifold = catalog::manifold(e.value);
    } catch (const std::invalid_argument& ex) {
      diag.fail(e.line, "manifold", ex.what());
    }
  }
  const ManifoldModel& m = plan.manifold;

  if (!entries.count("suites")) diag.fail(line_no, "suites", "missing required key");
  {
    const Entry& e = entries["suites"];
    const auto all = catalog::suite_names();
    for (const auto& s : split(e.value, ',')) {
      if (std::find(all.begin(), all.end(), s) == all.end())
        diag.fail(e.line, "suites", "unknown suite '" + s + "'");
      plan.suites.push_back(s);
    }
    if (plan.suites.empty()) diag.fail(e.line, "suites", "must list at least one suite");
  }

  if (entries.count("points")) {
    const Entry& e = entries["points"];
    for (const auto& text : split(e.value, ';')) {
      if (text == "basepoint") {
        plan.basepoints.push_back(m.basepoint());
        continue;
      }
      const Vec v = parse_vec(text, diag, e.line, "points");
      if (v.size() != m.coord_size())
        diag.fail(e.line, "points",
                  "'" + text + "' needs " + std::to_string(m.coord_size()) + " coordinates on " +
                      m.name());
      if (!m.contains(Point{v})) diag.fail(e.line, "points", "'" + text + "' is not on " + m.name());
      plan.basepoints.push_back(Point{v});
    }
  }
  if (plan.basepoints.empty()) plan.basepoints.push_back(m.basepoint());

  if (!entries.count("radii")) diag.fail(line_no, "radii", "missing required key");
  {
    const Entry& e = entries["radii"];
    for (const auto& tok : split(e.value, ',')) {
      const double r = parse_number(tok, diag, e.line, "radii");
      if (!(r > 0.0)) diag.fail(e.line, "radii", "radius " + tok + " must be positive");
      const double bound = injectivity_bound(m, m.basepoint());
      if (r >= bound)
        diag.fail(e.line, "radii",
                  "radius " + tok + " is at or beyond the injectivity bound " +
                      std::to_string(bound) + " of " + m.name());
      plan.radii.push_back(r);
    }
    if (plan.radii.empty()) diag.fail(e.line, "radii", "must list at least one radius");
  }

  if (entries.count("fields")) {
    const Entry& e = entries["fields"];
    for (const auto& f : split(e.value, ',')) {
      const auto names = catalog::field_names();
      if (std::find(names.begin(), names.end(), f) == names.end())
        diag.fail(e.line, "fields", "unknown field '" + f + "'");
      if (!catalog::field_available(f, m))
        diag.fail(e.line, "fields", "field '" + f + "' is not defined on " + m.name());
      plan.fields.push_back(f);
    }
  }
  if (plan.fields.empty()) plan.fields.push_back("constant");

  if (entries.count("tangents")) {
    const Entry& e = entries["tangents"];
    for (const auto& text : split(e.value, ';')) {
      const Vec v = parse_vec(text, diag, e.line, "tangents");
      if (v.size() != static_cast<std::size_t>(m.dim()))
        diag.fail(e.line, "tangents", "'" + text + "' needs " + std::to_string(m.dim()) +
                                          " basis coefficients");
      if (std::fabs(norm(v) - 1.0) > 1e-10) diag.fail(e.line, "tangents", "'" + text + "' is not unit");
      plan.tangents.push_back(v);
    }
  }

  if (entries.count("quadrature.directions"))
    plan.quadrature.directions_2d =
        parse_order(entries["quadrature.directions"], diag, "quadrature.directions");
  if (entries.count("quadrature.polar"))
    plan.quadrature.polar_3d = parse_order(entries["quadrature.polar"], diag, "quadrature.polar");
  if (entries.count("quadrature.azimuth"))
    plan.quadrature.azimuth_3d =
        parse_order(entries["quadrature.azimuth"], diag, "quadrature.azimuth");
  if (entries.count("quadrature.radial"))
    plan.quadrature.radial = parse_order(entries["quadrature.radial"], diag, "quadrature.radial", false);

  if (entries.count("output")) plan.output = entries["output"].value;
  return plan;
}

ExperimentPlan load_plan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(path + ": cannot open plan file");
  return parse_plan(in, path);
}

}  // namespace horolab::cli
