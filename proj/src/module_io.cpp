#include "mpma/module_io.hpp"

#include <json.hpp>
#include <sstream>

namespace mpma {

using nlohmann::json;

namespace {

json coord(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

json point(const Point& p) {
  json a = json::array();
  for (double v : p) a.push_back(coord(v));
  return a;
}

double read_coord(const json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "inf" || s == "+inf") return kInf;
    if (s == "-inf") return -kInf;
  }
  throw DataError(where + ": expected a number, \"inf\" or \"-inf\"");
}

Point read_point(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) throw DataError(where + ": expected " + std::to_string(n) + " coordinates");
  Point p;
  for (const auto& v : j) p.push_back(read_coord(v, where));
  return p;
}

const char* matcher_name(Matcher m) { return m == Matcher::vineyard ? "vineyard" : "compatibility"; }

}  // namespace

std::string module_to_json(const ApproxModule& M) {
  json doc;
  doc["n_params"] = M.n_params;
  doc["delta"] = M.delta;
  doc["box"] = {{"low", point(M.box.low)}, {"high", point(M.box.high)}};
  doc["matcher"] = matcher_name(M.matcher);
  doc["n_lines"] = M.n_lines;
  doc["transpositions"] = {{"max_per_step", M.max_transpositions}, {"total", M.total_transpositions}};
  doc["ambiguous_matches"] = M.ambiguous_matches;
  json ivs = json::array();
  for (const auto& I : M.intervals) {
    json iv;
    iv["dim"] = I.hom_dim;
    iv["birth_corners"] = json::array();
    iv["death_corners"] = json::array();
    for (const auto& c : I.births) iv["birth_corners"].push_back(point(c.coords));
    for (const auto& c : I.deaths) iv["death_corners"].push_back(point(c.coords));
    iv["bar_count"] = I.diag.bar_count;
    iv["diagnostics"] = {{"raw_birth_sets", I.diag.raw_birth_sets},
                         {"raw_death_sets", I.diag.raw_death_sets},
                         {"label_conflicts", I.diag.label_conflicts}};
    ivs.push_back(std::move(iv));
  }
  doc["intervals"] = std::move(ivs);
  doc["warnings"] = M.warnings;
  return doc.dump(2) + "\n";
}

ApproxModule module_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed module document: ") + e.what());
  }
  if (!doc.is_object()) throw DataError("module document must be a JSON object");
  ApproxModule M;
  try {
    if (!doc.contains("n_params") || !doc["n_params"].is_number_integer())
      throw DataError("module document: missing integer 'n_params'");
    M.n_params = doc["n_params"].get<int>();
    if (M.n_params < 1) throw DataError("module document: n_params must be positive");
    const auto n = static_cast<std::size_t>(M.n_params);
    if (doc.contains("delta")) {
      if (!doc["delta"].is_number()) throw DataError("module document: 'delta' must be a number");
      M.delta = doc["delta"].get<double>();
    }
    if (doc.contains("box")) {
      const auto& b = doc["box"];
      if (!b.is_object() || !b.contains("low") || !b.contains("high"))
        throw DataError("module document: 'box' needs 'low' and 'high'");
      M.box = {read_point(b["low"], n, "box.low"), read_point(b["high"], n, "box.high")};
    }
    if (doc.contains("matcher") && doc["matcher"] == "compatibility") M.matcher = Matcher::compatibility;
    if (doc.contains("n_lines") && doc["n_lines"].is_number_unsigned()) M.n_lines = doc["n_lines"].get<std::size_t>();
    if (!doc.contains("intervals") || !doc["intervals"].is_array())
      throw DataError("module document: missing array 'intervals'");
    std::size_t k = 0;
    for (const auto& iv : doc["intervals"]) {
      const std::string where = "intervals[" + std::to_string(k++) + "]";
      if (!iv.is_object() || !iv.contains("dim") || !iv["dim"].is_number_integer())
        throw DataError(where + ": missing integer 'dim'");
      std::vector<Point> births, deaths;
      for (const char* key : {"birth_corners", "death_corners"}) {
        if (!iv.contains(key) || !iv[key].is_array()) throw DataError(where + ": missing array '" + key + "'");
        for (const auto& p : iv[key]) (key[0] == 'b' ? births : deaths).push_back(read_point(p, n, where + "." + key));
      }
      IntervalModule I = IntervalModule::from_points(iv["dim"].get<int>(), births, deaths);
      if (iv.contains("bar_count") && iv["bar_count"].is_number_unsigned())
        I.diag.bar_count = iv["bar_count"].get<std::size_t>();
      M.intervals.push_back(std::move(I));
    }
    if (doc.contains("warnings")) {
      if (!doc["warnings"].is_array()) throw DataError("module document: 'warnings' must be an array");
      for (const auto& w : doc["warnings"])
        if (w.is_string()) M.warnings.push_back(w.get<std::string>());
    }
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed module document: ") + e.what());
  }
  return M;
}

ApproxModule truth_module(const Fixture& fx) {
  ApproxModule M;
  M.n_params = fx.complex.n_params;
  M.box = fx.box;
  for (const auto& t : fx.truth) M.intervals.push_back(IntervalModule::from_points(fx.hom_dim, t.births, t.deaths));
  return M;
}

std::string raster_to_csv(const Raster& r) {
  std::ostringstream o;
  o.precision(17);
  o << "# box_low";
  for (double v : r.box.low) o << ' ' << v;
  o << " box_high";
  for (double v : r.box.high) o << ' ' << v;
  o << " resolution " << r.resolution << "\n";
  const std::size_t row = static_cast<std::size_t>(r.resolution);
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    o << r.values[i];
    o << (r.box.dim() >= 2 && (i + 1) % row != 0 ? ',' : '\n');
  }
  return o.str();
}

std::string raster_to_json(const Raster& r) {
  json doc;
  doc["box"] = {{"low", point(r.box.low)}, {"high", point(r.box.high)}};
  doc["resolution"] = r.resolution;
  doc["order"] = "axis 0 fastest";
  doc["values"] = r.values;
  return doc.dump() + "\n";
}

ApproxModule fig12_module(bool two_squares, double delta) {
  ApproxModule M;
  M.n_params = 2;
  M.delta = delta;
  M.box = {{0, 0}, {delta, delta}};
  const double h = delta / 2;
  if (two_squares)
    M.intervals.push_back(IntervalModule::from_points(0, {{0, h}, {h, 0}}, {{h, delta}, {delta, h}}));
  else
    M.intervals.push_back(IntervalModule::from_points(0, {{0, 0}}, {{delta, delta}}));
  return M;
}


}  // namespace mpma
