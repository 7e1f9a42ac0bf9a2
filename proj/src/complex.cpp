#include "mpma/complex.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <set>
#include <sstream>

namespace mpma {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
  throw DataError("line " + std::to_string(line) + ": " + what);
}

long parse_int(const std::string& tok, std::size_t line) {
  long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) fail_at(line, "expected an integer, got '" + tok + "'");
  return v;
}

double parse_real(const std::string& tok, std::size_t line) {
  double v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size()) fail_at(line, "expected a number, got '" + tok + "'");
  if (!std::isfinite(v)) fail_at(line, "grade values must be finite");
  return v;
}

std::string fmt(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

std::string fmt(const Point& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + fmt(p[i]);
  return s + ")";
}

}  // namespace

int FilteredComplex::max_dim() const {
  int d = -1;
  for (const auto& s : simplices) d = std::max(d, s.dim);
  return d;
}

std::vector<int> FilteredComplex::vertices(int id) const {
  const Simplex& s = simplices[id];
  if (s.dim == 0) return {id};
  std::set<int> vs;
  for (int f : s.facets)
    for (int v : vertices(f)) vs.insert(v);
  return {vs.begin(), vs.end()};
}

Box FilteredComplex::grade_box() const {
  Box b{Point(n_params, kInf), Point(n_params, -kInf)};
  for (const auto& s : simplices)
    for (int i = 0; i < n_params; ++i) {
      b.low[i] = std::min(b.low[i], s.grade[i]);
      b.high[i] = std::max(b.high[i], s.grade[i]);
    }
  if (simplices.empty()) b = Box{Point(n_params, 0.0), Point(n_params, 0.0)};
  return b;
}

bool FilteredComplex::is_facet(int face, int coface) const {
  const auto& f = simplices[coface].facets;
  return std::binary_search(f.begin(), f.end(), face);
}

void validate(const FilteredComplex& c) {
  if (c.n_params < 1) throw DataError("n_params must be at least 1");
  const int n = static_cast<int>(c.size());
  std::set<std::vector<int>> seen;
  for (int id = 0; id < n; ++id) {
    const Simplex& s = c.simplices[id];
    const std::string who = "simplex " + std::to_string(id);
    if (s.dim < 0) throw DataError(who + ": negative dimension");
    if (static_cast<int>(s.grade.size()) != c.n_params)
      throw DataError(who + ": grade has " + std::to_string(s.grade.size()) + " values, expected " +
                      std::to_string(c.n_params));
    for (double g : s.grade)
      if (!std::isfinite(g)) throw DataError(who + ": non-finite grade");
    const std::size_t want = s.dim == 0 ? 0 : static_cast<std::size_t>(s.dim) + 1;
    if (s.facets.size() != want)
      throw DataError(who + ": dimension " + std::to_string(s.dim) + " needs " + std::to_string(want) + " facets, got " +
                      std::to_string(s.facets.size()));
    for (int f : s.facets) {
      if (f < 0 || f >= n || f == id)
        throw DataError(who + ": dangling facet reference " + std::to_string(f));
      if (c.simplices[f].dim != s.dim - 1)
        throw DataError(who + ": facet " + std::to_string(f) + " has dimension " + std::to_string(c.simplices[f].dim));
    }
    if (std::adjacent_find(s.facets.begin(), s.facets.end()) != s.facets.end())
      throw DataError(who + ": repeated facet");
  }
  // Facet dimensions strictly decrease, so vertices() terminates.
  for (int id = 0; id < n; ++id) {
    const Simplex& s = c.simplices[id];
    auto vs = c.vertices(id);
    if (static_cast<int>(vs.size()) != s.dim + 1)
      throw DataError("simplex " + std::to_string(id) + ": facets do not bound a simplex");
    if (!seen.insert(vs).second) throw DataError("simplex " + std::to_string(id) + ": duplicate simplex");
    for (int f : s.facets)
      if (!leq(c.simplices[f].grade, s.grade))
        throw DataError("grade monotonicity violated: face " + std::to_string(f) + " " + fmt(c.simplices[f].grade) +
                        " exceeds coface " + std::to_string(id) + " " + fmt(s.grade));
  }
}

FilteredComplex parse_complex(std::istream& in) {
  FilteredComplex c;
  std::string raw;
  std::size_t lineno = 0;
  long declared = -1;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (declared < 0) {
      auto tok = split_ws(line);
      if (tok.size() != 3 || tok[0] != "mpcomplex") fail_at(lineno, "expected header 'mpcomplex <n_params> <n_simplices>'");
      c.n_params = static_cast<int>(parse_int(tok[1], lineno));
      declared = parse_int(tok[2], lineno);
      if (c.n_params < 1) fail_at(lineno, "n_params must be at least 1");
      if (declared < 0) fail_at(lineno, "negative simplex count");
      c.simplices.reserve(declared);
      continue;
    }
    std::vector<std::string> fields;
    for (std::size_t start = 0;;) {
      auto bar = line.find(';', start);
      fields.push_back(trim(line.substr(start, bar == std::string::npos ? std::string::npos : bar - start)));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    if (fields.size() > 3) fail_at(lineno, "multi-critical grades are not supported");
    if (fields.size() != 3) fail_at(lineno, "expected '<dim> ; <facets> ; <grade>'");
    if (static_cast<long>(c.size()) >= declared) fail_at(lineno, "more simplices than declared in the header");
    Simplex s;
    auto dim_tok = split_ws(fields[0]);
    if (dim_tok.size() != 1) fail_at(lineno, "expected a single dimension");
    s.dim = static_cast<int>(parse_int(dim_tok[0], lineno));
    if (s.dim < 0) fail_at(lineno, "negative dimension");
    for (const auto& t : split_ws(fields[1])) s.facets.push_back(static_cast<int>(parse_int(t, lineno)));
    std::sort(s.facets.begin(), s.facets.end());
    for (const auto& t : split_ws(fields[2])) s.grade.push_back(parse_real(t, lineno));
    if (static_cast<int>(s.grade.size()) != c.n_params) {
      if (!s.grade.empty() && s.grade.size() % c.n_params == 0)
        fail_at(lineno, "multi-critical grades are not supported");
      fail_at(lineno, "expected " + std::to_string(c.n_params) + " grade values, got " + std::to_string(s.grade.size()));
    }
    const long id = static_cast<long>(c.size());
    for (int f : s.facets)
      if (f < 0 || f >= declared || f == id) fail_at(lineno, "dangling facet reference " + std::to_string(f));
    c.simplices.push_back(std::move(s));
  }
  if (declared < 0) throw DataError("missing 'mpcomplex' header");
  if (static_cast<long>(c.size()) != declared)
    throw DataError("header declares " + std::to_string(declared) + " simplices, found " + std::to_string(c.size()));
  for (std::size_t id = 0; id < c.size(); ++id)
    for (int f : c.simplices[id].facets)
      if (c.simplices[f].dim != c.simplices[id].dim - 1)
        throw DataError("simplex " + std::to_string(id) + ": facet " + std::to_string(f) + " has wrong dimension");
  validate(c);
  return c;
}

FilteredComplex parse_complex(const std::string& text) {
  std::istringstream in(text);
  return parse_complex(in);
}

std::string serialize(const FilteredComplex& c) {
  std::string out = "mpcomplex " + std::to_string(c.n_params) + " " + std::to_string(c.size()) + "\n";
  for (const auto& s : c.simplices) {
    out += std::to_string(s.dim) + " ;";
    for (int f : s.facets) out += " " + std::to_string(f);
    out += " ;";
    for (double g : s.grade) out += " " + fmt(g);
    out += "\n";
  }
  return out;
}

FilteredComplex lower_star(const FilteredComplex& base, const std::map<int, double>& vertex_values) {
  FilteredComplex out = base;
  out.n_params = base.n_params + 1;
  for (std::size_t id = 0; id < base.size(); ++id) {
    double m = -kInf;
    for (int v : base.vertices(static_cast<int>(id))) {
      auto it = vertex_values.find(v);
      if (it == vertex_values.end()) throw DataError("lower_star: missing value for vertex " + std::to_string(v));
      m = std::max(m, it->second);
    }
    out.simplices[id].grade.push_back(m);
  }
  return out;
}

// ---------------------------------------------------------------- builder

int ComplexBuilder::vertex(Point grade) {
  int id = static_cast<int>(c_.size());
  c_.simplices.push_back({0, {}, std::move(grade)});
  index_[{id}] = id;
  return id;
}

int ComplexBuilder::find(std::vector<int> verts) const {
  std::sort(verts.begin(), verts.end());
  auto it = index_.find(verts);
  return it == index_.end() ? -1 : it->second;
}

int ComplexBuilder::simplex(std::vector<int> verts, Point grade) {
  std::sort(verts.begin(), verts.end());
  if (verts.size() == 1) return verts[0];
  if (index_.count(verts)) throw DataError("builder: duplicate simplex");
  Simplex s{static_cast<int>(verts.size()) - 1, {}, std::move(grade)};
  for (std::size_t skip = 0; skip < verts.size(); ++skip) {
    std::vector<int> face;
    for (std::size_t k = 0; k < verts.size(); ++k)
      if (k != skip) face.push_back(verts[k]);
    int f = find(face);
    if (f < 0) throw DataError("builder: missing facet");
    s.facets.push_back(f);
  }
  std::sort(s.facets.begin(), s.facets.end());
  int id = static_cast<int>(c_.size());
  c_.simplices.push_back(std::move(s));
  index_[verts] = id;
  return id;
}

ComplexBuilder::Cycle ComplexBuilder::cycle(const Point& g) {
  Cycle z{{vertex(g), vertex(g), vertex(g)}};
  simplex({z.v[0], z.v[1]}, g);
  simplex({z.v[1], z.v[2]}, g);
  simplex({z.v[0], z.v[2]}, g);
  return z;
}

void ComplexBuilder::fill(const Cycle& z, const Point& g) {
  int apex = vertex(g);
  for (int v : z.v) simplex({apex, v}, g);
  simplex({apex, z.v[0], z.v[1]}, g);
  simplex({apex, z.v[1], z.v[2]}, g);
  simplex({apex, z.v[0], z.v[2]}, g);
}

void ComplexBuilder::tube(const Cycle& a, const Cycle& b, const Point& g) {
  for (int i = 0; i < 3; ++i) {
    simplex({a.v[i], b.v[i]}, g);
    simplex({a.v[i], b.v[(i + 1) % 3]}, g);
  }
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3;
    simplex({a.v[i], a.v[j], b.v[j]}, g);
    simplex({a.v[i], b.v[i], b.v[j]}, g);
  }
}

void ComplexBuilder::rectangle(const Point& low, const Point& high) {
  Cycle z = cycle(low);
  for (std::size_t i = 0; i < low.size(); ++i) {
    if (std::isinf(high[i])) continue;
    Point g = low;
    g[i] = high[i];
    fill(z, g);
  }
}

// ---------------------------------------------------------------- fixtures

std::vector<std::string> fixture_names() {
  return {"fig8_left", "fig8_right", "fig9_left", "fig9_right", "fig10_indecomposable", "nested_squares"};
}

Fixture fixture(const std::string& name) {
  Fixture fx;
  fx.name = name;
  ComplexBuilder b(2);
  const Point up{kInf, kInf};
  if (name == "fig8_left") {
    auto za = b.cycle({0, 2});
    auto zb = b.cycle({2, 0});
    b.tube(za, zb, {2, 2});
    b.cycle({2, 2});
    fx.box = {{0, 0}, {4, 4}};
    fx.truth = {{{{0, 2}, {2, 0}}, {up}}, {{{2, 2}}, {up}}};
  } else if (name == "fig8_right") {
    b.cycle({0, 2});
    b.cycle({2, 0});
    fx.box = {{0, 0}, {4, 4}};
    fx.truth = {{{{0, 2}}, {up}}, {{{2, 0}}, {up}}};
  } else if (name == "fig9_left") {
    auto z1 = b.cycle({0, 2});
    auto z2 = b.cycle({2, 0});
    b.tube(z1, z2, {2, 2});
    b.fill(z1, {0, 5});
    b.fill(z2, {5, 0});
    b.fill(z1, {3, 3});
    b.rectangle({2, 2}, {3, 3});
    fx.box = {{0, 0}, {5, 5}};
    fx.truth = {{{{0, 2}, {2, 0}}, {{3, 5}, {5, 3}}}, {{{2, 2}}, {{3, 3}}}};
  } else if (name == "fig9_right") {
    b.rectangle({0, 2}, {3, 5});
    b.rectangle({2, 0}, {5, 3});
    fx.box = {{0, 0}, {5, 5}};
    fx.truth = {{{{0, 2}}, {{3, 5}}}, {{{2, 0}}, {{5, 3}}}};
  } else if (name == "fig10_indecomposable") {
    auto g = b.cycle({0, 2});
    auto h = b.cycle({2, 0});
    b.tube(g, h, {4, 2});
    fx.box = {{0, 0}, {6, 4}};
    fx.decomposable = false;
  } else if (name == "nested_squares") {
    b.rectangle({0, 0}, {4, 4});
    b.rectangle({0, 0}, {4, 2});
    fx.box = {{0, 0}, {5, 5}};
    fx.truth = {{{{0, 0}}, {{4, 4}}}, {{{0, 0}}, {{4, 2}}}};
  } else {
    throw DataError("unknown fixture '" + name + "'");
  }
  fx.complex = b.take();
  validate(fx.complex);
  return fx;
}

}  // namespace mpma
