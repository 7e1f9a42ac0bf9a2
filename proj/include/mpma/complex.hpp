#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "mpma/core.hpp"

namespace mpma {

struct Simplex {
  int dim = 0;
  std::vector<int> facets;  // ids of codimension-1 faces, sorted
  Point grade;
};

// One-critical multi-filtered simplicial complex. Ids are positions in `simplices`.
struct FilteredComplex {
  int n_params = 0;
  std::vector<Simplex> simplices;

  std::size_t size() const { return simplices.size(); }
  int max_dim() const;
  // Sorted vertex ids of simplex `id`.
  std::vector<int> vertices(int id) const;
  // Coordinatewise bounding box of all grades.
  Box grade_box() const;
  // True iff `face` appears in the closure of `coface`'s facet lists.
  bool is_facet(int face, int coface) const;
};

// Throws DataError naming the first problem found.
void validate(const FilteredComplex& c);

FilteredComplex parse_complex(std::istream& in);
FilteredComplex parse_complex(const std::string& text);
std::string serialize(const FilteredComplex& c);

// Appends one grade coordinate: the max of vertex_values over each simplex's vertices.
FilteredComplex lower_star(const FilteredComplex& base, const std::map<int, double>& vertex_values);

// Incremental construction used by fixtures and generators. Grades are not
// checked until validate().
class ComplexBuilder {
 public:
  explicit ComplexBuilder(int n_params) { c_.n_params = n_params; }

  int vertex(Point grade);
  // Adds the simplex spanned by `verts` (sorted internally); all its facets must exist.
  int simplex(std::vector<int> verts, Point grade);
  // Returns the id of the simplex spanned by `verts`, or -1.
  int find(std::vector<int> verts) const;

  // H1 gadgets. A cycle is a hollow triangle; fill cones it off at `grade`;
  // tube glues two cycles along a triangulated cylinder so they become homologous.
  struct Cycle {
    int v[3];
  };
  Cycle cycle(const Point& grade);
  void fill(const Cycle& z, const Point& grade);
  void tube(const Cycle& a, const Cycle& b, const Point& grade);
  // Half-open rectangle [low, high) in degree 1; infinite high coordinates skip that fill.
  void rectangle(const Point& low, const Point& high);

  const FilteredComplex& complex() const { return c_; }
  FilteredComplex take() { return std::move(c_); }

 private:
  FilteredComplex c_;
  std::map<std::vector<int>, int> index_;
};

// Support of a planted interval summand, as birth and death corners.
struct TruthInterval {
  std::vector<Point> births;
  std::vector<Point> deaths;
};

struct Fixture {
  std::string name;
  FilteredComplex complex;
  int hom_dim = 1;
  Box box;                           // compact region the decomposition is checked on
  std::vector<TruthInterval> truth;  // empty when the module is not interval decomposable
  bool decomposable = true;
};

std::vector<std::string> fixture_names();
// Throws DataError for unknown names.
Fixture fixture(const std::string& name);

}  // namespace mpma
