#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpma {

using Point = std::vector<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Input could not be read or violates the data model (exit code 1).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An algorithmic precondition failed at run time (exit code 2).
class AlgorithmError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Equality of extended reals; equal infinities compare equal.
inline bool same_value(double a, double b, double tol) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::fabs(a - b) <= tol;
}

// a <= b coordinatewise, with slack tol on finite coordinates.
inline bool leq(const Point& a, const Point& b, double tol = 0.0) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    if (!(a[i] <= b[i] + tol)) return false;
  }
  return true;
}

inline double linf(const Point& a, const Point& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;  // covers equal infinities
    m = std::max(m, std::fabs(a[i] - b[i]));
  }
  return m;
}

struct Box {
  Point low;
  Point high;

  std::size_t dim() const { return low.size(); }

  bool contains(const Point& x, double tol = 0.0) const {
    for (std::size_t i = 0; i < low.size(); ++i)
      if (!(x[i] >= low[i] - tol && x[i] <= high[i] + tol)) return false;
    return true;
  }

  Box expanded(double r) const {
    Box b = *this;
    for (std::size_t i = 0; i < low.size(); ++i) {
      b.low[i] -= r;
      b.high[i] += r;
    }
    return b;
  }

  double diameter() const {
    double d = 0.0;
    for (std::size_t i = 0; i < low.size(); ++i) d = std::max(d, high[i] - low[i]);
    return d;
  }
};

}  // namespace mpma
