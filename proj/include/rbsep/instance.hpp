#pragma once

#include "rbsep/geometry.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rbsep {

// Colored point multiset. Duplicate same-color points are allowed; an exact
// red/blue coincidence makes strict separation impossible and is flagged at
// construction so solvers can report "no solution exists".
struct Instance {
  std::vector<Point> red;
  std::vector<Point> blue;
  bool inseparable = false;

  static Instance make(std::vector<Point> red, std::vector<Point> blue);

  std::size_t n() const { return red.size() + blue.size(); }
};

struct Violation {
  enum class Kind { PointOnLine, UnseparatedPair };
  Kind kind;
  Point p;  // the offending point (PointOnLine) or the red point of the pair
  Point q;  // the blue point of the pair (UnseparatedPair only)
  Line line;  // PointOnLine only
};

struct FeasibilityReport {
  bool feasible = false;
  std::optional<Violation> violation;
};

// Strict separation check: feasible iff no input point lies on any line and
// every (red, blue) pair is split by some line. The first violation is
// reported under a fixed scan order: incidences with lines in the given order
// (points scanned reds-then-blues in lexicographic order), then unseparated
// pairs with reds outer and blues inner, both in lexicographic point order.
FeasibilityReport is_feasible(const Instance& instance, const std::vector<Line>& lines);

// Blue-coordinate strip structure. xs/ys hold the distinct blue coordinates
// in increasing order; conceptually both are extended with -inf/+inf
// sentinels, giving xs.size()+1 vertical and ys.size()+1 horizontal strips.
// Strip interiors contain no blue point.
struct StripDecomposition {
  std::vector<Rational> xs;
  std::vector<Rational> ys;

  int k() const { return static_cast<int>(xs.size()); }
  int l() const { return static_cast<int>(ys.size()); }
  int vert_strips() const { return k() + 1; }
  int horiz_strips() const { return l() + 1; }

  // Strip bounds; nullopt encodes the infinite sentinel.
  std::optional<Rational> x_lo(int j) const;
  std::optional<Rational> x_hi(int j) const;
  std::optional<Rational> y_lo(int i) const;
  std::optional<Rational> y_hi(int i) const;

  // Inclusive range of strip indices containing the coordinate; the range has
  // two entries exactly when the coordinate equals a blue coordinate.
  std::pair<int, int> vert_strips_of(const Rational& x) const;
  std::pair<int, int> horiz_strips_of(const Rational& y) const;
};

StripDecomposition strip_decomposition(const Instance& instance);

}  // namespace rbsep
