#pragma once

#include "rbsep/rational.hpp"

#include <vector>

namespace rbsep {

struct Point {
  Rational x;
  Rational y;

  bool operator==(const Point&) const = default;
};

// Lexicographic (x, y) order.
bool lex_less(const Point& a, const Point& b);

enum class LineKind { Vertical, Horizontal, General };

// A line a*x + b*y = c stored in canonical scaling: the first nonzero of
// (a, b) equals 1. Vertical(x0) is exactly (1, 0, x0) and Horizontal(y0) is
// (0, 1, y0), so the constructors below all map to the same representation
// and equality is plain field comparison.
class Line {
 public:
  Line() : a_(1), b_(0), c_(0) {}

  static Line vertical(Rational x0);
  static Line horizontal(Rational y0);
  static Line general(Rational a, Rational b, Rational c);
  // Line through two distinct points.
  static Line through(const Point& p, const Point& q);

  LineKind kind() const;
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  // For axis-parallel lines: the x (vertical) or y (horizontal) position.
  const Rational& offset() const { return c_; }

  bool operator==(const Line&) const = default;
  bool operator<(const Line& o) const;

 private:
  Line(Rational a, Rational b, Rational c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  Rational a_, b_, c_;
};

// Sign of a*p.x + b*p.y - c, exact: 0 means incidence.
int side_of(const Line& line, const Point& p);

// True iff p and q lie in strictly opposite open half-planes of the line.
// Incidence of either point is not separation.
bool separates(const Line& line, const Point& p, const Point& q);

// Sorts canonically and removes duplicate lines.
std::vector<Line> dedup_lines(std::vector<Line> lines);

}  // namespace rbsep
