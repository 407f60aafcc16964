#include "rbsep/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace rbsep {

bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

Line Line::vertical(Rational x0) { return Line(Rational(1), Rational(0), std::move(x0)); }

Line Line::horizontal(Rational y0) { return Line(Rational(0), Rational(1), std::move(y0)); }

Line Line::general(Rational a, Rational b, Rational c) {
  if (a == 0 && b == 0) throw std::invalid_argument("Line::general: (a, b) must be nonzero");
  if (a != 0) {
    b /= a;
    c /= a;
    a = 1;
  } else {
    c /= b;
    b = 1;
  }
  return Line(std::move(a), std::move(b), std::move(c));
}

Line Line::through(const Point& p, const Point& q) {
  if (p == q) throw std::invalid_argument("Line::through: points coincide");
  Rational a = q.y - p.y;
  Rational b = p.x - q.x;
  Rational c = a * p.x + b * p.y;
  return general(std::move(a), std::move(b), std::move(c));
}

LineKind Line::kind() const {
  if (a_ == 1 && b_ == 0) return LineKind::Vertical;
  if (a_ == 0 && b_ == 1) return LineKind::Horizontal;
  return LineKind::General;
}

bool Line::operator<(const Line& o) const {
  return std::tie(a_, b_, c_) < std::tie(o.a_, o.b_, o.c_);
}

int side_of(const Line& line, const Point& p) {
  Rational v = line.a() * p.x + line.b() * p.y - line.c();
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

bool separates(const Line& line, const Point& p, const Point& q) {
  return side_of(line, p) * side_of(line, q) == -1;
}

std::vector<Line> dedup_lines(std::vector<Line> lines) {
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

}  // namespace rbsep
