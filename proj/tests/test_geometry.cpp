#include "rbsep/geometry.hpp"

#include <doctest.h>

using namespace rbsep;

namespace {
Point pt(long x, long y) { return {Rational(x), Rational(y)}; }
}  // namespace

TEST_CASE("line canonicalization merges equivalent forms") {
  CHECK(Line::vertical(Rational(3)) == Line::general(Rational(2), Rational(0), Rational(6)));
  CHECK(Line::horizontal(Rational(-1)) == Line::general(Rational(0), Rational(5), Rational(-5)));
  CHECK(Line::vertical(Rational(3)).kind() == LineKind::Vertical);
  CHECK(Line::horizontal(Rational(3)).kind() == LineKind::Horizontal);
  CHECK(Line::general(Rational(1), Rational(1), Rational(2)).kind() == LineKind::General);
  CHECK_THROWS_AS(Line::general(Rational(0), Rational(0), Rational(1)), std::invalid_argument);
}

TEST_CASE("side_of examples") {
  CHECK(side_of(Line::vertical(Rational(1)), pt(0, 0)) == -1);
  CHECK(side_of(Line::vertical(Rational(1)), pt(1, 7)) == 0);
  CHECK(side_of(Line::general(Rational(1), Rational(1), Rational(2)), pt(3, 0)) == 1);
}

TEST_CASE("separates requires strictly opposite sides") {
  CHECK(separates(Line::vertical(Rational(1)), pt(0, 0), pt(2, 0)));
  CHECK(!separates(Line::vertical(Rational(1)), pt(0, 0), pt(0, 5)));
  // Incidence is not separation.
  CHECK(!separates(Line::vertical(Rational(0)), pt(0, 0), pt(1, 0)));
}

TEST_CASE("separates is symmetric and irreflexive") {
  const Line l = Line::through(pt(0, 1), pt(5, 2));
  for (long x = -2; x <= 2; ++x) {
    for (long y = -2; y <= 2; ++y) {
      CHECK(separates(l, pt(x, y), pt(1, -3)) == separates(l, pt(1, -3), pt(x, y)));
      CHECK(!separates(l, pt(x, y), pt(x, y)));
    }
  }
}

TEST_CASE("through builds the line containing both points") {
  const Point a = pt(1, 2), b = pt(4, 8);
  const Line l = Line::through(a, b);
  CHECK(side_of(l, a) == 0);
  CHECK(side_of(l, b) == 0);
  CHECK_THROWS_AS(Line::through(a, a), std::invalid_argument);
}

TEST_CASE("dedup_lines removes duplicates across construction forms") {
  auto lines = dedup_lines({Line::vertical(Rational(1)), Line::general(Rational(3), Rational(0), Rational(3)),
                            Line::horizontal(Rational(2))});
  CHECK(lines.size() == 2);
}
