#include "rbsep/exact_search.hpp"

#include "rbsep/hull.hpp"
#include "rbsep/rng.hpp"

#include <doctest.h>

#include <set>

using namespace rbsep;

namespace {

Point pt(long x, long y) { return {Rational(x), Rational(y)}; }

Instance inst(std::vector<Point> red, std::vector<Point> blue) {
  return Instance::make(std::move(red), std::move(blue));
}

std::vector<Point> random_points(Rng& rng, int n, long grid) {
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) pts.push_back(pt(rng.range(0, grid), rng.range(0, grid)));
  return pts;
}

}  // namespace

TEST_CASE("axis candidates are midpoints of distinct coordinate gaps") {
  const Instance in = inst({pt(0, 0), pt(2, 1)}, {pt(2, 3), pt(5, 2)});
  const auto cand = axis_candidates(in);
  CHECK(cand.vertical == std::vector<Rational>{Rational(1), Rational(7, 2)});
  CHECK(cand.horizontal == std::vector<Rational>{Rational(1, 2), Rational(3, 2), Rational(5, 2)});
  // No candidate is incident to any point.
  for (const Rational& x : cand.vertical) {
    for (const Point& p : in.red) CHECK(p.x != x);
    for (const Point& p : in.blue) CHECK(p.x != x);
  }
}

TEST_CASE("axis candidates degenerate cases") {
  CHECK(axis_candidates(inst({pt(3, 3)}, {})).vertical.empty());
  const Instance in = inst({pt(0, 0), pt(1, 0), pt(2, 0)}, {pt(3, 0)});
  CHECK(axis_candidates(in).vertical.size() == 3);  // n distinct x -> n-1 candidates
}

TEST_CASE("solve_axis_bruteforce examples") {
  CHECK(solve_axis_bruteforce(inst({pt(0, 0)}, {pt(2, 0)}), 3).cost() == 1);
  CHECK(solve_axis_bruteforce(inst({pt(0, 0), pt(2, 2)}, {pt(0, 2), pt(2, 0)}), 3).cost() == 2);
  const auto insep = solve_axis_bruteforce(inst({pt(1, 1)}, {pt(1, 1)}), 5);
  CHECK(insep.status == BruteforceResult::Status::NoneWithin);
  const auto tight = solve_axis_bruteforce(inst({pt(0, 0), pt(2, 0)}, {pt(1, 0), pt(3, 0)}), 2);
  CHECK(tight.status == BruteforceResult::Status::NoneWithin);  // optimum is 3
}

TEST_CASE("bipartition families for tiny point sets") {
  SUBCASE("one point: the two trivial sides") {
    const auto bps = enumerate_separable_bipartitions(std::vector<Point>{pt(1, 1)});
    std::set<uint32_t> masks;
    for (const auto& b : bps) masks.insert(b.left_mask);
    CHECK(masks == std::set<uint32_t>{0u, 1u});
  }
  SUBCASE("three non-collinear points: all 8 subsets") {
    const auto bps =
        enumerate_separable_bipartitions(std::vector<Point>{pt(0, 0), pt(4, 0), pt(2, 3)});
    CHECK(bps.size() == 8);
  }
  SUBCASE("four points in convex position: 14 of 16 subsets") {
    const auto bps = enumerate_separable_bipartitions(
        std::vector<Point>{pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)});
    CHECK(bps.size() == 14);
    std::set<uint32_t> masks;
    for (const auto& b : bps) masks.insert(b.left_mask);
    // The two diagonal splits are not realizable.
    CHECK(!masks.count(0b0101));
    CHECK(!masks.count(0b1010));
  }
}

TEST_CASE("every realizing line avoids all points") {
  Rng rng(11);
  for (int iter = 0; iter < 40; ++iter) {
    const auto pts = random_points(rng, 1 + static_cast<int>(rng.below(7)), 5);
    const uint32_t all = (uint32_t(1) << pts.size()) - 1;
    for (const auto& bp : enumerate_separable_bipartitions(pts)) {
      uint32_t mask = 0;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        const int side = side_of(bp.line, pts[i]);
        CHECK(side != 0);
        if (side < 0) mask |= uint32_t(1) << i;
      }
      // The realizing line separates the left set from its complement; the
      // left set may sit on either side.
      const bool separated = mask == bp.left_mask || mask == (all & ~bp.left_mask);
      CHECK(separated);
    }
  }
}

TEST_CASE("bipartition completeness against the hull oracle (exhaustive, n <= 8)") {
  Rng rng(22);
  for (int iter = 0; iter < 60; ++iter) {
    const int n = 1 + static_cast<int>(rng.below(8));
    const auto pts = random_points(rng, n, 5);
    std::set<uint32_t> expected;
    for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
      std::vector<Point> s, t;
      for (int i = 0; i < n; ++i) ((mask >> i & 1u) ? s : t).push_back(pts[i]);
      if (hulls_strictly_disjoint(s, t)) expected.insert(mask);
    }
    std::set<uint32_t> got;
    for (const auto& bp : enumerate_separable_bipartitions(pts)) got.insert(bp.left_mask);
    CHECK(got == expected);
  }
}

TEST_CASE("solve_general_bruteforce examples") {
  CHECK(solve_general_bruteforce(inst({pt(0, 0)}, {pt(2, 0)}), 2).cost() == 1);
  // Hulls intersect, so one line cannot do it; two can.
  const auto xor4 = solve_general_bruteforce(inst({pt(0, 0), pt(2, 2)}, {pt(0, 2), pt(2, 0)}), 3);
  CHECK(xor4.cost() == 2);
}

TEST_CASE("general cost never exceeds axis-parallel cost") {
  Rng rng(33);
  for (int iter = 0; iter < 25; ++iter) {
    const Instance in = inst(random_points(rng, 1 + static_cast<int>(rng.below(5)), 4),
                             random_points(rng, 1 + static_cast<int>(rng.below(4)), 4));
    if (in.inseparable) continue;
    const auto axis = solve_axis_bruteforce(in, 6);
    REQUIRE(axis.status == BruteforceResult::Status::Solved);
    const auto general = solve_general_bruteforce(in, std::min(axis.cost(), 5));
    REQUIRE(general.status == BruteforceResult::Status::Solved);
    CHECK(general.cost() <= axis.cost());
  }
}

TEST_CASE("separable_with_one_line consistency") {
  CHECK(separable_with_one_line(inst({pt(0, 0)}, {pt(1, 1)})));
  // Nested hulls.
  CHECK(!separable_with_one_line(
      inst({pt(0, 0), pt(6, 0), pt(6, 6), pt(0, 6)}, {pt(3, 3)})));
  Rng rng(44);
  for (int iter = 0; iter < 60; ++iter) {
    const Instance in = inst(random_points(rng, 1 + static_cast<int>(rng.below(5)), 5),
                             random_points(rng, 1 + static_cast<int>(rng.below(5)), 5));
    const auto res = solve_general_bruteforce(in, 1);
    CHECK(separable_with_one_line(in) == (res.status == BruteforceResult::Status::Solved));
  }
}

TEST_CASE("a single feasible line implies strictly disjoint hulls") {
  Rng rng(55);
  int hits = 0;
  for (int iter = 0; iter < 120; ++iter) {
    const Instance in = inst(random_points(rng, 1 + static_cast<int>(rng.below(5)), 6),
                             random_points(rng, 1 + static_cast<int>(rng.below(4)), 6));
    std::vector<Line> cand;
    for (int i = 0; i < 3; ++i) {
      cand.push_back(Line::vertical(Rational(rng.range(0, 12), 2)));
      cand.push_back(Line::general(Rational(1), Rational(rng.range(-2, 2)), Rational(rng.range(0, 24), 2)));
    }
    for (const Line& l : cand) {
      if (is_feasible(in, {l}).feasible) {
        CHECK(hulls_strictly_disjoint(in.red, in.blue));
        ++hits;
      }
    }
  }
  CHECK(hits > 0);
}

TEST_CASE("resource guards") {
  CHECK_THROWS_AS(enumerate_separable_bipartitions(std::vector<Point>(26, pt(0, 0))),
                  ResourceLimitError);
  std::vector<Point> many;
  for (int i = 0; i < 30; ++i) many.push_back(pt(i, 0));
  CHECK_THROWS_AS(solve_general_bruteforce(inst(many, {pt(40, 0)}), 2), ResourceLimitError);
}
