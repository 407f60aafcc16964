#pragma once

#include "rbsep/instance.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace rbsep {

// Candidate axis-parallel line positions: midpoints between consecutive
// distinct coordinates of all points, both colors. Any axis-parallel line
// avoiding the points induces the same bipartition as one of these.
struct CandidateSet {
  std::vector<Rational> vertical;
  std::vector<Rational> horizontal;
};

CandidateSet axis_candidates(const Instance& instance);

struct BruteforceResult {
  enum class Status { Solved, NoneWithin };
  Status status = Status::NoneWithin;
  std::vector<Line> lines;

  int cost() const { return static_cast<int>(lines.size()); }
};

// Exact minimum axis-parallel separation over the candidate set, by iterative
// deepening with the subset size split across vertical/horizontal picks.
// Throws ResourceLimitError when the combinatorial budget is exceeded.
BruteforceResult solve_axis_bruteforce(const Instance& instance, int k_max);

// A line-realizable bipartition of a point set: the points strictly on the
// negative ("left") side of the realizing line, which itself avoids every
// point.
struct Bipartition {
  uint32_t left_mask = 0;
  Line line;

  std::vector<int> left_set(int n) const;
};

// All bipartitions realizable by a line avoiding the points (n <= 25).
// For every point pair the line through them is perturbed exactly: two
// translations along the normal and two rotations of the normal about the
// midpoint, with magnitudes computed from the actual clearances; duplicates
// are removed by left set. The two trivial bipartitions are always included.
std::vector<Bipartition> enumerate_separable_bipartitions(std::span<const Point> points);

// Exact minimum general-slope separation: set cover over (red, blue) pairs by
// realizable bipartitions, with subset-dominated candidates pruned, searched
// by iterative deepening.
BruteforceResult solve_general_bruteforce(const Instance& instance, int k_max);

// One line suffices iff the convex hulls are strictly disjoint.
bool separable_with_one_line(const Instance& instance);

}  // namespace rbsep
