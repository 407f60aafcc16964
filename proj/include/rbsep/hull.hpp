#pragma once

#include "rbsep/geometry.hpp"

#include <span>
#include <vector>

namespace rbsep {

// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right, 0 collinear.
int orient(const Point& a, const Point& b, const Point& c);

// Convex hull in counter-clockwise order with strictly convex corners.
// Degenerate inputs give 1-point or 2-point hulls; the empty set stays empty.
std::vector<Point> convex_hull(std::span<const Point> pts);

// True iff some line has every point of s strictly on one side and every
// point of t strictly on the other, i.e. the closed convex hulls are
// disjoint. Either side empty is trivially separable. This is implemented
// from hull primitives only, independently of the line solvers, so it can
// serve as an oracle for them.
bool hulls_strictly_disjoint(std::span<const Point> s, std::span<const Point> t);

}  // namespace rbsep
