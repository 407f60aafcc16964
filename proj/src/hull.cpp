#include "rbsep/hull.hpp"

#include <algorithm>

namespace rbsep {

int orient(const Point& a, const Point& b, const Point& c) {
  Rational v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

std::vector<Point> convex_hull(std::span<const Point> pts) {
  std::vector<Point> p(pts.begin(), pts.end());
  std::sort(p.begin(), p.end(), lex_less);
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() <= 2) return p;

  std::vector<Point> hull;
  // Lower hull, then upper hull (monotone chain, strict turns only).
  for (const Point& q : p) {
    while (hull.size() >= 2 && orient(hull[hull.size() - 2], hull.back(), q) <= 0) hull.pop_back();
    hull.push_back(q);
  }
  std::size_t lower = hull.size() + 1;
  for (auto it = p.rbegin() + 1; it != p.rend(); ++it) {
    while (hull.size() >= lower && orient(hull[hull.size() - 2], hull.back(), *it) <= 0) hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();
  return hull;
}

namespace {

bool on_segment(const Point& a, const Point& b, const Point& p) {
  if (orient(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Closed-segment intersection, including touching and collinear overlap.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  int o1 = orient(a, b, c);
  int o2 = orient(a, b, d);
  int o3 = orient(c, d, a);
  int o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

// Point in closed convex hull (hull as produced by convex_hull).
bool hull_contains(const std::vector<Point>& hull, const Point& p) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return hull[0] == p;
  if (hull.size() == 2) return on_segment(hull[0], hull[1], p);
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& a = hull[i];
    const Point& b = hull[(i + 1) % hull.size()];
    if (orient(a, b, p) < 0) return false;
  }
  return true;
}

std::vector<std::pair<Point, Point>> hull_edges(const std::vector<Point>& hull) {
  std::vector<std::pair<Point, Point>> edges;
  if (hull.size() == 2) {
    edges.emplace_back(hull[0], hull[1]);
  } else if (hull.size() >= 3) {
    for (std::size_t i = 0; i < hull.size(); ++i) {
      edges.emplace_back(hull[i], hull[(i + 1) % hull.size()]);
    }
  }
  return edges;
}

}  // namespace

bool hulls_strictly_disjoint(std::span<const Point> s, std::span<const Point> t) {
  if (s.empty() || t.empty()) return true;
  std::vector<Point> hs = convex_hull(s);
  std::vector<Point> ht = convex_hull(t);

  // Two compact convex sets can be strictly separated by a line iff they are
  // disjoint, and convex polygons intersect iff a vertex of one lies in the
  // other or two boundary edges meet.
  for (const Point& p : hs) {
    if (hull_contains(ht, p)) return false;
  }
  for (const Point& p : ht) {
    if (hull_contains(hs, p)) return false;
  }
  for (const auto& [a, b] : hull_edges(hs)) {
    for (const auto& [c, d] : hull_edges(ht)) {
      if (segments_intersect(a, b, c, d)) return false;
    }
  }
  return true;
}

}  // namespace rbsep
