#include "rbsep/instance.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace rbsep {

namespace {

std::vector<std::size_t> lex_order(const std::vector<Point>& pts) {
  std::vector<std::size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t a, std::size_t b) { return lex_less(pts[a], pts[b]); });
  return idx;
}

}  // namespace

Instance Instance::make(std::vector<Point> red, std::vector<Point> blue) {
  Instance inst;
  inst.red = std::move(red);
  inst.blue = std::move(blue);

  std::vector<Point> rs = inst.red;
  std::vector<Point> bs = inst.blue;
  std::sort(rs.begin(), rs.end(), lex_less);
  std::sort(bs.begin(), bs.end(), lex_less);
  std::size_t i = 0, j = 0;
  while (i < rs.size() && j < bs.size()) {
    if (rs[i] == bs[j]) {
      inst.inseparable = true;
      break;
    }
    if (lex_less(rs[i], bs[j])) {
      ++i;
    } else {
      ++j;
    }
  }
  return inst;
}

FeasibilityReport is_feasible(const Instance& instance, const std::vector<Line>& lines) {
  const auto red_order = lex_order(instance.red);
  const auto blue_order = lex_order(instance.blue);
  const std::size_t m = lines.size();

  // Sides of every point w.r.t. every line, computed once.
  const std::size_t nr = instance.red.size();
  const std::size_t nb = instance.blue.size();
  std::vector<int8_t> red_side(nr * m), blue_side(nb * m);
  for (std::size_t li = 0; li < m; ++li) {
    for (std::size_t p = 0; p < nr; ++p) red_side[p * m + li] = static_cast<int8_t>(side_of(lines[li], instance.red[p]));
    for (std::size_t p = 0; p < nb; ++p) blue_side[p * m + li] = static_cast<int8_t>(side_of(lines[li], instance.blue[p]));
  }

  // Phase 1: incidences, lines in given order.
  for (std::size_t li = 0; li < m; ++li) {
    for (std::size_t p : red_order) {
      if (red_side[p * m + li] == 0) {
        return {false, Violation{Violation::Kind::PointOnLine, instance.red[p], Point{}, lines[li]}};
      }
    }
    for (std::size_t p : blue_order) {
      if (blue_side[p * m + li] == 0) {
        return {false, Violation{Violation::Kind::PointOnLine, instance.blue[p], Point{}, lines[li]}};
      }
    }
  }

  // Phase 2: pair coverage via per-point sign bitmasks (no zero signs remain).
  const std::size_t words = (m + 63) / 64;
  std::vector<uint64_t> red_neg(nr * words, 0), blue_neg(nb * words, 0);
  for (std::size_t p = 0; p < nr; ++p) {
    for (std::size_t li = 0; li < m; ++li) {
      if (red_side[p * m + li] < 0) red_neg[p * words + li / 64] |= uint64_t(1) << (li % 64);
    }
  }
  for (std::size_t p = 0; p < nb; ++p) {
    for (std::size_t li = 0; li < m; ++li) {
      if (blue_side[p * m + li] < 0) blue_neg[p * words + li / 64] |= uint64_t(1) << (li % 64);
    }
  }

  for (std::size_t r : red_order) {
    const uint64_t* rn = red_neg.data() + r * words;
    for (std::size_t b : blue_order) {
      const uint64_t* bn = blue_neg.data() + b * words;
      bool split = false;
      for (std::size_t w = 0; w < words; ++w) {
        if (rn[w] ^ bn[w]) {
          split = true;
          break;
        }
      }
      if (!split) {
        return {false,
                Violation{Violation::Kind::UnseparatedPair, instance.red[r], instance.blue[b], Line{}}};
      }
    }
  }
  return {true, std::nullopt};
}

std::optional<Rational> StripDecomposition::x_lo(int j) const {
  if (j <= 0) return std::nullopt;
  return xs[j - 1];
}

std::optional<Rational> StripDecomposition::x_hi(int j) const {
  if (j >= k()) return std::nullopt;
  return xs[j];
}

std::optional<Rational> StripDecomposition::y_lo(int i) const {
  if (i <= 0) return std::nullopt;
  return ys[i - 1];
}

std::optional<Rational> StripDecomposition::y_hi(int i) const {
  if (i >= l()) return std::nullopt;
  return ys[i];
}

namespace {

std::pair<int, int> strips_of(const std::vector<Rational>& coords, const Rational& v) {
  auto it = std::lower_bound(coords.begin(), coords.end(), v);
  int idx = static_cast<int>(it - coords.begin());
  if (it != coords.end() && *it == v) return {idx, idx + 1};
  return {idx, idx};
}

}  // namespace

std::pair<int, int> StripDecomposition::vert_strips_of(const Rational& x) const {
  return strips_of(xs, x);
}

std::pair<int, int> StripDecomposition::horiz_strips_of(const Rational& y) const {
  return strips_of(ys, y);
}

StripDecomposition strip_decomposition(const Instance& instance) {
  StripDecomposition strips;
  for (const Point& b : instance.blue) {
    strips.xs.push_back(b.x);
    strips.ys.push_back(b.y);
  }
  std::sort(strips.xs.begin(), strips.xs.end());
  strips.xs.erase(std::unique(strips.xs.begin(), strips.xs.end()), strips.xs.end());
  std::sort(strips.ys.begin(), strips.ys.end());
  strips.ys.erase(std::unique(strips.ys.begin(), strips.ys.end()), strips.ys.end());
  return strips;
}

}  // namespace rbsep
