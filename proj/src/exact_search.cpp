#include "rbsep/exact_search.hpp"

#include "rbsep/hull.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rbsep {

namespace {

std::vector<Rational> gap_midpoints(std::vector<Rational> coords) {
  std::sort(coords.begin(), coords.end());
  coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
  std::vector<Rational> mids;
  for (std::size_t i = 1; i < coords.size(); ++i) mids.push_back((coords[i - 1] + coords[i]) / 2);
  return mids;
}

using Mask = std::vector<uint64_t>;

void set_bit(Mask& m, std::size_t i) { m[i / 64] |= uint64_t(1) << (i % 64); }

bool covers_all(const Mask& m, const Mask& full) {
  for (std::size_t w = 0; w < m.size(); ++w) {
    if ((m[w] & full[w]) != full[w]) return false;
  }
  return true;
}

void mask_or(Mask& dst, const Mask& src) {
  for (std::size_t w = 0; w < dst.size(); ++w) dst[w] |= src[w];
}

bool mask_subset(const Mask& a, const Mask& b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    if (a[w] & ~b[w]) return false;
  }
  return true;
}

}  // namespace

CandidateSet axis_candidates(const Instance& instance) {
  std::vector<Rational> xs, ys;
  for (const Point& p : instance.red) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  for (const Point& p : instance.blue) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  return {gap_midpoints(std::move(xs)), gap_midpoints(std::move(ys))};
}

BruteforceResult solve_axis_bruteforce(const Instance& instance, int k_max) {
  if (instance.red.empty() || instance.blue.empty()) return {BruteforceResult::Status::Solved, {}};
  if (instance.inseparable) return {BruteforceResult::Status::NoneWithin, {}};

  const CandidateSet cand = axis_candidates(instance);
  const std::size_t nv = cand.vertical.size();
  const std::size_t nh = cand.horizontal.size();
  if (nv + nh > 40) throw ResourceLimitError("solve_axis_bruteforce: too many candidate lines");
  if (k_max > 8) throw ResourceLimitError("solve_axis_bruteforce: k_max too large");

  const std::size_t nr = instance.red.size();
  const std::size_t nb = instance.blue.size();
  const std::size_t np = nr * nb;
  const std::size_t words = (np + 63) / 64;

  Mask full(words, 0);
  for (std::size_t p = 0; p < np; ++p) set_bit(full, p);

  // Pair-coverage mask per candidate line.
  auto coverage = [&](bool vertical, const Rational& offset) {
    Mask m(words, 0);
    for (std::size_t r = 0; r < nr; ++r) {
      const Rational& rc = vertical ? instance.red[r].x : instance.red[r].y;
      for (std::size_t b = 0; b < nb; ++b) {
        const Rational& bc = vertical ? instance.blue[b].x : instance.blue[b].y;
        if ((rc < offset && offset < bc) || (bc < offset && offset < rc)) set_bit(m, r * nb + b);
      }
    }
    return m;
  };

  std::vector<Mask> masks;
  std::vector<Line> lines;
  for (const Rational& x : cand.vertical) {
    masks.push_back(coverage(true, x));
    lines.push_back(Line::vertical(x));
  }
  for (const Rational& y : cand.horizontal) {
    masks.push_back(coverage(false, y));
    lines.push_back(Line::horizontal(y));
  }

  std::vector<int> chosen;
  long budget = 50'000'000;
  // Picks `need` more candidates from [from, limit); on need == 0 either
  // descends into the horizontal phase or tests coverage.
  auto pick = [&](auto&& self, std::size_t from, std::size_t limit, int need, int need_h,
                  Mask& acc) -> bool {
    if (--budget <= 0) throw ResourceLimitError("solve_axis_bruteforce: search budget exceeded");
    if (need == 0) {
      if (need_h >= 0) return self(self, nv, nv + nh, need_h, -1, acc);
      return covers_all(acc, full);
    }
    for (std::size_t c = from; c + need <= limit; ++c) {
      Mask saved = acc;
      mask_or(acc, masks[c]);
      chosen.push_back(static_cast<int>(c));
      if (self(self, c + 1, limit, need - 1, need_h, acc)) return true;
      chosen.pop_back();
      acc = saved;
    }
    return false;
  };

  for (int k = 0; k <= k_max; ++k) {
    for (int kv = 0; kv <= k; ++kv) {
      const int kh = k - kv;
      if (kv > static_cast<int>(nv) || kh > static_cast<int>(nh)) continue;
      Mask acc(words, 0);
      chosen.clear();
      if (pick(pick, 0, nv, kv, kh, acc)) {
        BruteforceResult res;
        res.status = BruteforceResult::Status::Solved;
        for (int c : chosen) res.lines.push_back(lines[c]);
        res.lines = dedup_lines(std::move(res.lines));
        return res;
      }
    }
  }
  return {BruteforceResult::Status::NoneWithin, {}};
}

std::vector<int> Bipartition::left_set(int n) const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    if (left_mask >> i & 1u) out.push_back(i);
  }
  return out;
}

std::vector<Bipartition> enumerate_separable_bipartitions(std::span<const Point> points) {
  const std::size_t n = points.size();
  if (n > 25) throw ResourceLimitError("enumerate_separable_bipartitions: too many points");

  const uint32_t all_mask = n >= 32 ? ~uint32_t(0) : (uint32_t(1) << n) - 1;
  std::map<uint32_t, Line> seen;
  auto consider = [&](const Rational& a, const Rational& b, const Rational& c) {
    uint32_t mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Rational v = a * points[i].x + b * points[i].y - c;
      if (v == 0) return;  // perturbation failed to clear this point
      if (v < 0) mask |= uint32_t(1) << i;
    }
    // Either side of the line may serve as the left set.
    Line line = Line::general(a, b, c);
    seen.emplace(mask, line);
    seen.emplace(all_mask & ~mask, line);
  };

  if (n == 0) return {Bipartition{0, Line::vertical(Rational(0))}};

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (points[i] == points[j]) continue;
      const Rational a = points[j].y - points[i].y;
      const Rational b = points[i].x - points[j].x;
      const Rational c = a * points[i].x + b * points[i].y;

      // Smallest nonzero functional clearance bounds the translation; the
      // rotation about the midpoint is bounded by clearance over moment.
      std::optional<Rational> min_clear;
      for (std::size_t t = 0; t < n; ++t) {
        Rational f = a * points[t].x + b * points[t].y - c;
        if (f < 0) f = -f;
        if (f != 0 && (!min_clear || f < *min_clear)) min_clear = f;
      }
      const Rational delta = min_clear ? *min_clear / 2 : Rational(1);
      consider(a, b, c + delta);
      consider(a, b, c - delta);

      const Rational mx = (points[i].x + points[j].x) / 2;
      const Rational my = (points[i].y + points[j].y) / 2;
      std::optional<Rational> min_ratio;
      for (std::size_t t = 0; t < n; ++t) {
        Rational f = a * points[t].x + b * points[t].y - c;
        if (f == 0) continue;
        Rational h = a * (points[t].y - my) - b * (points[t].x - mx);
        if (h == 0) continue;
        if (f < 0) f = -f;
        if (h < 0) h = -h;
        Rational ratio = f / h;
        if (!min_ratio || ratio < *min_ratio) min_ratio = ratio;
      }
      const Rational tau = min_ratio ? *min_ratio / 2 : Rational(1);
      for (int sign : {1, -1}) {
        const Rational ta = a - sign * tau * b;
        const Rational tb = b + sign * tau * a;
        consider(ta, tb, ta * mx + tb * my);
      }
    }
  }

  // The trivial bipartitions: a line west of every point, and east of all.
  Rational min_x = points[0].x, max_x = points[0].x;
  for (const Point& p : points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
  }
  consider(Rational(1), Rational(0), min_x - 1);
  consider(Rational(1), Rational(0), max_x + 1);

  std::vector<Bipartition> out;
  out.reserve(seen.size());
  for (auto& [mask, line] : seen) out.push_back({mask, line});
  return out;
}

BruteforceResult solve_general_bruteforce(const Instance& instance, int k_max) {
  if (instance.red.empty() || instance.blue.empty()) return {BruteforceResult::Status::Solved, {}};
  if (instance.inseparable) return {BruteforceResult::Status::NoneWithin, {}};

  const std::size_t nr = instance.red.size();
  const std::size_t nb = instance.blue.size();
  if (nr + nb > 25) throw ResourceLimitError("solve_general_bruteforce: too many points");
  if (k_max > 6) throw ResourceLimitError("solve_general_bruteforce: k_max too large");

  std::vector<Point> all(instance.red);
  all.insert(all.end(), instance.blue.begin(), instance.blue.end());
  const auto bipartitions = enumerate_separable_bipartitions(all);

  const std::size_t np = nr * nb;
  const std::size_t words = (np + 63) / 64;
  Mask full(words, 0);
  for (std::size_t p = 0; p < np; ++p) set_bit(full, p);

  std::vector<Mask> cover;
  std::vector<Line> lines;
  for (const Bipartition& bp : bipartitions) {
    Mask m(words, 0);
    bool any = false;
    for (std::size_t r = 0; r < nr; ++r) {
      const bool rl = bp.left_mask >> r & 1u;
      for (std::size_t b = 0; b < nb; ++b) {
        const bool bl = bp.left_mask >> (nr + b) & 1u;
        if (rl != bl) {
          set_bit(m, r * nb + b);
          any = true;
        }
      }
    }
    if (any) {
      cover.push_back(std::move(m));
      lines.push_back(bp.line);
    }
  }

  // Subset-dominance pruning: a candidate covering a subset of another's
  // pairs can never be needed; equal coverage keeps the first.
  std::vector<char> dead(cover.size(), 0);
  for (std::size_t i = 0; i < cover.size(); ++i) {
    if (dead[i]) continue;
    for (std::size_t j = 0; j < cover.size(); ++j) {
      if (i == j || dead[j]) continue;
      if (mask_subset(cover[i], cover[j]) && (!mask_subset(cover[j], cover[i]) || j < i)) {
        dead[i] = 1;
        break;
      }
    }
  }
  std::vector<Mask> pruned;
  std::vector<Line> pruned_lines;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    if (!dead[i]) {
      pruned.push_back(cover[i]);
      pruned_lines.push_back(lines[i]);
    }
  }

  // Per uncovered pair, the candidates covering it.
  std::vector<std::vector<int>> covering(np);
  for (std::size_t c = 0; c < pruned.size(); ++c) {
    for (std::size_t p = 0; p < np; ++p) {
      if (pruned[c][p / 64] >> (p % 64) & 1u) covering[p].push_back(static_cast<int>(c));
    }
  }

  long budget = 50'000'000;
  std::vector<int> chosen;
  auto search = [&](auto&& self, int depth, Mask& acc) -> bool {
    if (--budget <= 0) throw ResourceLimitError("solve_general_bruteforce: search budget exceeded");
    std::size_t first = np;
    for (std::size_t p = 0; p < np; ++p) {
      if (!(acc[p / 64] >> (p % 64) & 1u)) {
        first = p;
        break;
      }
    }
    if (first == np) return true;
    if (depth == 0) return false;
    for (int c : covering[first]) {
      Mask saved = acc;
      mask_or(acc, pruned[c]);
      chosen.push_back(c);
      if (self(self, depth - 1, acc)) return true;
      chosen.pop_back();
      acc = saved;
    }
    return false;
  };

  for (int k = 0; k <= k_max; ++k) {
    Mask acc(words, 0);
    chosen.clear();
    if (search(search, k, acc)) {
      BruteforceResult res;
      res.status = BruteforceResult::Status::Solved;
      for (int c : chosen) res.lines.push_back(pruned_lines[c]);
      res.lines = dedup_lines(std::move(res.lines));
      FeasibilityReport rep = is_feasible(instance, res.lines);
      if (!rep.feasible) throw std::logic_error("solve_general_bruteforce: cover failed the checker");
      return res;
    }
  }
  return {BruteforceResult::Status::NoneWithin, {}};
}

bool separable_with_one_line(const Instance& instance) {
  return hulls_strictly_disjoint(instance.red, instance.blue);
}

}  // namespace rbsep
