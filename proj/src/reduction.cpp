#include "rbsep/reduction.hpp"

#include "rbsep/rng.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>

namespace rbsep {

namespace {

bool is_permutation_1based(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  for (int v : perm) {
    if (v < 1 || v > static_cast<int>(perm.size()) || seen[v - 1]) return false;
    seen[v - 1] = 1;
  }
  return true;
}

}  // namespace

void S2THSInstance::validate() const {
  if (k < 1 || t < 1) throw std::invalid_argument("S2THS: k and t must be positive");
  if (static_cast<int>(sigma.size()) != k || !is_permutation_1based(sigma))
    throw std::invalid_argument("S2THS: sigma must be a permutation of [k]");
  if (static_cast<int>(sigma_j.size()) != k)
    throw std::invalid_argument("S2THS: need one sigma_j per class");
  for (const auto& sj : sigma_j) {
    if (static_cast<int>(sj.size()) != t || !is_permutation_1based(sj))
      throw std::invalid_argument("S2THS: sigma_j must be a permutation of [t]");
  }
  auto check_intervals = [&](const std::vector<std::pair<int, int>>& iv, const char* track) {
    for (auto [s, s2] : iv) {
      if (s < 1 || s2 > kt() || s > s2)
        throw std::invalid_argument(std::string("S2THS: bad interval on track ") + track);
    }
  };
  check_intervals(intervals_a, "A");
  check_intervals(intervals_b, "B");
}

int S2THSInstance::column_of_class(int j) const {
  for (int c = 1; c <= k; ++c) {
    if (sigma[c - 1] == j) return c;
  }
  throw std::logic_error("column_of_class: sigma is not a permutation");
}

int S2THSInstance::pos_b(int j, int i) const {
  const int c = column_of_class(j);
  const std::vector<int>& sj = sigma_j[j - 1];
  for (int r = 1; r <= t; ++r) {
    if (sj[r - 1] == i) return (c - 1) * t + r;
  }
  throw std::logic_error("pos_b: sigma_j is not a permutation");
}

std::vector<std::pair<int, int>> S2THSInstance::intervals_a_with_classes() const {
  std::vector<std::pair<int, int>> all = intervals_a;
  for (int j = 1; j <= k; ++j) all.emplace_back((j - 1) * t + 1, j * t);
  return all;
}

bool S2THSInstance::hits(const std::vector<int>& witness) const {
  if (static_cast<int>(witness.size()) != k) return false;
  for (int u : witness) {
    if (u < 1 || u > t) return false;
  }
  for (auto [s, s2] : intervals_a) {
    bool hit = false;
    for (int j = 1; j <= k && !hit; ++j) {
      const int pos = pos_a(j, witness[j - 1]);
      hit = s <= pos && pos <= s2;
    }
    if (!hit) return false;
  }
  for (auto [s, s2] : intervals_b) {
    bool hit = false;
    for (int j = 1; j <= k && !hit; ++j) {
      const int pos = pos_b(j, witness[j - 1]);
      hit = s <= pos && pos <= s2;
    }
    if (!hit) return false;
  }
  return true;
}

std::optional<std::vector<int>> solve_s2ths_bruteforce(const S2THSInstance& inst) {
  inst.validate();
  double total = 1;
  for (int j = 0; j < inst.k; ++j) {
    total *= inst.t;
    if (total > 2e6) throw ResourceLimitError("solve_s2ths_bruteforce: t^k too large");
  }
  std::vector<int> u(inst.k, 1);
  while (true) {
    if (inst.hits(u)) return u;
    int j = inst.k - 1;
    while (j >= 0 && u[j] == inst.t) {
      u[j] = 1;
      --j;
    }
    if (j < 0) return std::nullopt;
    ++u[j];
  }
}

S2THSInstance plant_s2ths(int k, int t, int num_a, int num_b, uint64_t seed,
                          std::vector<int>* witness_out) {
  Rng rng(seed);
  S2THSInstance inst;
  inst.k = k;
  inst.t = t;
  inst.sigma.resize(k);
  for (int i = 0; i < k; ++i) inst.sigma[i] = i + 1;
  rng.shuffle(inst.sigma);
  inst.sigma_j.assign(k, {});
  for (int j = 0; j < k; ++j) {
    inst.sigma_j[j].resize(t);
    for (int i = 0; i < t; ++i) inst.sigma_j[j][i] = i + 1;
    rng.shuffle(inst.sigma_j[j]);
  }
  std::vector<int> witness(k);
  for (int j = 0; j < k; ++j) witness[j] = static_cast<int>(rng.range(1, t));

  auto plant_interval = [&](int pos) {
    int lo = static_cast<int>(rng.range(1, pos));
    int hi = static_cast<int>(rng.range(pos, k * t));
    return std::make_pair(lo, hi);
  };
  for (int n = 0; n < num_a; ++n) {
    int j = static_cast<int>(rng.range(1, k));
    inst.intervals_a.push_back(plant_interval(inst.pos_a(j, witness[j - 1])));
  }
  for (int n = 0; n < num_b; ++n) {
    int j = static_cast<int>(rng.range(1, k));
    inst.intervals_b.push_back(plant_interval(inst.pos_b(j, witness[j - 1])));
  }
  inst.validate();
  if (witness_out) *witness_out = witness;
  return inst;
}

GadgetPoints long_alley(const Point& origin, bool horizontal, long length, const Rational& width,
                        bool red_low) {
  if (length < 1) throw std::invalid_argument("long_alley: length must be positive");
  GadgetPoints g;
  g.tag = GadgetTag::Alley;
  std::vector<Point>& low = red_low ? g.red : g.blue;
  std::vector<Point>& high = red_low ? g.blue : g.red;
  for (long i = 0; i < length; ++i) {
    if (horizontal) {
      low.push_back({origin.x + i, origin.y});
      high.push_back({origin.x + i, origin.y + width});
    } else {
      low.push_back({origin.x, origin.y + i});
      high.push_back({origin.x + width, origin.y + i});
    }
  }
  return g;
}

std::pair<Point, Point> interval_gadget_points(int s, int s_prime, const Rational& x0,
                                               const Rational& y0) {
  if (s > s_prime) throw std::invalid_argument("interval_gadget_points: s > s'");
  Point a{x0 + 4 * s - 7, y0 + 4 * s_prime - 5};
  Point b{x0 + 4 * s_prime - 5, y0 + 4 * s - 7};
  return {a, b};
}

std::vector<Point> diagonal_points(int count, const Rational& x0, const Rational& y0, bool rising) {
  std::vector<Point> pts;
  for (int m = 0; m < count; ++m) {
    pts.push_back({x0 + 4 * m, rising ? Rational(y0 + 4 * m) : Rational(y0 - 4 * m)});
  }
  return pts;
}

namespace {

// Track B's frame: rotation by an exact rational angle of ~5 degrees,
// clockwise, so the top-left corner ends up right of the bottom-left one.
struct BFrame {
  Rational c, s, ox, oy;

  Point to_world(const Rational& xi, const Rational& eta) const {
    return {ox + c * xi + s * eta, oy - s * xi + c * eta};
  }
};

struct Box {
  Rational x0, y0, x1, y1;
};

class Builder {
 public:
  explicit Builder(const S2THSInstance& in) : inst(in) {}

  BuiltReduction run();

 private:
  const S2THSInstance& inst;
  LayoutMetadata m;
  BFrame bf;

  std::vector<Point> world_red, world_blue;
  Rational delta_b;
  long ell_b = 0;
  BigInt eta_bn, eta_bs, xi_bw, xi_be;
  Rational core_minx, core_maxx, core_miny, core_maxy;  // world box of B's core area
  std::map<std::string, Box> world_boxes;  // per gadget unit, world frame
  std::map<std::string, bool> ring_red_low;

  int kt() const { return inst.kt(); }

  void add_group(const GadgetPoints& g, LayoutFrame frame, const std::string& name) {
    Box local{};
    Box world{};
    bool first = true;
    auto feed = [&](const Point& lp, const Point& wp) {
      if (first) {
        local = {lp.x, lp.y, lp.x, lp.y};
        world = {wp.x, wp.y, wp.x, wp.y};
        first = false;
      } else {
        local.x0 = std::min(local.x0, lp.x);
        local.y0 = std::min(local.y0, lp.y);
        local.x1 = std::max(local.x1, lp.x);
        local.y1 = std::max(local.y1, lp.y);
        world.x0 = std::min(world.x0, wp.x);
        world.y0 = std::min(world.y0, wp.y);
        world.x1 = std::max(world.x1, wp.x);
        world.y1 = std::max(world.y1, wp.y);
      }
    };
    auto place = [&](const std::vector<Point>& pts, std::vector<Point>& out) {
      for (const Point& p : pts) {
        Point wp = frame == LayoutFrame::TrackB ? bf.to_world(p.x, p.y) : p;
        feed(p, wp);
        out.push_back(wp);
      }
    };
    place(g.red, world_red);
    place(g.blue, world_blue);
    if (first) throw std::logic_error("add_group: empty gadget");
    m.gadgets.push_back({g.tag, frame, name, local.x0, local.y0, local.x1, local.y1});
    world_boxes[name] = world;
  }

  Box box_union(const std::string& prefix) const {
    Box b{};
    bool first = true;
    for (const auto& [name, box] : world_boxes) {
      if (name.rfind(prefix, 0) != 0) continue;
      if (first) {
        b = box;
        first = false;
      } else {
        b.x0 = std::min(b.x0, box.x0);
        b.y0 = std::min(b.y0, box.y0);
        b.x1 = std::max(b.x1, box.x1);
        b.y1 = std::max(b.y1, box.y1);
      }
    }
    if (first) throw std::logic_error("box_union: no gadgets match " + prefix);
    return b;
  }

  // Deterministic placement of an axis-parallel line offset avoiding every
  // point placed so far.
  Rational avoid(Rational offset, bool vertical) const {
    static const int num[] = {0, 1, -1, 1, -1, 1, -1, 1, -1};
    static const int den[] = {1, 3, 3, 9, 9, 27, 27, 81, 81};
    for (std::size_t i = 0; i < std::size(num); ++i) {
      Rational cand = offset + Rational(num[i], den[i]);
      bool hit = false;
      for (const Point& p : world_red) {
        if ((vertical ? p.x : p.y) == cand) {
          hit = true;
          break;
        }
      }
      if (!hit) {
        for (const Point& p : world_blue) {
          if ((vertical ? p.x : p.y) == cand) {
            hit = true;
            break;
          }
        }
      }
      if (!hit) return cand;
    }
    throw std::logic_error("avoid: no clean offset found");
  }

  Rational mid(const Rational& lo, const Rational& hi) const {
    if (!(hi - lo >= 1)) throw std::logic_error("mid: band gap too small");
    return (lo + hi) / 2;
  }

  void compute_parameters();
  void build_catalogs();
  void build_cores_and_gadgets();
  void compute_b_alley_extents();
  void build_in_grid_alleys();
  void build_b_alleys();
  void place_forced_and_outer();
  void compute_ring_colors();
  void assert_corridors() const;
  void assert_lines_clean() const;
};

void Builder::compute_parameters() {
  const int k = inst.k, t = inst.t;
  if (t < 2) throw std::invalid_argument("build_rbs_instance: t must be at least 2");

  m.k = k;
  m.t = t;
  m.ell = BigInt(100) * (BigInt(k) * k + 1);
  m.v_hat = BigInt(100) * (BigInt(kt()) * kt() + 1);

  // Exact unit rational rotation from the half-angle tangent u ~ tan(2.5 deg),
  // so cos^2 + sin^2 = 1 holds exactly and the angle is within 1e-4 degrees.
  const Rational u(436609, 10000000);
  m.cos5 = (1 - u * u) / (1 + u * u);
  m.sin5 = 2 * u / (1 + u * u);
  m.h_hat = ceil_to_int(Rational(m.v_hat) / (m.cos5 * m.sin5));
  m.z = BigInt(100) * (m.h_hat * m.h_hat * m.h_hat * m.h_hat * m.h_hat + 1);
  m.eps = pow_rational(Rational(m.z), -10);
  m.eps_f = pow_rational(Rational(kt()), -10);

  const BigInt predicted = BigInt(24) * k * m.ell + BigInt(56) * m.ell + BigInt(20) * kt();
  if (predicted > 2'000'000)
    throw ResourceLimitError("build_rbs_instance: parameter overflow guard (too many points)");

  m.x0A = Rational(m.ell) + 40;
  m.y0A = Rational(m.z) - Rational(m.ell) - 10 * Rational(m.v_hat);
  m.x0Sigma = m.x0A + 4 * kt() + 40;
  m.y1 = m.y0A - 2 * Rational(m.v_hat);
  m.y2 = m.y1 - Rational(m.v_hat) - 200 * t;

  delta_b = k == 1 ? Rational(4) : Rational(19, 10);

  // Track B: the origin is tuned so that the central q -> p direction is the
  // frame's exact vertical; per-element deviations stay tiny relative to the
  // corridor widths (asserted below).
  const Rational eta_p = -(4 * kt() - 2);
  const Rational xibar = 2 * kt() - 4;
  const Rational qbar = m.x0Sigma + 2 * kt() - 4;
  m.yB0 = m.y0A - Rational(m.v_hat);
  m.xB0 = qbar + (m.sin5 / m.cos5) * (Rational(m.v_hat) - m.sin5 * xibar + m.cos5 * eta_p) -
          m.cos5 * xibar - m.sin5 * eta_p;
  bf = BFrame{m.cos5, m.sin5, m.xB0, m.yB0};

  // World box of track B's potential core extent (xi in [-3, 4kt-5],
  // eta in [-(4kt-5), 3]); the four forced lines around B use it.
  const Rational lo = -3, hi = 4 * kt() - 5;
  core_minx = m.xB0 + m.cos5 * lo + m.sin5 * (-hi);
  core_maxx = m.xB0 + m.cos5 * hi + m.sin5 * 3;
  core_maxy = m.yB0 + m.sin5 * 3 + m.cos5 * 3;
  core_miny = m.yB0 - m.sin5 * hi - m.cos5 * hi;
}

void Builder::build_catalogs() {
  const int k = inst.k, t = inst.t;
  const Rational eta_p = -(4 * kt() - 2);
  const Rational xi_r = 4 * kt() - 2;

  // x1col is tuned like xB0, but for the frame's horizontal direction.
  const Rational etabar = -(2 * kt() - 4);
  const Point pbar = bf.to_world(xi_r, etabar);
  const Rational ybarq = m.y2 + 2 * kt() - 4;
  m.x1col = pbar.x + (m.cos5 / m.sin5) * (pbar.y - ybarq);

  for (int j = 1; j <= k; ++j) {
    const int c = inst.column_of_class(j);
    for (int i = 1; i <= t; ++i) {
      const int s = (j - 1) * t + i;
      const int beta = inst.pos_b(j, i);
      m.hl.push_back(Line::horizontal(m.y0A + 4 * s - 6));
      m.vl.push_back(Line::vertical(m.x0A + 4 * s - 6));
      m.vlp.push_back(Line::vertical(m.x0Sigma + 4 * (c - 1) * t + 4 * i - 6));
      m.hlp.push_back(Line::horizontal(m.y2 + 4 * (c - 1) * t + 4 * i - 6));

      const Point q{m.vlp.back().offset(), m.y1};
      const Point p = bf.to_world(Rational(4 * beta - 6), eta_p);
      m.q_v.push_back(q);
      m.p_v.push_back(p);
      m.sl.push_back(Line::through(q, p));

      const Point qh{m.x1col, m.hlp.back().offset()};
      const Point ph = bf.to_world(xi_r, Rational(-(4 * beta - 6)));
      m.q_h.push_back(qh);
      m.p_h.push_back(ph);
      m.slp.push_back(Line::through(qh, ph));
    }
  }
}

void Builder::build_cores_and_gadgets() {
  const int t = inst.t;

  // Track A.
  {
    GadgetPoints core;
    core.tag = GadgetTag::Track;
    core.blue = diagonal_points(kt() - 1, m.x0A, m.y0A, true);
    for (auto [s, s2] : inst.intervals_a_with_classes()) {
      auto [a, b] = interval_gadget_points(s, s2, m.x0A, m.y0A);
      core.red.push_back(a);
      core.red.push_back(b);
    }
    add_group(core, LayoutFrame::World, "A-core");
  }

  // Permutation crossing and its identity mirror: one simple interval gadget
  // per class, at (row j, column sigma^-1(j)) resp. (row c, column c).
  for (int j = 1; j <= inst.k; ++j) {
    const int c = inst.column_of_class(j);
    const Rational xc = m.x0Sigma + 4 * (c - 1) * t;
    const Rational yj = m.y0A + 4 * (j - 1) * t;
    GadgetPoints cell;
    cell.tag = GadgetTag::Sigma;
    cell.blue = diagonal_points(t - 1, xc, yj, true);
    auto [a, b] = interval_gadget_points(1, t, xc, yj);
    cell.red.push_back(a);
    cell.red.push_back(b);
    add_group(cell, LayoutFrame::World, "sigma-cell-" + std::to_string(j));
  }
  for (int c = 1; c <= inst.k; ++c) {
    const Rational xc = m.x0Sigma + 4 * (c - 1) * t;
    const Rational yc = m.y2 + 4 * (c - 1) * t;
    GadgetPoints cell;
    cell.tag = GadgetTag::Sigma;
    cell.blue = diagonal_points(t - 1, xc, yc, true);
    auto [a, b] = interval_gadget_points(1, t, xc, yc);
    cell.red.push_back(a);
    cell.red.push_back(b);
    add_group(cell, LayoutFrame::World, "id-cell-" + std::to_string(c));
  }

  // Half-permutation gadgets: per q, two guards at +-eps beside the
  // axis-parallel line and two guards flanking the slanted line, plus two red
  // corner points far enough out to clear every slanted candidate.
  const Rational nu(1, 1024);
  for (int j = 1; j <= inst.k; ++j) {
    const int c = inst.column_of_class(j);
    const Rational xc = m.x0Sigma + 4 * (c - 1) * t;

    GadgetPoints gv;
    gv.tag = GadgetTag::HalfPerm;
    for (int i = 1; i <= t; ++i) {
      const int s = (j - 1) * t + i;
      const Rational& xq = m.vlp[s - 1].offset();
      const Point& p = m.p_v[s - 1];
      const Rational slope = (p.y - m.y1) / (p.x - xq);  // steep positive
      if (!(slope > 0)) throw std::logic_error("build: SL slope not positive");
      gv.blue.push_back({xq - m.eps, m.y1});
      gv.blue.push_back({xq + m.eps, m.y1});
      gv.blue.push_back({xq - 1 - nu, m.y1 - slope});
      gv.blue.push_back({xq + 1 + nu, m.y1 + slope});
    }
    gv.red.push_back({xc - 3, m.y1 - 50 * t});
    gv.red.push_back({xc + 4 * t - 5, m.y1 + 50 * t});
    add_group(gv, LayoutFrame::World, "halfperm-v-" + std::to_string(j));

    GadgetPoints gh;
    gh.tag = GadgetTag::HalfPerm;
    for (int i = 1; i <= t; ++i) {
      const int s = (j - 1) * t + i;
      const Rational& yq = m.hlp[s - 1].offset();
      const Point& p = m.p_h[s - 1];
      const Rational slope = (p.y - yq) / (p.x - m.x1col);  // shallow negative
      if (!(slope < 0)) throw std::logic_error("build: SL' slope not negative");
      const Rational w = -1 / slope;
      gh.blue.push_back({m.x1col, yq - m.eps});
      gh.blue.push_back({m.x1col, yq + m.eps});
      gh.blue.push_back({m.x1col - w, yq + 1 + nu});
      gh.blue.push_back({m.x1col + w, yq - 1 - nu});
    }
    const Rational yc = m.y2 + 4 * (c - 1) * t;
    gh.red.push_back({m.x1col - 600 * t, yc + 4 * t - 5});
    gh.red.push_back({m.x1col + 600 * t, yc - 3});
    add_group(gh, LayoutFrame::World, "halfperm-h-" + std::to_string(j));
  }

  // Track B (local frame, the falling diagonal).
  {
    GadgetPoints core;
    core.tag = GadgetTag::Track;
    core.blue = diagonal_points(kt() - 1, Rational(0), Rational(0), false);
    for (auto [s, s2] : inst.intervals_b) {
      core.red.push_back({Rational(4 * s - 7), Rational(-(4 * s2 - 5))});
      core.red.push_back({Rational(4 * s2 - 5), Rational(-(4 * s - 7))});
    }
    add_group(core, LayoutFrame::TrackB, "B-core");
  }
}

void Builder::compute_b_alley_extents() {
  const int t = inst.t;
  const Rational c = m.cos5, s = m.sin5;
  const Rational hi = 4 * kt() - 5;        // core xi/|eta| extent
  const Rational col_hi = 4 * kt() - 6 + delta_b;
  const Rational row_hi = 2 + delta_b;
  const Rational ten_t = 10 * t;

  eta_bn = ceil_to_int((3 * s + 3 * c + ten_t + 1 + s * col_hi) / c) + 1;
  eta_bs = floor_to_int(-(s * row_hi + (s + c) * hi + ten_t + 1) / c) - 1;
  xi_bw = floor_to_int((-3 * c - hi * s - ten_t - 1 - s * row_hi) / c) - 1;
  xi_be = ceil_to_int((hi * c + 3 * s + ten_t + 1 + s * col_hi) / c) + 1;

  // Preliminary forced-line positions the truncation bounds refer to.
  const Rational fxv1 = (Rational(m.ell) + m.x0A - 3) / 2;
  const Rational fxw = core_minx - ten_t;
  const Rational fxv3 = (m.x0Sigma + 4 * kt() - 5 + fxw) / 2;

  auto fits = [](const Rational& r) { return floor_to_int(r); };
  std::vector<BigInt> bounds;
  bounds.push_back(m.ell);
  bounds.push_back(fits(1 + Rational(xi_bw) + (m.xB0 - fxv1 - 1 - s * col_hi) / c));       // west reach
  bounds.push_back(fits(1 + Rational(xi_bw) + (3 * s + c * (1 - delta_b) + ten_t - 1) / s));  // north poke
  bounds.push_back(fits(1 - Rational(xi_be) + hi + (c * (1 - delta_b) + ten_t - 1) / s));  // south dip
  bounds.push_back(fits(1 + Rational(eta_bs) + (m.xB0 - c * row_hi - fxv3 - 1) / s));      // SW drift
  bounds.push_back(fits(1 + Rational(eta_bs) + (Rational(m.v_hat) - 50 * t - 2 - s * col_hi) / c));
  bounds.push_back(fits(1 - Rational(eta_bn) + (Rational(m.v_hat) - 5 - s * row_hi) / c));
  BigInt best = bounds[0];
  for (const BigInt& b : bounds) best = std::min(best, b);
  if (best < 8) throw std::logic_error("build: track-B alleys do not fit their super-cells");
  ell_b = static_cast<long>(best);
  m.ell_b = best;
}

void Builder::compute_ring_colors() {
  // All boundary-band alleys sit on one cycle of facing-side constraints
  // (the outer ring plus the A/sigma/id groups reaching the grid edges).
  // Sides alternate along the cycle; the anchor makes the first left
  // horizontal alley red-blue (red above blue). Keys map to red_low.
  struct Carrier {
    std::string key;
    bool side1_is_low;  // whether the side met first along the cycle is the low row/column
  };
  const int k = inst.k;
  std::vector<Carrier> cycle;
  auto add = [&](std::string key, bool side1_low) { cycle.push_back({std::move(key), side1_low}); };

  add("wH7", true);
  for (int cshift = 1; cshift <= k; ++cshift) add("idW" + std::to_string(cshift), true);
  for (int i = 6; i >= 2; --i) add("wH" + std::to_string(i), true);
  for (int j = 1; j <= k; ++j) add("AW" + std::to_string(j), true);
  add("wH1", true);
  add("nV1", true);
  for (int j = 1; j <= k; ++j) add("AN" + std::to_string(j), true);
  add("nV2", true);
  for (int cshift = 1; cshift <= k; ++cshift) add("sigN" + std::to_string(cshift), true);
  for (int i = 3; i <= 7; ++i) add("nV" + std::to_string(i), true);
  add("eH1", false);
  for (int j = k; j >= 1; --j) add("AE" + std::to_string(j), false);
  for (int i = 2; i <= 6; ++i) add("eH" + std::to_string(i), false);
  for (int cshift = k; cshift >= 1; --cshift) add("idE" + std::to_string(cshift), false);
  add("eH7", false);
  for (int i = 7; i >= 3; --i) add("sV" + std::to_string(i), false);
  for (int cshift = k; cshift >= 1; --cshift) add("sigS" + std::to_string(cshift), false);
  add("sV2", false);
  for (int j = k; j >= 1; --j) add("AS" + std::to_string(j), false);
  add("sV1", false);

  // Anchor: AW1 bottom row blue, i.e. side1 not red. AW1 sits at position
  // k+6, and side colors alternate along the cycle.
  const bool base_red = (k & 1) != 0;  // side1 color of position 0
  for (std::size_t pos = 0; pos < cycle.size(); ++pos) {
    const bool side1_red = base_red ^ static_cast<bool>(pos & 1);
    // red_low: is the low row/column red?
    ring_red_low[cycle[pos].key] = cycle[pos].side1_is_low ? side1_red : !side1_red;
  }
}

void Builder::build_in_grid_alleys() {
  const int t = inst.t;
  const long ell = static_cast<long>(m.ell);
  const Rational z(m.z);
  const Rational width_track = 4 * t - 2;
  const long far_lo = 1;
  const Rational far_hi = z - ell + 1;

  for (int j = 1; j <= inst.k; ++j) {
    const Rational ylow = m.y0A + 4 * (j - 1) * t - 3;
    const Rational xlow = m.x0A + 4 * (j - 1) * t - 3;
    add_group(long_alley({Rational(far_lo), ylow}, true, ell, width_track,
                         ring_red_low.at("AW" + std::to_string(j))),
              LayoutFrame::World, "alley-A-W-" + std::to_string(j));
    add_group(long_alley({far_hi, ylow}, true, ell, width_track,
                         ring_red_low.at("AE" + std::to_string(j))),
              LayoutFrame::World, "alley-A-E-" + std::to_string(j));
    add_group(long_alley({xlow, far_hi}, false, ell, width_track,
                         ring_red_low.at("AN" + std::to_string(j))),
              LayoutFrame::World, "alley-A-N-" + std::to_string(j));
    add_group(long_alley({xlow, Rational(far_lo)}, false, ell, width_track,
                         ring_red_low.at("AS" + std::to_string(j))),
              LayoutFrame::World, "alley-A-S-" + std::to_string(j));
  }
  for (int c = 1; c <= inst.k; ++c) {
    const Rational xlow = m.x0Sigma + 4 * (c - 1) * t - 3;
    const Rational ylow = m.y2 + 4 * (c - 1) * t - 3;
    add_group(long_alley({xlow, far_hi}, false, ell, width_track,
                         ring_red_low.at("sigN" + std::to_string(c))),
              LayoutFrame::World, "alley-sigma-N-" + std::to_string(c));
    add_group(long_alley({xlow, Rational(far_lo)}, false, ell, width_track,
                         ring_red_low.at("sigS" + std::to_string(c))),
              LayoutFrame::World, "alley-sigma-S-" + std::to_string(c));
    add_group(long_alley({Rational(far_lo), ylow}, true, ell, width_track,
                         ring_red_low.at("idW" + std::to_string(c))),
              LayoutFrame::World, "alley-id-W-" + std::to_string(c));
    add_group(long_alley({far_hi, ylow}, true, ell, width_track,
                         ring_red_low.at("idE" + std::to_string(c))),
              LayoutFrame::World, "alley-id-E-" + std::to_string(c));
  }
}

void Builder::build_b_alleys() {
  const int t = inst.t;
  for (int c = 1; c <= inst.k; ++c) {
    const Rational xi_lo = 4 * (c - 1) * t - 2 - delta_b;
    const Rational xi_hi = 4 * c * t - 6 + delta_b;
    const Rational eta_hi = -(4 * (c - 1) * t) + 2 + delta_b;
    const Rational eta_lo = -(4 * c * t) + 6 - delta_b;
    const Rational col_width = xi_hi - xi_lo;
    const Rational row_width = eta_hi - eta_lo;

    add_group(long_alley({xi_lo, Rational(eta_bn)}, false, ell_b, col_width, c % 2 == 1),
              LayoutFrame::TrackB, "alley-B-N-" + std::to_string(c));
    add_group(long_alley({xi_lo, Rational(eta_bs) - (ell_b - 1)}, false, ell_b, col_width, c % 2 == 0),
              LayoutFrame::TrackB, "alley-B-S-" + std::to_string(c));
    add_group(long_alley({Rational(xi_bw) - (ell_b - 1), eta_lo}, true, ell_b, row_width, c % 2 == 0),
              LayoutFrame::TrackB, "alley-B-W-" + std::to_string(c));
    add_group(long_alley({Rational(xi_be), eta_lo}, true, ell_b, row_width, c % 2 == 1),
              LayoutFrame::TrackB, "alley-B-E-" + std::to_string(c));
  }
}

void Builder::place_forced_and_outer() {
  const int t = inst.t;
  const Rational z(m.z);
  const Rational ell(m.ell);
  const Rational ten_t = 10 * t;

  const Box bn = box_union("alley-B-N-");
  const Box bs = box_union("alley-B-S-");
  const Box be = box_union("alley-B-E-");

  // Verticals west to east, then horizontals north to south.
  std::vector<Rational> fx(7), fy(7);
  fx[3] = avoid(core_minx - ten_t, true);
  fx[4] = avoid(core_maxx + ten_t, true);
  fx[0] = avoid(mid(ell, m.x0A - 3), true);
  fx[1] = avoid(mid(m.x0A + 4 * kt() - 5, m.x0Sigma - 3), true);
  fx[2] = avoid(mid(m.x0Sigma + 4 * kt() - 5, fx[3]), true);
  fx[5] = avoid(mid(std::max(be.x1, fx[4]), m.x1col - 600 * t - 1), true);
  fx[6] = avoid(mid(m.x1col + 600 * t + 1, z - ell + 1), true);

  fy[2] = avoid(core_maxy + ten_t, false);
  fy[3] = avoid(core_miny - ten_t, false);
  fy[0] = avoid(mid(m.y0A + 4 * kt() - 5, z - ell + 1), false);
  fy[1] = avoid(mid(std::max(bn.y1, fy[2]), m.y0A - 3), false);
  fy[4] = avoid(mid(m.y1 + 50 * t, std::min(bs.y0, fy[3])), false);
  fy[5] = avoid(mid(m.y2 + 4 * kt() - 5, m.y1 - 50 * t), false);
  fy[6] = avoid(mid(ell, m.y2 - 4), false);

  for (const Rational& x : fx) m.forced.push_back(Line::vertical(x));
  for (const Rational& y : fy) m.forced.push_back(Line::horizontal(y));

  // Outer alley pairs, just outside the grid, of width (kt)^-10.
  const long ell_l = static_cast<long>(m.ell);
  const Rational north_y = z + 10;
  const Rational south_y = Rational(-9) - ell_l;
  const Rational west_x = Rational(-9) - ell_l;
  const Rational east_x = z + 10;
  for (int i = 0; i < 7; ++i) {
    const Rational lo_col = fx[i] - m.eps_f / 2;
    add_group(long_alley({lo_col, north_y}, false, ell_l, m.eps_f,
                         ring_red_low.at("nV" + std::to_string(i + 1))),
              LayoutFrame::World, "outer-N-" + std::to_string(i + 1));
    add_group(long_alley({lo_col, south_y}, false, ell_l, m.eps_f,
                         ring_red_low.at("sV" + std::to_string(i + 1))),
              LayoutFrame::World, "outer-S-" + std::to_string(i + 1));
    const Rational lo_row = fy[i] - m.eps_f / 2;
    add_group(long_alley({west_x, lo_row}, true, ell_l, m.eps_f,
                         ring_red_low.at("wH" + std::to_string(i + 1))),
              LayoutFrame::World, "outer-W-" + std::to_string(i + 1));
    add_group(long_alley({east_x, lo_row}, true, ell_l, m.eps_f,
                         ring_red_low.at("eH" + std::to_string(i + 1))),
              LayoutFrame::World, "outer-E-" + std::to_string(i + 1));
  }
}

void Builder::assert_corridors() const {
  // Every slanted candidate must thread its alley corridor end to end and
  // stay inside its diagonal gap across the whole of track B.
  const Rational c = m.cos5, s = m.sin5;
  const int t = inst.t;
  for (int s_idx = 1; s_idx <= kt(); ++s_idx) {
    const int j = (s_idx - 1) / t + 1;
    const int col = inst.column_of_class(j);
    const int beta = inst.pos_b(j, (s_idx - 1) % t + 1);

    auto local_xi_at_eta = [&](const Line& line, const Rational& eta) -> Rational {
      // a (xB0 + c xi + s eta) + b (yB0 - s xi + c eta) = cc
      const Rational k2 = line.a() * c - line.b() * s;
      const Rational c0 = line.c() - line.a() * m.xB0 - line.b() * m.yB0;
      return (c0 - eta * (line.a() * s + line.b() * c)) / k2;
    };
    auto local_eta_at_xi = [&](const Line& line, const Rational& xi) -> Rational {
      const Rational k2 = line.a() * s + line.b() * c;
      const Rational c0 = line.c() - line.a() * m.xB0 - line.b() * m.yB0;
      return (c0 - xi * (line.a() * c - line.b() * s)) / k2;
    };

    const Line& sl = m.sl[s_idx - 1];
    const Rational xi_lo = 4 * (col - 1) * t - 2 - delta_b;
    const Rational xi_hi = 4 * col * t - 6 + delta_b;
    for (const Rational& eta :
         {Rational(eta_bn), Rational(eta_bn) + (ell_b - 1), Rational(eta_bs),
          Rational(eta_bs) - (ell_b - 1), Rational(0), Rational(-(4 * kt() - 8))}) {
      const Rational xi = local_xi_at_eta(sl, eta);
      if (!(xi_lo < xi && xi < xi_hi))
        throw std::logic_error("build: SL leaves its corridor");
    }
    for (const Rational& eta : {Rational(0), Rational(-(4 * kt() - 8))}) {
      const Rational xi = local_xi_at_eta(sl, eta);
      if (!(4 * beta - 8 < xi && xi < 4 * beta - 4))
        throw std::logic_error("build: SL leaves its diagonal gap");
    }

    const Line& slp = m.slp[s_idx - 1];
    const Rational eta_hi = -(4 * (col - 1) * t) + 2 + delta_b;
    const Rational eta_lo = -(4 * col * t) + 6 - delta_b;
    for (const Rational& xi :
         {Rational(xi_bw), Rational(xi_bw) - (ell_b - 1), Rational(xi_be),
          Rational(xi_be) + (ell_b - 1), Rational(0), Rational(4 * kt() - 8)}) {
      const Rational eta = local_eta_at_xi(slp, xi);
      if (!(eta_lo < eta && eta < eta_hi))
        throw std::logic_error("build: SL' leaves its corridor");
    }
    for (const Rational& xi : {Rational(0), Rational(4 * kt() - 8)}) {
      const Rational eta = local_eta_at_xi(slp, xi);
      if (!(4 * beta - 8 < -eta && -eta < 4 * beta - 4))
        throw std::logic_error("build: SL' leaves its diagonal gap");
    }
  }
}

void Builder::assert_lines_clean() const {
  std::vector<const std::vector<Line>*> families = {&m.hl, &m.vl, &m.vlp, &m.hlp,
                                                    &m.sl, &m.slp, &m.forced};
  for (const auto* fam : families) {
    for (const Line& line : *fam) {
      for (const Point& p : world_red) {
        if (side_of(line, p) == 0) throw std::logic_error("build: catalog line hits a red point");
      }
      for (const Point& p : world_blue) {
        if (side_of(line, p) == 0) throw std::logic_error("build: catalog line hits a blue point");
      }
    }
  }
}

BuiltReduction Builder::run() {
  compute_parameters();
  build_catalogs();
  build_cores_and_gadgets();
  compute_b_alley_extents();
  compute_ring_colors();
  build_in_grid_alleys();
  build_b_alleys();
  place_forced_and_outer();
  assert_corridors();
  assert_lines_clean();

  BuiltReduction out;
  out.instance = Instance::make(std::move(world_red), std::move(world_blue));
  if (out.instance.inseparable)
    throw std::logic_error("build: coincident red/blue point in the construction");
  out.layout = std::move(m);
  return out;
}

}  // namespace

BuiltReduction build_rbs_instance(const S2THSInstance& inst) {
  inst.validate();
  Builder builder(inst);
  return builder.run();
}

std::vector<Line> witness_lines(const S2THSInstance& inst, const LayoutMetadata& layout,
                                const std::vector<int>& witness) {
  inst.validate();
  if (!inst.hits(witness)) throw std::invalid_argument("witness_lines: not a valid S2-THS witness");
  std::vector<Line> lines = layout.forced;
  for (int j = 1; j <= inst.k; ++j) {
    const int s = (j - 1) * inst.t + witness[j - 1];
    lines.push_back(layout.hl[s - 1]);
    lines.push_back(layout.vl[s - 1]);
    lines.push_back(layout.vlp[s - 1]);
    lines.push_back(layout.hlp[s - 1]);
    lines.push_back(layout.sl[s - 1]);
    lines.push_back(layout.slp[s - 1]);
  }
  lines = dedup_lines(std::move(lines));
  if (static_cast<int>(lines.size()) != 6 * inst.k + 14)
    throw std::logic_error("witness_lines: expected 6k+14 distinct lines");
  return lines;
}

}  // namespace rbsep
