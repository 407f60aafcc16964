#include "rbsep/axis_fpt.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rbsep {

int Specification::cost() const {
  int c = 0;
  for (uint8_t v : horiz) c += v;
  for (uint8_t v : vert) c += v;
  return c;
}

SpecificationEnumerator::SpecificationEnumerator(int horiz_strips, int vert_strips)
    : nh_(horiz_strips), nv_(vert_strips), m_(horiz_strips + vert_strips),
      max_cost_(2 * (horiz_strips + vert_strips)), cur_(m_, 0) {}

bool SpecificationEnumerator::advance() {
  for (int i = m_ - 1; i >= 0; --i) {
    if (cur_[i] < 2) {
      ++cur_[i];
      ++sum_;
      return true;
    }
    cur_[i] = 0;
    sum_ -= 2;
  }
  return false;
}

bool SpecificationEnumerator::next(Specification& out) {
  while (target_ <= max_cost_) {
    if (fresh_) {
      fresh_ = false;
    } else if (!advance()) {
      ++target_;
      std::fill(cur_.begin(), cur_.end(), 0);
      sum_ = 0;
      fresh_ = false;
      if (target_ > max_cost_) return false;
    }
    // Walk the odometer until the current cost level is hit.
    while (sum_ != target_) {
      if (!advance()) {
        ++target_;
        std::fill(cur_.begin(), cur_.end(), 0);
        sum_ = 0;
        if (target_ > max_cost_) return false;
      }
    }
    out.horiz.assign(cur_.begin(), cur_.begin() + nh_);
    out.vert.assign(cur_.begin() + nh_, cur_.end());
    return true;
  }
  return false;
}

std::vector<Specification> enumerate_specifications(const StripDecomposition& strips) {
  SpecificationEnumerator en(strips.horiz_strips(), strips.vert_strips());
  std::vector<Specification> all;
  Specification s;
  while (en.next(s)) all.push_back(s);
  return all;
}

namespace {

// Raw per-point, per-strip variable info before any blue point is involved.
struct PointLit {
  enum Kind : uint8_t { Var, PinnedTrue, PinnedFalse };
  Kind kind;
  int var;
};

// Open-interval overlap between (p, q) and a strip interior (lo, hi) where a
// missing bound is infinite.
bool open_overlap(const Rational& p, const Rational& q, const std::optional<Rational>& lo,
                  const std::optional<Rational>& hi) {
  if (p == q) return false;
  const Rational& a = p < q ? p : q;
  const Rational& b = p < q ? q : p;
  Rational lower = lo && *lo > a ? *lo : a;
  Rational upper = hi && *hi < b ? *hi : b;
  return lower < upper;
}

}  // namespace

AxisFormulaContext::AxisFormulaContext(const Instance& instance, const StripDecomposition& strips)
    : instance_(instance), strips_(strips) {
  build_columns();
  build_blocks();
}

void AxisFormulaContext::build_columns() {
  auto make_columns = [&](bool horizontal) {
    const int n = horizontal ? strips_.horiz_strips() : strips_.vert_strips();
    std::vector<StripColumns> cols(n);
    std::vector<std::vector<Rational>> coords(n);
    for (const Point& p : instance_.red) {
      const Rational& c = horizontal ? p.y : p.x;
      auto [lo, hi] = horizontal ? strips_.horiz_strips_of(c) : strips_.vert_strips_of(c);
      if (lo == hi) coords[lo].push_back(c);  // boundary points are pinned, no variable
    }
    for (int s = 0; s < n; ++s) {
      auto& v = coords[s];
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      cols[s].coords = std::move(v);
      cols[s].vars.resize(cols[s].coords.size());
      for (int& var : cols[s].vars) var = var_count_++;
    }
    return cols;
  };
  hcols_ = make_columns(true);
  vcols_ = make_columns(false);
}

void AxisFormulaContext::build_blocks() {
  const int nh = strips_.horiz_strips();
  const int nv = strips_.vert_strips();

  // Literal info per red point per containing strip (one or two strips per
  // direction; a point lies in two exactly when it sits on a boundary).
  auto point_lit = [&](const Rational& c, int strip, bool horizontal) -> PointLit {
    const auto lo = horizontal ? strips_.y_lo(strip) : strips_.x_lo(strip);
    const auto hi = horizontal ? strips_.y_hi(strip) : strips_.x_hi(strip);
    if (lo && c == *lo) return {PointLit::PinnedFalse, -1};
    if (hi && c == *hi) return {PointLit::PinnedTrue, -1};
    const auto& cols = horizontal ? hcols_[strip] : vcols_[strip];
    auto it = std::lower_bound(cols.coords.begin(), cols.coords.end(), c);
    return {PointLit::Var, cols.vars[it - cols.coords.begin()]};
  };

  struct RedSpan {
    int vxl, vxh, vyl, vyh;
  };
  std::vector<RedSpan> span(instance_.red.size());
  for (std::size_t r = 0; r < instance_.red.size(); ++r) {
    auto [vxl, vxh] = strips_.vert_strips_of(instance_.red[r].x);
    auto [vyl, vyh] = strips_.horiz_strips_of(instance_.red[r].y);
    span[r] = {vxl, vxh, vyl, vyh};
  }

  blue_blocks_.resize(instance_.blue.size());
  for (std::size_t bi = 0; bi < instance_.blue.size(); ++bi) {
    const Point& pb = instance_.blue[bi];
    auto [pvx_lo, pvx_hi] = strips_.vert_strips_of(pb.x);
    auto [pvy_lo, pvy_hi] = strips_.horiz_strips_of(pb.y);
    const int mx = pvx_lo;  // pb.x == xs[mx]
    const int my = pvy_lo;

    for (int i = 0; i < nh; ++i) {
      const auto ylo = strips_.y_lo(i);
      const auto yhi = strips_.y_hi(i);
      // Blue coordinates never fall strictly inside a strip.
      const bool pb_above = yhi && pb.y >= *yhi;
      for (int j = 0; j < nv; ++j) {
        const auto xlo = strips_.x_lo(j);
        const auto xhi = strips_.x_hi(j);
        const bool pb_right = xhi && pb.x >= *xhi;

        CellBlock block;
        block.i = i;
        block.j = j;
        block.rec_begin = static_cast<int>(records_.size());
        // Strips strictly between pb and V_j / H_i.
        if (j < mx) {
          block.vlo = j + 1;
          block.vhi = mx;
        } else if (j > mx + 1) {
          block.vlo = mx + 1;
          block.vhi = j - 1;
        } else {
          block.vlo = 1;
          block.vhi = 0;
        }
        if (i < my) {
          block.hlo = i + 1;
          block.hhi = my;
        } else if (i > my + 1) {
          block.hlo = my + 1;
          block.hhi = i - 1;
        } else {
          block.hlo = 1;
          block.hhi = 0;
        }

        for (std::size_t r = 0; r < instance_.red.size(); ++r) {
          if (j < span[r].vxl || j > span[r].vxh) continue;
          if (i < span[r].vyl || i > span[r].vyh) continue;
          const Point& p = instance_.red[r];
          const bool separable = open_overlap(p.x, pb.x, xlo, xhi) || open_overlap(p.y, pb.y, ylo, yhi);
          if (!separable) continue;

          PairRecord rec;
          const PointLit hy = point_lit(p.y, i, true);
          const PointLit vx = point_lit(p.x, j, false);
          // Literal when the strip holds exactly one line: the side of the
          // line that separates p from pb follows pb's side of the strip.
          auto encode = [](PointLit pl, bool pb_high) -> int32_t {
            if (pl.kind == PointLit::Var) return pb_high ? neg_lit(pl.var) : pos_lit(pl.var);
            const bool value = pl.kind == PointLit::PinnedTrue;
            const bool lit = pb_high ? !value : value;
            return lit ? kLitSatisfied : kLitOmit;
          };
          rec.hlit = encode(hy, pb_above);
          rec.vlit = encode(vx, pb_right);
          // Already separated when the strip holds two lines enclosing its
          // interior red points: p interior, or on the boundary not shared
          // with pb's side.
          auto already = [](PointLit pl, bool pb_high) -> uint8_t {
            if (pl.kind == PointLit::Var) return 1;
            const bool p_high = pl.kind == PointLit::PinnedTrue;
            return p_high != pb_high ? 1 : 0;
          };
          rec.sep_h2 = already(hy, pb_above);
          rec.sep_v2 = already(vx, pb_right);
          records_.push_back(rec);
        }
        block.rec_end = static_cast<int>(records_.size());
        if (block.rec_end > block.rec_begin) blue_blocks_[bi].push_back(block);
      }
    }
    // Cells touching pb first: low-cost specifications usually die there,
    // which keeps the per-specification work small.
    std::stable_sort(blue_blocks_[bi].begin(), blue_blocks_[bi].end(),
                     [&](const CellBlock& a, const CellBlock& b) {
                       auto adj = [&](const CellBlock& c) {
                         return c.j >= pvx_lo && c.j <= pvx_hi && c.i >= pvy_lo && c.i <= pvy_hi ? 0 : 1;
                       };
                       return adj(a) < adj(b);
                     });
  }
}

void AxisFormulaContext::build(const Specification& spec, TwoSatFormula& out,
                               bool stop_on_empty) const {
  out.reset(var_count_);
  const int nh = strips_.horiz_strips();
  const int nv = strips_.vert_strips();

  // Coherence: inside a single-line strip, "line below/left of p" propagates
  // to every later point in coordinate order.
  for (int i = 0; i < nh; ++i) {
    if (spec.horiz[i] != 1) continue;
    const auto& vars = hcols_[i].vars;
    for (std::size_t t = 1; t < vars.size(); ++t) out.add_clause(neg_lit(vars[t - 1]), pos_lit(vars[t]));
  }
  for (int j = 0; j < nv; ++j) {
    if (spec.vert[j] != 1) continue;
    const auto& vars = vcols_[j].vars;
    for (std::size_t t = 1; t < vars.size(); ++t) out.add_clause(neg_lit(vars[t - 1]), pos_lit(vars[t]));
  }

  // Prefix counts of occupied strips for the between-strip conditions.
  std::vector<int> hpref(nh + 1, 0), vpref(nv + 1, 0);
  for (int i = 0; i < nh; ++i) hpref[i + 1] = hpref[i] + (spec.horiz[i] > 0 ? 1 : 0);
  for (int j = 0; j < nv; ++j) vpref[j + 1] = vpref[j] + (spec.vert[j] > 0 ? 1 : 0);

  for (const auto& blocks : blue_blocks_) {
    for (const CellBlock& block : blocks) {
      const uint8_t hc = spec.horiz[block.i];
      const uint8_t vc = spec.vert[block.j];
      if (hc == 2 && vc == 2) continue;
      if (block.vlo <= block.vhi && vpref[block.vhi + 1] - vpref[block.vlo] > 0) continue;
      if (block.hlo <= block.hhi && hpref[block.hhi + 1] - hpref[block.hlo] > 0) continue;

      for (int r = block.rec_begin; r < block.rec_end; ++r) {
        const PairRecord& rec = records_[r];
        if ((hc == 2 && rec.sep_h2) || (vc == 2 && rec.sep_v2)) continue;
        Lit lits[2];
        int cnt = 0;
        bool satisfied = false;
        if (hc == 1) {
          if (rec.hlit == kLitSatisfied) satisfied = true;
          else if (rec.hlit != kLitOmit) lits[cnt++] = rec.hlit;
        }
        if (!satisfied && vc == 1) {
          if (rec.vlit == kLitSatisfied) satisfied = true;
          else if (rec.vlit != kLitOmit) lits[cnt++] = rec.vlit;
        }
        if (satisfied) continue;
        if (cnt == 0) {
          out.add_empty_clause();
          if (stop_on_empty) return;
        } else if (cnt == 1) {
          out.add_clause(lits[0]);
        } else {
          out.add_clause(lits[0], lits[1]);
        }
      }
    }
  }
}

VariableMap AxisFormulaContext::variable_map(const Specification& spec) const {
  VariableMap map;
  map.var_count = var_count_;
  for (int i = 0; i < strips_.horiz_strips(); ++i) {
    if (spec.horiz[i] != 1) continue;
    map.horiz.push_back({i, hcols_[i].coords, hcols_[i].vars});
  }
  for (int j = 0; j < strips_.vert_strips(); ++j) {
    if (spec.vert[j] != 1) continue;
    map.vert.push_back({j, vcols_[j].coords, vcols_[j].vars});
  }
  return map;
}

std::vector<std::pair<int, int>> AxisFormulaContext::interesting_cells(const Specification& spec,
                                                                       const Point& blue) const {
  std::size_t bi = instance_.blue.size();
  for (std::size_t b = 0; b < instance_.blue.size(); ++b) {
    if (instance_.blue[b] == blue) {
      bi = b;
      break;
    }
  }
  if (bi == instance_.blue.size()) throw std::invalid_argument("interesting_cells: not a blue point");

  const int nh = strips_.horiz_strips();
  const int nv = strips_.vert_strips();
  std::vector<int> hpref(nh + 1, 0), vpref(nv + 1, 0);
  for (int i = 0; i < nh; ++i) hpref[i + 1] = hpref[i] + (spec.horiz[i] > 0 ? 1 : 0);
  for (int j = 0; j < nv; ++j) vpref[j + 1] = vpref[j] + (spec.vert[j] > 0 ? 1 : 0);

  std::vector<std::pair<int, int>> cells;
  for (const CellBlock& block : blue_blocks_[bi]) {
    if (spec.horiz[block.i] == 2 && spec.vert[block.j] == 2) continue;
    if (block.vlo <= block.vhi && vpref[block.vhi + 1] - vpref[block.vlo] > 0) continue;
    if (block.hlo <= block.hhi && hpref[block.hhi + 1] - hpref[block.hlo] > 0) continue;
    cells.emplace_back(block.i, block.j);
  }
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::vector<Line> AxisFormulaContext::extract_lines(const Specification& spec,
                                                    const std::vector<char>& assignment) const {
  std::vector<Line> lines;

  auto extract_dir = [&](bool horizontal) {
    const int n = horizontal ? strips_.horiz_strips() : strips_.vert_strips();
    for (int s = 0; s < n; ++s) {
      const uint8_t count = horizontal ? spec.horiz[s] : spec.vert[s];
      if (count == 0) continue;
      const auto lo = horizontal ? strips_.y_lo(s) : strips_.x_lo(s);
      const auto hi = horizontal ? strips_.y_hi(s) : strips_.x_hi(s);
      const auto& cols = horizontal ? hcols_[s] : vcols_[s];

      // Infinite boundaries are replaced by one unit beyond the extreme
      // finite coordinate that matters for this strip.
      std::optional<Rational> finite_min, finite_max;
      auto feed = [&](const Rational& v) {
        if (!finite_min || v < *finite_min) finite_min = v;
        if (!finite_max || v > *finite_max) finite_max = v;
      };
      for (const Rational& c : cols.coords) feed(c);
      if (lo) feed(*lo);
      if (hi) feed(*hi);
      if (!finite_min) throw std::logic_error("extract_lines: strip with no finite coordinate");
      const Rational lo_eff = lo ? *lo : *finite_min - 1;
      const Rational hi_eff = hi ? *hi : *finite_max + 1;

      auto emit = [&](const Rational& offset) {
        lines.push_back(horizontal ? Line::horizontal(offset) : Line::vertical(offset));
      };
      if (count == 2) {
        if (!cols.coords.empty()) {
          emit((lo_eff + cols.coords.front()) / 2);
          emit((cols.coords.back() + hi_eff) / 2);
        } else {
          const Rational span = hi_eff - lo_eff;
          emit(lo_eff + span / 3);
          emit(lo_eff + span * 2 / 3);
        }
      } else {
        std::optional<Rational> max_false, min_true;
        for (std::size_t t = 0; t < cols.coords.size(); ++t) {
          if (assignment[cols.vars[t]]) {
            if (!min_true) min_true = cols.coords[t];
          } else {
            max_false = cols.coords[t];
          }
        }
        const Rational a = max_false ? *max_false : lo_eff;
        const Rational b = min_true ? *min_true : hi_eff;
        if (!(a < b)) throw std::logic_error("extract_lines: empty placement gap");
        emit((a + b) / 2);
      }
    }
  };
  extract_dir(true);
  extract_dir(false);
  return dedup_lines(std::move(lines));
}

AxisSolveResult solve_axis_parallel(const Instance& instance) {
  AxisSolveResult result;
  if (instance.inseparable) {
    result.status = AxisSolveResult::Status::Inseparable;
    return result;
  }
  if (instance.red.empty() || instance.blue.empty()) return result;  // zero lines

  // Separation is color-symmetric; strip on the smaller set.
  const bool swapped = instance.red.size() < instance.blue.size();
  Instance work;
  work.red = swapped ? instance.blue : instance.red;
  work.blue = swapped ? instance.red : instance.blue;

  const StripDecomposition strips = strip_decomposition(work);
  const AxisFormulaContext ctx(work, strips);
  TwoSatFormula formula;
  TwoSatSolver solver;
  SpecificationEnumerator en(strips.horiz_strips(), strips.vert_strips());
  Specification spec;
  while (en.next(spec)) {
    ctx.build(spec, formula, /*stop_on_empty=*/true);
    if (formula.inconsistent()) continue;
    TwoSatResult sat = solver.solve(formula);
    if (!sat.sat) continue;
    result.lines = ctx.extract_lines(spec, sat.assignment);
    result.spec = spec;
    FeasibilityReport report = is_feasible(instance, result.lines);
    if (!report.feasible) throw std::logic_error("solve_axis_parallel: extracted lines failed the checker");
    return result;
  }
  // All strips filled with two lines always separates a coincidence-free
  // instance, so the enumeration cannot run dry.
  throw std::logic_error("solve_axis_parallel: no feasible specification found");
}

std::pair<TwoSatFormula, VariableMap> build_formula(const Instance& instance,
                                                    const StripDecomposition& strips,
                                                    const Specification& spec) {
  AxisFormulaContext ctx(instance, strips);
  TwoSatFormula f;
  ctx.build(spec, f, /*stop_on_empty=*/false);
  return {std::move(f), ctx.variable_map(spec)};
}

std::vector<std::pair<int, int>> interesting_cells(const Instance& instance,
                                                   const StripDecomposition& strips,
                                                   const Specification& spec, const Point& blue) {
  return AxisFormulaContext(instance, strips).interesting_cells(spec, blue);
}

std::vector<Line> extract_lines(const Instance& instance, const StripDecomposition& strips,
                                const Specification& spec, const std::vector<char>& assignment) {
  return AxisFormulaContext(instance, strips).extract_lines(spec, assignment);
}

}  // namespace rbsep
