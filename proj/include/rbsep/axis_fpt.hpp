#pragma once

#include "rbsep/instance.hpp"
#include "rbsep/twosat.hpp"

#include <cstdint>
#include <vector>

namespace rbsep {

// Per-strip line-count guess: how many lines (0, 1 or 2) a candidate optimal
// solution places in each horizontal and each vertical strip. An optimal
// solution never needs more than two per strip, since strip interiors are
// blue-free.
struct Specification {
  std::vector<uint8_t> horiz;
  std::vector<uint8_t> vert;

  int cost() const;
  bool operator==(const Specification&) const = default;
};

// Streams all 3^horiz_strips * 3^vert_strips specifications in nondecreasing
// cost order, ties broken lexicographically on the concatenated
// (horiz, vert) count vector. The first yielded specification is all-zero.
class SpecificationEnumerator {
 public:
  SpecificationEnumerator(int horiz_strips, int vert_strips);

  // Fills `out` with the next specification; returns false when exhausted.
  bool next(Specification& out);

 private:
  int nh_, nv_, m_;
  int target_ = 0, max_cost_;
  int sum_ = 0;
  bool fresh_ = true;
  std::vector<uint8_t> cur_;

  bool advance();  // lexicographic odometer step; false on wrap-around
};

// Convenience collector for tests and small cases.
std::vector<Specification> enumerate_specifications(const StripDecomposition& strips);

// Variables of the 2-SAT encoding for the strips that hold exactly one line.
// Red points sharing a coordinate inside a strip share one variable; points
// on a strip boundary are pinned constants and get no variable.
struct VariableMap {
  struct StripVars {
    int strip = 0;
    std::vector<Rational> coords;  // distinct interior coordinates, ascending
    std::vector<int> vars;         // parallel variable ids
  };
  std::vector<StripVars> horiz;  // strips with horiz count == 1
  std::vector<StripVars> vert;   // strips with vert count == 1
  int var_count = 0;
};

// Spec-independent precomputation for one (instance, strips) pair. Builds
// the 2-SAT instance for any specification: coherence implications between
// consecutive red points of single-line strips plus one separation clause
// per (blue point, interesting cell, separable not-already-separated red).
class AxisFormulaContext {
 public:
  AxisFormulaContext(const Instance& instance, const StripDecomposition& strips);

  int var_count() const { return var_count_; }
  const StripDecomposition& strips() const { return strips_; }

  // Fills `out`. With stop_on_empty the build aborts at the first empty
  // clause (the formula is already unsatisfiable at that point).
  void build(const Specification& spec, TwoSatFormula& out, bool stop_on_empty) const;

  VariableMap variable_map(const Specification& spec) const;

  // Cells (i, j) interesting for the given blue point under the spec.
  std::vector<std::pair<int, int>> interesting_cells(const Specification& spec,
                                                     const Point& blue) const;

  std::vector<Line> extract_lines(const Specification& spec,
                                  const std::vector<char>& assignment) const;

 private:
  static constexpr int kLitOmit = -1;      // literal is constant-false: drop it
  static constexpr int kLitSatisfied = -2; // literal is constant-true: drop clause

  struct PairRecord {
    int32_t hlit, vlit;  // encoded literal if the strip count is 1
    uint8_t sep_h2, sep_v2;  // already separated when that strip holds 2 lines
  };
  struct CellBlock {
    int i, j;
    int vlo, vhi;  // vertical strips strictly between the blue point and V_j
    int hlo, hhi;
    int rec_begin, rec_end;
  };
  struct StripColumns {
    std::vector<Rational> coords;
    std::vector<int> vars;
  };

  const Instance& instance_;
  StripDecomposition strips_;
  int var_count_ = 0;
  std::vector<StripColumns> hcols_, vcols_;
  std::vector<std::vector<CellBlock>> blue_blocks_;  // per blue point
  std::vector<PairRecord> records_;

  void build_columns();
  void build_blocks();
};

struct AxisSolveResult {
  enum class Status { Solved, Inseparable };
  Status status = Status::Solved;
  std::vector<Line> lines;
  Specification spec;  // the specification that produced the solution

  int cost() const { return static_cast<int>(lines.size()); }
};

// The FPT solver: swaps colors so the strip side is the smaller set, walks
// specifications in cost order, solves the 2-SAT encoding of each and turns
// the first satisfiable one into concrete lines (verified feasible before
// returning). Empty red or blue set short-circuits to the empty solution.
AxisSolveResult solve_axis_parallel(const Instance& instance);

// Free-function forms of the context operations.
std::pair<TwoSatFormula, VariableMap> build_formula(const Instance& instance,
                                                    const StripDecomposition& strips,
                                                    const Specification& spec);
std::vector<std::pair<int, int>> interesting_cells(const Instance& instance,
                                                   const StripDecomposition& strips,
                                                   const Specification& spec, const Point& blue);
std::vector<Line> extract_lines(const Instance& instance, const StripDecomposition& strips,
                                const Specification& spec, const std::vector<char>& assignment);

}  // namespace rbsep
