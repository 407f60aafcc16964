#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rbsep {

// Literal encoding: variable v positive -> 2v, negated -> 2v+1.
using Lit = int32_t;

inline Lit pos_lit(int var) { return static_cast<Lit>(2 * var); }
inline Lit neg_lit(int var) { return static_cast<Lit>(2 * var + 1); }
inline Lit negate_lit(Lit l) { return l ^ 1; }
inline int lit_var(Lit l) { return l >> 1; }
inline bool lit_negated(Lit l) { return l & 1; }

// 2-CNF formula. Clauses of size 0, 1 and 2 are all first class: a unit
// clause is stored with its literal duplicated and an empty clause sets the
// inconsistent flag, which makes the formula unsatisfiable regardless of
// everything else.
class TwoSatFormula {
 public:
  TwoSatFormula() = default;
  explicit TwoSatFormula(int var_count) : var_count_(var_count) {}

  void reset(int var_count);

  int var_count() const { return var_count_; }
  int new_var() { return var_count_++; }

  void add_empty_clause() { inconsistent_ = true; }
  void add_clause(Lit a);          // unit
  void add_clause(Lit a, Lit b);   // binary

  bool inconsistent() const { return inconsistent_; }
  const std::vector<std::pair<Lit, Lit>>& clauses() const { return clauses_; }

  // Debugging dump, one clause per line, 0-terminated integers
  // (1-based DIMACS-style variables, negative for negated literals).
  std::string to_dimacs() const;

 private:
  void check_lit(Lit l) const;

  int var_count_ = 0;
  bool inconsistent_ = false;
  std::vector<std::pair<Lit, Lit>> clauses_;
};

struct TwoSatResult {
  bool sat = false;
  std::vector<char> assignment;  // per variable, valid when sat
};

// Linear-time solver with reusable scratch buffers. Satisfiability is decided
// on the implication graph's strongly connected components; the extracted
// assignment is a deterministic function of clause insertion order.
class TwoSatSolver {
 public:
  TwoSatResult solve(const TwoSatFormula& f);

 private:
  std::vector<int> head_, next_, to_;
  std::vector<int> index_, low_, comp_, stack_, call_node_, call_edge_;
  std::vector<char> on_stack_;
};

// Convenience one-shot solve.
TwoSatResult solve(const TwoSatFormula& f);

// Exhaustive truth-table search; same verdict contract as solve() though the
// returned assignment may differ. Requires var_count <= 20.
TwoSatResult brute_force_solve(const TwoSatFormula& f);

// Evaluates the formula under an assignment.
bool satisfies(const TwoSatFormula& f, const std::vector<char>& assignment);

}  // namespace rbsep
