#include "rbsep/twosat.hpp"

#include "rbsep/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace rbsep {

void TwoSatFormula::reset(int var_count) {
  var_count_ = var_count;
  inconsistent_ = false;
  clauses_.clear();
}

void TwoSatFormula::check_lit(Lit l) const {
  int v = lit_var(l);
  if (v < 0 || v >= var_count_) throw std::out_of_range("TwoSatFormula: variable index out of range");
}

void TwoSatFormula::add_clause(Lit a) {
  check_lit(a);
  clauses_.emplace_back(a, a);
}

void TwoSatFormula::add_clause(Lit a, Lit b) {
  check_lit(a);
  check_lit(b);
  clauses_.emplace_back(a, b);
}

std::string TwoSatFormula::to_dimacs() const {
  std::ostringstream out;
  out << "p cnf " << var_count_ << ' ' << clauses_.size() + (inconsistent_ ? 1 : 0) << '\n';
  if (inconsistent_) out << "0\n";
  for (const auto& [a, b] : clauses_) {
    int da = lit_negated(a) ? -(lit_var(a) + 1) : lit_var(a) + 1;
    if (a == b) {
      out << da << " 0\n";
    } else {
      int db = lit_negated(b) ? -(lit_var(b) + 1) : lit_var(b) + 1;
      out << da << ' ' << db << " 0\n";
    }
  }
  return out.str();
}

TwoSatResult TwoSatSolver::solve(const TwoSatFormula& f) {
  if (f.inconsistent()) return {false, {}};
  const int n_nodes = 2 * f.var_count();
  const auto& clauses = f.clauses();

  // Implication edges in clause order: (a or b) gives ~a -> b and ~b -> a.
  // Adjacency lists are built back to front so traversal follows insertion
  // order, keeping the extracted assignment reproducible.
  head_.assign(n_nodes, -1);
  const std::size_t n_edges = 2 * clauses.size();
  next_.resize(n_edges);
  to_.resize(n_edges);
  std::size_t e = 2 * clauses.size();
  for (std::size_t ci = clauses.size(); ci-- > 0;) {
    const auto& [a, b] = clauses[ci];
    // ~b -> a first so that after prepending, ~a -> b comes out first.
    --e;
    to_[e] = a;
    next_[e] = head_[negate_lit(b)];
    head_[negate_lit(b)] = static_cast<int>(e);
    --e;
    to_[e] = b;
    next_[e] = head_[negate_lit(a)];
    head_[negate_lit(a)] = static_cast<int>(e);
  }

  // Iterative Tarjan; components are numbered in pop order (sinks first).
  index_.assign(n_nodes, -1);
  low_.assign(n_nodes, 0);
  comp_.assign(n_nodes, -1);
  on_stack_.assign(n_nodes, 0);
  stack_.clear();
  call_node_.clear();
  call_edge_.clear();

  int next_index = 0;
  int next_comp = 0;
  for (int root = 0; root < n_nodes; ++root) {
    if (index_[root] != -1) continue;
    call_node_.push_back(root);
    call_edge_.push_back(head_[root]);
    index_[root] = low_[root] = next_index++;
    stack_.push_back(root);
    on_stack_[root] = 1;
    while (!call_node_.empty()) {
      int u = call_node_.back();
      int edge = call_edge_.back();
      if (edge != -1) {
        call_edge_.back() = next_[edge];
        int v = to_[edge];
        if (index_[v] == -1) {
          call_node_.push_back(v);
          call_edge_.push_back(head_[v]);
          index_[v] = low_[v] = next_index++;
          stack_.push_back(v);
          on_stack_[v] = 1;
        } else if (on_stack_[v]) {
          if (index_[v] < low_[u]) low_[u] = index_[v];
        }
      } else {
        call_node_.pop_back();
        call_edge_.pop_back();
        if (!call_node_.empty()) {
          int parent = call_node_.back();
          if (low_[u] < low_[parent]) low_[parent] = low_[u];
        }
        if (low_[u] == index_[u]) {
          while (true) {
            int w = stack_.back();
            stack_.pop_back();
            on_stack_[w] = 0;
            comp_[w] = next_comp;
            if (w == u) break;
          }
          ++next_comp;
        }
      }
    }
  }

  TwoSatResult res;
  res.assignment.assign(f.var_count(), 0);
  for (int v = 0; v < f.var_count(); ++v) {
    if (comp_[pos_lit(v)] == comp_[neg_lit(v)]) return {false, {}};
    // Earlier component id = closer to a sink of the condensation; making
    // that literal true cannot imply a false one.
    res.assignment[v] = comp_[pos_lit(v)] < comp_[neg_lit(v)] ? 1 : 0;
  }
  res.sat = true;
  return res;
}

TwoSatResult solve(const TwoSatFormula& f) {
  TwoSatSolver solver;
  return solver.solve(f);
}

bool satisfies(const TwoSatFormula& f, const std::vector<char>& assignment) {
  if (f.inconsistent()) return false;
  for (const auto& [a, b] : f.clauses()) {
    bool va = assignment[lit_var(a)] ^ lit_negated(a);
    bool vb = assignment[lit_var(b)] ^ lit_negated(b);
    if (!va && !vb) return false;
  }
  return true;
}

TwoSatResult brute_force_solve(const TwoSatFormula& f) {
  if (f.var_count() > 20) throw ResourceLimitError("brute_force_solve: too many variables");
  if (f.inconsistent()) return {false, {}};
  const int n = f.var_count();
  std::vector<char> assignment(n, 0);
  for (uint32_t mask = 0; mask < (uint32_t(1) << n); ++mask) {
    for (int v = 0; v < n; ++v) assignment[v] = (mask >> v) & 1;
    if (satisfies(f, assignment)) return {true, assignment};
  }
  return {false, {}};
}

}  // namespace rbsep
