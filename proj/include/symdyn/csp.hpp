#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "symdyn/shifts.hpp"

namespace symdyn {

// Finite-domain CSP with nogood constraints (forbidden partial assignments).
// Variables are assigned in index order, values in increasing order, with
// forward checking; the first solution found is therefore the
// lexicographically least one.
class CspSolver {
 public:
  using Lit = std::pair<int, Sym>;
  enum class Status { kSolved, kInfeasible, kBudget };

  CspSolver(int vars, int symbols);

  // Intersect the domain of v with `mask` (bit s = symbol s allowed).
  void restrict(int v, std::uint64_t mask);
  void add_nogood(std::vector<Lit> lits);

  Status solve(std::uint64_t node_budget);
  const std::vector<Sym>& solution() const { return value_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool assign(int v, Sym s, std::vector<std::pair<int, std::uint64_t>>& trail);
  void unassign(int v, Sym s);

  int n_;
  int k_;
  bool infeasible_ = false;
  std::vector<std::uint64_t> dom_;
  std::vector<Sym> value_;
  std::vector<std::vector<Lit>> goods_;
  std::vector<std::vector<std::pair<int, int>>> occ_;  // var -> (nogood, position)
  std::vector<int> matched_;
  std::vector<int> broken_;
  std::uint64_t nodes_ = 0;
};

struct CompletionResult {
  CspSolver::Status status = CspSolver::Status::kInfeasible;
  CellMap cells;  // fixed plus filled cells when solved
};

// Fill `free_cells` (in the given order) so that no forbidden pattern occurs
// fully inside the domain fixed + free. Cells absent from both are ignored.
CompletionResult complete_pattern(const GroupCtx& group, int symbols, const std::vector<Pattern>& forbidden,
                                  const CellMap& fixed, const std::vector<GroupElem>& free_cells,
                                  std::uint64_t node_budget = 5'000'000);

// Row-major order on Z^2: y ascending, then x. Other groups fall back to encoding order.
std::vector<GroupElem> row_major(std::vector<GroupElem> cells);

}  // namespace symdyn
