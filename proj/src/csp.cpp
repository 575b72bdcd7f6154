#include "symdyn/csp.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "symdyn/error.hpp"

namespace symdyn {

CspSolver::CspSolver(int vars, int symbols)
    : n_(vars), k_(symbols), dom_(static_cast<std::size_t>(vars)), value_(static_cast<std::size_t>(vars), -1),
      occ_(static_cast<std::size_t>(vars)) {
  if (symbols < 1 || symbols > 64) throw InputError("CSP supports 1..64 symbols");
  std::uint64_t full = symbols == 64 ? ~0ULL : ((1ULL << symbols) - 1);
  std::fill(dom_.begin(), dom_.end(), full);
}

void CspSolver::restrict(int v, std::uint64_t mask) {
  dom_[v] &= mask;
  if (dom_[v] == 0) infeasible_ = true;
}

void CspSolver::add_nogood(std::vector<Lit> lits) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  for (std::size_t i = 1; i < lits.size(); ++i) {
    if (lits[i].first == lits[i - 1].first) return;  // can never match
  }
  if (lits.empty()) {
    infeasible_ = true;
    return;
  }
  if (lits.size() == 1) {
    restrict(lits[0].first, ~(1ULL << lits[0].second));
    return;
  }
  int id = static_cast<int>(goods_.size());
  for (std::size_t i = 0; i < lits.size(); ++i) occ_[lits[i].first].emplace_back(id, static_cast<int>(i));
  goods_.push_back(std::move(lits));
  matched_.push_back(0);
  broken_.push_back(0);
}

bool CspSolver::assign(int v, Sym s, std::vector<std::pair<int, std::uint64_t>>& trail) {
  value_[v] = s;
  for (const auto& [g, pos] : occ_[v]) {
    if (goods_[g][pos].second == s) ++matched_[g];
    else ++broken_[g];
  }
  for (const auto& [g, pos] : occ_[v]) {
    if (broken_[g] != 0) continue;
    const auto& lits = goods_[g];
    int size = static_cast<int>(lits.size());
    if (matched_[g] == size) return false;
    if (matched_[g] == size - 1) {
      for (const auto& [u, t] : lits) {
        if (value_[u] >= 0) continue;
        std::uint64_t bit = 1ULL << t;
        if (dom_[u] & bit) {
          trail.emplace_back(u, dom_[u]);
          dom_[u] &= ~bit;
          if (dom_[u] == 0) return false;
        }
        break;
      }
    }
  }
  return true;
}

void CspSolver::unassign(int v, Sym s) {
  for (const auto& [g, pos] : occ_[v]) {
    if (goods_[g][pos].second == s) --matched_[g];
    else --broken_[g];
  }
  value_[v] = -1;
}

CspSolver::Status CspSolver::solve(std::uint64_t node_budget) {
  if (infeasible_) return Status::kInfeasible;
  if (n_ == 0) return Status::kSolved;
  struct Frame {
    int v;
    std::uint64_t remaining;
    std::size_t mark = 0;
    Sym cur = -1;
  };
  std::vector<std::pair<int, std::uint64_t>> trail;
  std::vector<Frame> stack;
  stack.push_back({0, dom_[0]});
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.cur >= 0) {
      unassign(f.v, f.cur);
      while (trail.size() > f.mark) {
        dom_[trail.back().first] = trail.back().second;
        trail.pop_back();
      }
      f.cur = -1;
    }
    if (f.remaining == 0) {
      stack.pop_back();
      continue;
    }
    Sym s = static_cast<Sym>(__builtin_ctzll(f.remaining));
    f.remaining &= f.remaining - 1;
    if (++nodes_ > node_budget) return Status::kBudget;
    f.mark = trail.size();
    f.cur = s;
    if (!assign(f.v, s, trail)) continue;
    if (f.v == n_ - 1) return Status::kSolved;
    int nv = f.v + 1;
    stack.push_back({nv, dom_[nv]});
  }
  return Status::kInfeasible;
}

CompletionResult complete_pattern(const GroupCtx& group, int symbols, const std::vector<Pattern>& forbidden,
                                  const CellMap& fixed, const std::vector<GroupElem>& free_cells,
                                  std::uint64_t node_budget) {
  CompletionResult res;
  std::unordered_map<GroupElem, int, GroupElemHash> var;
  var.reserve(free_cells.size() * 2);
  for (std::size_t i = 0; i < free_cells.size(); ++i) {
    if (fixed.count(free_cells[i])) throw InputError("cell is both fixed and free");
    var.emplace(free_cells[i], static_cast<int>(i));
  }
  CspSolver csp(static_cast<int>(free_cells.size()), symbols);
  std::vector<GroupElem> all_cells = free_cells;
  for (const auto& [g, s] : fixed) all_cells.push_back(g);
  for (const auto& fp : forbidden) {
    std::vector<std::pair<GroupElem, Sym>> fcells(fp.cells.begin(), fp.cells.end());
    std::vector<GroupElem> finv;
    for (const auto& [f, s] : fcells) finv.push_back(group.inv(f));
    std::unordered_set<GroupElem, GroupElemHash> seen;
    for (const auto& c : all_cells) {
      for (const auto& fi : finv) {
        GroupElem g = group.mul(c, fi);
        if (!seen.insert(g).second) continue;
        std::vector<CspSolver::Lit> lits;
        bool inside = true, dead = false;
        for (const auto& [f, s] : fcells) {
          GroupElem cell = group.mul(g, f);
          auto it = var.find(cell);
          if (it != var.end()) {
            lits.emplace_back(it->second, s);
            continue;
          }
          auto jt = fixed.find(cell);
          if (jt == fixed.end()) {
            inside = false;
            break;
          }
          if (jt->second != s) {
            dead = true;
            break;
          }
        }
        if (!inside || dead) continue;
        csp.add_nogood(std::move(lits));
      }
    }
  }
  res.status = csp.solve(node_budget);
  if (res.status == CspSolver::Status::kSolved) {
    res.cells = fixed;
    for (std::size_t i = 0; i < free_cells.size(); ++i) res.cells[free_cells[i]] = csp.solution()[i];
  }
  return res;
}

std::vector<GroupElem> row_major(std::vector<GroupElem> cells) {
  std::sort(cells.begin(), cells.end(), [](const GroupElem& a, const GroupElem& b) {
    if (a.nf.size() == 2 && b.nf.size() == 2) {
      if (a.nf[1] != b.nf[1]) return a.nf[1] < b.nf[1];
      return a.nf[0] < b.nf[0];
    }
    return a < b;
  });
  return cells;
}

}  // namespace symdyn
