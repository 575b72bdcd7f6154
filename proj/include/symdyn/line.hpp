#pragma once

#include <boost/dynamic_bitset.hpp>
#include <tuple>
#include <vector>

#include "symdyn/shifts.hpp"

namespace symdyn {

// Labeled-graph presentation of a shift on Z, trimmed to its essential part
// (every state has an incoming and an outgoing edge), so every finite path
// extends to a bi-infinite one.
class LinePresentation {
 public:
  using StateSet = boost::dynamic_bitset<>;
  using Edge = std::tuple<int, Sym, int>;

  LinePresentation(int states, int symbols, const std::vector<Edge>& edges);

  // De Bruijn graph on words of length w-1, w = max(extent, 2).
  static LinePresentation de_bruijn(int symbols, const std::vector<Pattern>& forbidden,
                                    std::size_t state_budget = 1u << 20);

  int states() const { return n_; }
  int symbols() const { return k_; }
  int window() const { return window_; }
  bool empty() const { return n_ == 0; }
  const std::vector<Edge>& edges() const { return edges_; }

  StateSet all() const { return StateSet(n_).set(); }
  StateSet none() const { return StateSet(n_); }
  StateSet step(const StateSet& s, Sym a) const;
  // Successors under any symbol (a hole).
  StateSet step_any(const StateSet& s) const;
  StateSet back(const StateSet& s, Sym a) const;

  // States that end an infinite leftward run of 0s.
  const StateSet& zero_past() const { return zero_past_; }
  // States that start an infinite rightward run of 0s.
  const StateSet& zero_future() const { return zero_future_; }

  // Symbols < 0 are holes.
  bool word_valid(const std::vector<Sym>& w) const;
  // ...000 w 000...
  bool finite_valid(const std::vector<Sym>& w) const;
  // w^Z
  bool periodic_valid(const std::vector<Sym>& w) const;

 private:
  void build(int states, const std::vector<Edge>& edges);

  int n_ = 0;
  int k_ = 0;
  int window_ = 2;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> succ_;  // [state * k + sym]
  std::vector<std::vector<int>> pred_;
  StateSet zero_past_;
  StateSet zero_future_;
};

// Word of the configuration over [lo, hi] with holes where the pattern has no cell.
std::vector<Sym> pattern_word(const Pattern& p, Int& lo);

}  // namespace symdyn
