#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/shifts.hpp"

namespace symdyn {

// Cellular automaton f(x)_g = F(x_{g n_1}, ..., x_{g n_m}) with quiescent F.
// Table index of a tuple (s_1..s_m) is sum s_i k^(m-i).
class LocalRule {
 public:
  LocalRule(const GroupCtx& group, const Alphabet& alphabet, std::vector<GroupElem> neighborhood,
            std::vector<Sym> table);
  static LocalRule from_function(const GroupCtx& group, const Alphabet& alphabet,
                                 std::vector<GroupElem> neighborhood,
                                 const std::function<Sym(const std::vector<Sym>&)>& fn,
                                 std::size_t budget = 1'000'000);

  const GroupCtx& group() const { return group_; }
  const Alphabet& alphabet() const { return alphabet_; }
  int symbols() const { return alphabet_.size(); }
  const std::vector<GroupElem>& neighborhood() const { return nbhd_; }
  const std::vector<Sym>& table() const { return table_; }

  Sym eval(const std::vector<Sym>& values) const;
  Sym eval_index(std::size_t idx) const { return table_[idx]; }
  std::vector<Sym> decode(std::size_t idx) const;
  std::size_t table_size() const { return table_.size(); }

  // Registered formula name, if the table was materialized from one.
  std::string formula;

  friend bool operator==(const LocalRule& a, const LocalRule& b) {
    return a.group_ == b.group_ && a.alphabet_ == b.alphabet_ && a.nbhd_ == b.nbhd_ && a.table_ == b.table_;
  }

 private:
  GroupCtx group_;
  Alphabet alphabet_;
  std::vector<GroupElem> nbhd_;
  std::vector<Sym> table_;
};

LocalRule zero_rule(const GroupCtx& group, const Alphabet& alphabet);
LocalRule identity_rule(const GroupCtx& group, const Alphabet& alphabet);
// f(x)_g = x_{g t^{-1}}: moves every symbol by t (t = +1 on Z is the right shift).
LocalRule shift_rule(const GroupCtx& group, const Alphabet& alphabet, const GroupElem& t);
// f(x)_i = min(x_i, x_{i+1}) on {0,1}^Z
LocalRule min_rule();

Configuration apply(const LocalRule& f, const Configuration& x);
Configuration iterate(const LocalRule& f, Configuration x, Int n);

// f o g, neighborhood N_f N_g.
LocalRule compose(const LocalRule& f, const LocalRule& g, std::size_t neighborhood_budget = 16);
// Keep only positions F depends on, sorted by encoding.
LocalRule canonicalize(const LocalRule& f);
bool same_function(const LocalRule& f, const LocalRule& g);

struct EquivarianceResult {
  bool commutes = true;
  Pattern witness;  // window on which f h and h f differ
};

// h permutes symbols (perm[s] = h(s), perm[0] must be 0).
EquivarianceResult equivariance_check(const LocalRule& f, const std::vector<Sym>& perm);
// h is a group automorphism alpha acting by (h x)_g = x_{alpha^{-1}(g)}.
EquivarianceResult equivariance_check(const LocalRule& f,
                                      const std::function<GroupElem(const GroupElem&)>& alpha_inv);

LocalRule induced_periodic_rule(const LocalRule& f, const QuotientCtx& q);

struct OrbitTrace {
  Configuration base;
  GroupElem cell;
  Int horizon = 0;
  std::vector<Sym> symbols;
};

OrbitTrace orbit_trace(const LocalRule& f, const Configuration& x, const GroupElem& g, Int horizon);

// Dense fast path for rules on Z.
struct LineWord {
  Int origin = 0;
  std::vector<Sym> cells;  // cells[i] = x_{origin + i}, trimmed of zeros at both ends

  bool zero() const { return cells.empty(); }
  Sym at(Int i) const;
  void trim();
  friend bool operator==(const LineWord&, const LineWord&) = default;
};

class LineRule {
 public:
  explicit LineRule(const LocalRule& f);
  LineWord step(const LineWord& w) const;
  Int lo() const { return lo_; }
  Int hi() const { return hi_; }
  int symbols() const { return k_; }

 private:
  std::vector<Int> offs_;
  std::vector<std::size_t> mult_;
  std::vector<Sym> table_;
  int k_;
  Int lo_ = 0, hi_ = 0;
};

LineWord to_line(const Configuration& x);
Configuration from_line(const LineWord& w);

}  // namespace symdyn
