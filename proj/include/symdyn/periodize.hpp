#pragma once

#include <functional>
#include <vector>

#include "symdyn/ca.hpp"
#include "symdyn/shifts.hpp"

namespace symdyn {

// k . x = x for every basis vector k of the lattice (both signs).
bool fix_membership(const Configuration& x, const QuotientCtx& f);
// k_shadow(x, q) is contained in E.
bool fin_membership(const Configuration& x, const QuotientCtx& q, const std::vector<GroupElem>& e);

struct LocSubsystem {
  GroupCtx group;
  std::vector<GroupElem> generators;  // F, closed under inverses
  LocalRule rule;                     // canonical form of f
  std::function<bool(const GroupElem&)> member;
  // support contained in <F>
  bool contains(const Configuration& x) const;
  // elements of <F> of word length <= r in the generators F
  std::vector<GroupElem> ball(Int r) const;
};

// Throws InputError when some essential neighbor lies outside <F>.
LocSubsystem loc_subsystem(const LocalRule& f, const std::vector<GroupElem>& generators);

struct PeriodizeReport {
  QuotientCtx lattice = QuotientCtx::moduli({1});  // F, replaced on return
  Configuration z;
  Int m = 0;            // F = m K
  Int collar = 0;
  std::vector<GroupElem> m_set;   // M
  std::vector<GroupElem> n_set;   // N, in G/K
  bool periodic = false;
  bool window_agrees = false;
  bool shadow_contained = false;
  bool valid = false;
  bool avoids_m = false;
  bool ok() const { return periodic && window_agrees && shadow_contained && valid && avoids_m; }
};

// Glues the translates k . y, k in F = m K, where m is the least modulus with
// m Z^d avoiding M = (E + E') - (E + E'), E = ball(c) + {0} + window and
// E' = supp(y) + ball(c) + {0}, c the shift's zero-gluing collar.
PeriodizeReport periodize(const Configuration& y, const QuotientCtx& k, const Subshift& x,
                          const std::vector<GroupElem>& window);

}  // namespace symdyn
