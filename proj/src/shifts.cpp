#include "symdyn/shifts.hpp"

#include <algorithm>
#include <set>

#include "symdyn/csp.hpp"
#include "symdyn/error.hpp"
#include "symdyn/line.hpp"

namespace symdyn {

// ---- Alphabet ----

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InputError("alphabet must contain the zero symbol");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw InputError("alphabet has duplicate symbols");
  if (names_.size() > 64) throw InputError("alphabet larger than 64 symbols");
}

Alphabet Alphabet::range(int k) {
  std::vector<std::string> n;
  for (int i = 0; i < k; ++i) n.push_back(std::to_string(i));
  return Alphabet(std::move(n));
}

Sym Alphabet::index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<Sym>(i);
  }
  throw InputError("unknown symbol '" + name + "'");
}

bool Alphabet::has(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

// ---- Pattern ----

Pattern Pattern::word(const std::vector<Sym>& w, Int start) {
  Pattern p;
  for (std::size_t i = 0; i < w.size(); ++i) p.cells[GroupElem{start + static_cast<Int>(i)}] = w[i];
  return p;
}

Pattern Pattern::grid(const std::vector<std::vector<Sym>>& rows, Int x0, Int y0) {
  Pattern p;
  for (std::size_t y = 0; y < rows.size(); ++y) {
    for (std::size_t x = 0; x < rows[y].size(); ++x) {
      p.cells[GroupElem{x0 + static_cast<Int>(x), y0 + static_cast<Int>(y)}] = rows[y][x];
    }
  }
  return p;
}

std::vector<GroupElem> Pattern::domain() const {
  std::vector<GroupElem> d;
  d.reserve(cells.size());
  for (const auto& [g, s] : cells) d.push_back(g);
  return d;
}

// ---- Configuration ----

Configuration::Configuration(const GroupCtx& group) : group_(group.base()), space_(group) {
  if (group.kind() == GroupKind::kZdQuotient) quotient_.emplace(*group.lattice());
}

Configuration Configuration::finite(const GroupCtx& group, const CellMap& entries) {
  Configuration c(group);
  for (const auto& [g, s] : entries) c.set(g, s);
  return c;
}

Configuration Configuration::periodic(const QuotientCtx& q, const CellMap& cells) {
  Configuration c(q.group());
  for (const auto& [g, s] : cells) {
    GroupElem r = q.project(g);
    auto it = c.entries_.find(r);
    if (it != c.entries_.end() && it->second != s) throw InputError("periodic cells disagree on a coset");
    if (s == 0) {
      if (it != c.entries_.end()) throw InputError("periodic cells disagree on a coset");
      continue;
    }
    c.entries_[r] = s;
  }
  return c;
}

Configuration Configuration::word(const std::vector<Sym>& w, Int start) {
  Configuration c(GroupCtx::zd(1));
  for (std::size_t i = 0; i < w.size(); ++i) c.set(GroupElem{start + static_cast<Int>(i)}, w[i]);
  return c;
}

ConfigKind Configuration::kind() const {
  if (!quotient_) return ConfigKind::kFinite;
  return quotient_->finite_index() ? ConfigKind::kLatticePeriodic : ConfigKind::kStripPeriodic;
}

Sym Configuration::at(const GroupElem& g) const {
  auto it = entries_.find(quotient_ ? quotient_->project(g) : g);
  return it == entries_.end() ? 0 : it->second;
}

void Configuration::set(const GroupElem& g, Sym s) {
  if (s < 0) throw InputError("negative symbol");
  GroupElem k = space_.canonical(g);
  if (s == 0) entries_.erase(k);
  else entries_[k] = s;
}

Configuration Configuration::translate(const GroupElem& g) const {
  Configuration out(space_);
  for (const auto& [k, s] : entries_) {
    GroupElem h = quotient_ ? space_.mul(space_.canonical(g), k) : group_.mul(g, k);
    out.entries_[h] = s;
  }
  return out;
}

bool operator==(const Configuration& a, const Configuration& b) {
  return a.space_ == b.space_ && a.entries_ == b.entries_;
}

std::vector<GroupElem> support(const Configuration& x) {
  std::vector<GroupElem> s;
  s.reserve(x.entries().size());
  for (const auto& [g, v] : x.entries()) s.push_back(g);
  return s;
}

std::vector<GroupElem> shadow(const Configuration& x) { return support(x); }

std::vector<GroupElem> k_shadow(const Configuration& x, const QuotientCtx& q) {
  if (!x.group().is_zd_like() || x.group().dim() != q.lattice().dim()) {
    throw InputError("k_shadow needs a quotient of the configuration's group");
  }
  if (x.quotient() && !q.lattice().contains(x.quotient()->lattice())) {
    throw InputError("configuration period is not contained in the shadow subgroup");
  }
  std::set<GroupElem> out;
  for (const auto& [g, v] : x.entries()) out.insert(q.project(g));
  return {out.begin(), out.end()};
}

Pattern restrict_pattern(const Configuration& x, const std::vector<GroupElem>& domain) {
  Pattern p;
  for (const auto& g : domain) p.cells[x.group().canonical(g)] = x.at(g);
  return p;
}

// ---- Subshift ----

Subshift::Subshift(ShiftKind kind, const GroupCtx& group, const Alphabet& alphabet)
    : kind_(kind), group_(group), alphabet_(alphabet) {}

Int extent(const std::vector<GroupElem>& cells) {
  if (cells.empty()) return 0;
  std::size_t d = cells[0].nf.size();
  Int best = 1;
  for (std::size_t i = 0; i < d; ++i) {
    Int lo = cells[0].nf[i], hi = lo;
    for (const auto& c : cells) {
      lo = std::min(lo, c.nf.at(i));
      hi = std::max(hi, c.nf.at(i));
    }
    best = std::max(best, hi - lo + 1);
  }
  return best;
}

Subshift Subshift::full(const GroupCtx& group, const Alphabet& alphabet) {
  Subshift x(ShiftKind::kFull, group, alphabet);
  x.label = "full";
  x.zero_gluing_collar = 0;
  return x;
}

Subshift Subshift::sft(const GroupCtx& group, const Alphabet& alphabet, std::vector<Pattern> forbidden) {
  Subshift x(ShiftKind::kSft, group, alphabet);
  x.label = "sft";
  x.contains_zero_ = true;
  for (auto& p : forbidden) {
    if (p.empty()) throw InputError("forbidden pattern with empty domain");
    CellMap canon;
    bool all_zero = true;
    for (const auto& [g, s] : p.cells) {
      if (s < 0 || s >= alphabet.size()) throw InputError("forbidden pattern symbol outside alphabet");
      canon[group.canonical(g)] = s;
      if (s != 0) all_zero = false;
    }
    p.cells = std::move(canon);
    if (all_zero) x.contains_zero_ = false;
    if (group.is_zd_like()) x.window_ = std::max(x.window_, extent(p.domain()));
    else {
      Int r = 0;
      for (const auto& [g, s] : p.cells) r = std::max(r, group.norm(g));
      x.window_ = std::max(x.window_, 2 * r + 1);
    }
  }
  x.forbidden_ = std::move(forbidden);
  if (group.kind() == GroupKind::kZd && group.dim() == 1) {
    x.line_ = std::make_shared<const LinePresentation>(LinePresentation::de_bruijn(alphabet.size(), x.forbidden_));
  }
  return x;
}

Subshift Subshift::predicate(const GroupCtx& group, const Alphabet& alphabet,
                             std::shared_ptr<const PredicateOracle> oracle) {
  if (!oracle) throw InputError("predicate shift without oracle");
  Subshift x(ShiftKind::kPredicate, group, alphabet);
  x.label = oracle->name();
  x.contains_zero_ = oracle->contains_zero_point();
  x.window_ = oracle->window();
  x.oracle_ = std::move(oracle);
  return x;
}

Exactness Subshift::exactness() const {
  if (kind_ == ShiftKind::kPredicate) return oracle_->exactness();
  if (kind_ == ShiftKind::kSft && !line_) return Exactness::kWindowSound;
  return Exactness::kExact;
}

const LinePresentation* Subshift::line() const {
  if (line_) return line_.get();
  if (oracle_) return oracle_->line();
  return nullptr;
}

Int Subshift::window() const { return window_; }

namespace {

void check_symbols(const Subshift& x, const CellMap& cells) {
  for (const auto& [g, s] : cells) {
    if (s < 0 || s >= x.alphabet().size()) throw InputError("symbol outside the shift's alphabet");
  }
}

std::vector<GroupElem> ball_around(const GroupCtx& group, const std::vector<GroupElem>& dom, Int r) {
  auto b = group.ball(r);
  std::set<GroupElem> out;
  for (const auto& p : dom) for (const auto& e : b) out.insert(group.mul(p, e));
  return {out.begin(), out.end()};
}

}  // namespace

Validity pattern_valid(const Subshift& x, const Pattern& p, Int search_radius) {
  check_symbols(x, p.cells);
  if (x.kind() == ShiftKind::kFull) return Validity::kValid;
  if (const LinePresentation* lp = x.line(); lp && x.group().kind() == GroupKind::kZd && x.group().dim() == 1) {
    Int lo = 0;
    return lp->word_valid(pattern_word(p, lo)) ? Validity::kValid : Validity::kInvalid;
  }
  if (x.kind() == ShiftKind::kPredicate) return x.oracle()->pattern_valid(p, search_radius);
  std::vector<GroupElem> free;
  for (const auto& g : ball_around(x.group(), p.domain(), search_radius)) {
    if (!p.cells.count(g)) free.push_back(g);
  }
  auto res = complete_pattern(x.group(), x.alphabet().size(), x.forbidden(), p.cells, row_major(std::move(free)));
  switch (res.status) {
    case CspSolver::Status::kSolved:
      return Validity::kValid;
    case CspSolver::Status::kInfeasible:
      return Validity::kInvalid;
    case CspSolver::Status::kBudget:
      return Validity::kUnknownAtRadius;
  }
  return Validity::kUnknownAtRadius;
}

bool sft_occurs_at(const Pattern& forbidden, const GroupCtx& group, const GroupElem& g, const Configuration& x) {
  for (const auto& [f, s] : forbidden.cells) {
    if (x.at(group.mul(g, f)) != s) return false;
  }
  return true;
}

bool config_valid(const Subshift& x, const Configuration& c) {
  if (!(c.group() == x.group())) throw InputError("configuration is over a different group");
  check_symbols(x, c.entries());
  if (x.kind() == ShiftKind::kFull) return true;
  const GroupCtx& G = x.group();
  if (const LinePresentation* lp = x.line(); lp && G.kind() == GroupKind::kZd && G.dim() == 1) {
    if (c.kind() == ConfigKind::kFinite) {
      if (c.is_zero()) return lp->finite_valid({});
      Int lo = c.entries().begin()->first.nf[0];
      Int hi = c.entries().rbegin()->first.nf[0];
      std::vector<Sym> w;
      for (Int i = lo; i <= hi; ++i) w.push_back(c.at(GroupElem{i}));
      return lp->finite_valid(w);
    }
    Int p = c.quotient()->index();
    std::vector<Sym> w;
    for (Int i = 0; i < p; ++i) w.push_back(c.at(GroupElem{i}));
    return lp->periodic_valid(w);
  }
  if (x.kind() == ShiftKind::kPredicate) return x.oracle()->config_valid(c);
  if (!x.contains_zero_point()) {
    if (c.kind() != ConfigKind::kLatticePeriodic) return false;
    for (const auto& r : c.quotient()->representatives()) {
      for (const auto& f : x.forbidden()) {
        if (sft_occurs_at(f, G, r, c)) return false;
      }
    }
    return true;
  }
  for (const auto& f : x.forbidden()) {
    std::set<GroupElem> tried;
    for (const auto& [s, v] : c.entries()) {
      for (const auto& [d, t] : f.cells) {
        GroupElem g = G.mul(s, G.inv(d));
        if (c.quotient()) g = c.quotient()->project(g);
        if (!tried.insert(g).second) continue;
        if (sft_occurs_at(f, G, g, c)) return false;
      }
    }
  }
  return true;
}

std::vector<GroupElem> sort_domain(const GroupCtx& group, std::vector<GroupElem> domain) {
  std::vector<std::pair<Int, GroupElem>> keyed;
  for (auto& g : domain) keyed.emplace_back(group.norm(g), group.canonical(g));
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());
  std::vector<GroupElem> out;
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

std::vector<Pattern> enumerate_valid_patterns(const Subshift& x, const std::vector<GroupElem>& domain, Int radius,
                                              std::size_t budget) {
  auto dom = sort_domain(x.group(), domain);
  const int k = x.alphabet().size();
  std::vector<Pattern> out;
  std::size_t nodes = 0;
  Pattern cur;
  // depth-first, first cell most significant; restrictions of valid patterns are valid
  std::vector<Sym> val(dom.size(), -1);
  std::size_t depth = 0;
  if (dom.empty()) {
    if (pattern_valid(x, cur, radius) == Validity::kValid) out.push_back(cur);
    return out;
  }
  for (;;) {
    if (val[depth] >= 0) cur.cells.erase(dom[depth]);
    ++val[depth];
    if (val[depth] >= k) {
      val[depth] = -1;
      if (depth == 0) break;
      --depth;
      continue;
    }
    if (++nodes > budget) throw BudgetExceeded("pattern enumeration budget exceeded");
    cur.cells[dom[depth]] = val[depth];
    Validity v = pattern_valid(x, cur, radius);
    if (v == Validity::kInvalid) continue;
    if (depth + 1 == dom.size()) {
      if (v == Validity::kValid) out.push_back(cur);
      continue;
    }
    ++depth;
  }
  return out;
}

}  // namespace symdyn
