#include "symdyn/ca.hpp"

#include <algorithm>
#include <set>

#include "symdyn/error.hpp"

namespace symdyn {

namespace {

std::size_t table_len(int k, std::size_t m, std::size_t budget) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < m; ++i) {
    n *= static_cast<std::size_t>(k);
    if (n > budget) throw BudgetExceeded("rule table exceeds " + std::to_string(budget) + " entries");
  }
  return n;
}

}  // namespace

LocalRule::LocalRule(const GroupCtx& group, const Alphabet& alphabet, std::vector<GroupElem> neighborhood,
                     std::vector<Sym> table)
    : group_(group), alphabet_(alphabet), nbhd_(std::move(neighborhood)), table_(std::move(table)) {
  for (auto& n : nbhd_) n = group_.canonical(n);
  std::set<GroupElem> uniq(nbhd_.begin(), nbhd_.end());
  if (uniq.size() != nbhd_.size()) throw InputError("neighborhood has repeated elements");
  std::size_t expect = table_len(alphabet_.size(), nbhd_.size(), std::size_t{1} << 26);
  if (table_.size() != expect) throw InputError("rule table is not total over the neighborhood");
  for (Sym s : table_) {
    if (s < 0 || s >= alphabet_.size()) throw InputError("rule table value outside alphabet");
  }
  if (table_[0] != 0) throw InputError("rule is not quiescent");
}

LocalRule LocalRule::from_function(const GroupCtx& group, const Alphabet& alphabet,
                                   std::vector<GroupElem> neighborhood,
                                   const std::function<Sym(const std::vector<Sym>&)>& fn, std::size_t budget) {
  const int k = alphabet.size();
  std::size_t n = table_len(k, neighborhood.size(), budget);
  std::vector<Sym> table(n);
  std::vector<Sym> vals(neighborhood.size(), 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    table[idx] = fn(vals);
    for (std::size_t i = vals.size(); i-- > 0;) {
      if (++vals[i] < k) break;
      vals[i] = 0;
    }
  }
  return LocalRule(group, alphabet, std::move(neighborhood), std::move(table));
}

Sym LocalRule::eval(const std::vector<Sym>& values) const {
  std::size_t idx = 0;
  for (Sym s : values) idx = idx * static_cast<std::size_t>(symbols()) + static_cast<std::size_t>(s);
  return table_.at(idx);
}

std::vector<Sym> LocalRule::decode(std::size_t idx) const {
  std::vector<Sym> v(nbhd_.size());
  for (std::size_t i = v.size(); i-- > 0;) {
    v[i] = static_cast<Sym>(idx % static_cast<std::size_t>(symbols()));
    idx /= static_cast<std::size_t>(symbols());
  }
  return v;
}

LocalRule zero_rule(const GroupCtx& group, const Alphabet& alphabet) {
  LocalRule r(group, alphabet, {}, {0});
  r.formula = "zero";
  return r;
}

LocalRule identity_rule(const GroupCtx& group, const Alphabet& alphabet) {
  std::vector<Sym> t(static_cast<std::size_t>(alphabet.size()));
  for (Sym s = 0; s < alphabet.size(); ++s) t[s] = s;
  LocalRule r(group, alphabet, {group.identity()}, t);
  r.formula = "identity";
  return r;
}

LocalRule shift_rule(const GroupCtx& group, const Alphabet& alphabet, const GroupElem& t) {
  std::vector<Sym> tab(static_cast<std::size_t>(alphabet.size()));
  for (Sym s = 0; s < alphabet.size(); ++s) tab[s] = s;
  LocalRule r(group, alphabet, {group.inv(t)}, tab);
  r.formula = "shift";
  return r;
}

LocalRule min_rule() {
  LocalRule r = LocalRule::from_function(GroupCtx::zd(1), Alphabet::range(2), {GroupElem{0}, GroupElem{1}},
                                         [](const std::vector<Sym>& v) { return std::min(v[0], v[1]); });
  r.formula = "min";
  return r;
}

Configuration apply(const LocalRule& f, const Configuration& x) {
  const GroupCtx& A = f.group();
  if (!(A == x.group()) && !(A == x.space())) throw InputError("rule and configuration groups differ");
  if (!(f.alphabet().size() >= 1)) throw InputError("empty alphabet");
  for (const auto& [g, s] : x.entries()) {
    if (s >= f.symbols()) throw InputError("configuration symbol outside rule alphabet");
  }
  const auto& N = f.neighborhood();
  std::vector<GroupElem> ninv;
  for (const auto& n : N) ninv.push_back(A.inv(n));
  Configuration out(x.space());
  std::set<GroupElem> cand;
  for (const auto& [s, v] : x.entries()) {
    for (const auto& ni : ninv) cand.insert(x.space().canonical(A.mul(s, ni)));
  }
  const std::size_t k = static_cast<std::size_t>(f.symbols());
  for (const auto& c : cand) {
    std::size_t idx = 0;
    for (const auto& n : N) idx = idx * k + static_cast<std::size_t>(x.at(A.mul(c, n)));
    Sym o = f.eval_index(idx);
    if (o != 0) out.set(c, o);
  }
  return out;
}

Configuration iterate(const LocalRule& f, Configuration x, Int n) {
  for (Int i = 0; i < n; ++i) x = apply(f, x);
  return x;
}

LocalRule compose(const LocalRule& f, const LocalRule& g, std::size_t neighborhood_budget) {
  if (!(f.group() == g.group()) || !(f.alphabet() == g.alphabet())) {
    throw InputError("compose needs rules over the same group and alphabet");
  }
  const GroupCtx& G = f.group();
  std::set<GroupElem> nset;
  for (const auto& n : f.neighborhood()) {
    for (const auto& m : g.neighborhood()) nset.insert(G.mul(n, m));
  }
  std::vector<GroupElem> N(nset.begin(), nset.end());
  if (N.size() > neighborhood_budget) {
    throw BudgetExceeded("composed neighborhood has " + std::to_string(N.size()) + " elements");
  }
  // position in N of each n.m
  std::vector<std::vector<std::size_t>> pos(f.neighborhood().size());
  for (std::size_t i = 0; i < f.neighborhood().size(); ++i) {
    for (const auto& m : g.neighborhood()) {
      auto it = std::lower_bound(N.begin(), N.end(), G.mul(f.neighborhood()[i], m));
      pos[i].push_back(static_cast<std::size_t>(it - N.begin()));
    }
  }
  const std::size_t k = static_cast<std::size_t>(f.symbols());
  std::size_t n = table_len(f.symbols(), N.size(), std::size_t{1} << 24);
  std::vector<Sym> table(n);
  std::vector<Sym> vals(N.size(), 0);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t fi = 0;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      std::size_t gi = 0;
      for (std::size_t p : pos[i]) gi = gi * k + static_cast<std::size_t>(vals[p]);
      fi = fi * k + static_cast<std::size_t>(g.eval_index(gi));
    }
    table[idx] = f.eval_index(fi);
    for (std::size_t i = vals.size(); i-- > 0;) {
      if (++vals[i] < static_cast<Sym>(k)) break;
      vals[i] = 0;
    }
  }
  return LocalRule(G, f.alphabet(), std::move(N), std::move(table));
}

LocalRule canonicalize(const LocalRule& f) {
  const std::size_t m = f.neighborhood().size();
  const std::size_t k = static_cast<std::size_t>(f.symbols());
  std::vector<std::size_t> weight(m);
  {
    std::size_t w = 1;
    for (std::size_t i = m; i-- > 0;) {
      weight[i] = w;
      w *= k;
    }
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < m; ++i) {
    bool essential = false;
    for (std::size_t idx = 0; idx < f.table_size() && !essential; ++idx) {
      std::size_t digit = (idx / weight[i]) % k;
      if (digit != 0) continue;
      for (std::size_t s = 1; s < k; ++s) {
        if (f.eval_index(idx + s * weight[i]) != f.eval_index(idx)) {
          essential = true;
          break;
        }
      }
    }
    if (essential) keep.push_back(i);
  }
  std::sort(keep.begin(), keep.end(),
            [&](std::size_t a, std::size_t b) { return f.neighborhood()[a] < f.neighborhood()[b]; });
  std::vector<GroupElem> N;
  for (std::size_t i : keep) N.push_back(f.neighborhood()[i]);
  std::size_t n = table_len(f.symbols(), N.size(), std::size_t{1} << 26);
  std::vector<Sym> table(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t t = idx, full = 0;
    for (std::size_t j = keep.size(); j-- > 0;) {
      full += (t % k) * weight[keep[j]];
      t /= k;
    }
    table[idx] = f.eval_index(full);
  }
  LocalRule r(f.group(), f.alphabet(), std::move(N), std::move(table));
  r.formula = f.formula;
  return r;
}

bool same_function(const LocalRule& f, const LocalRule& g) {
  LocalRule a = canonicalize(f), b = canonicalize(g);
  return a.group() == b.group() && a.alphabet() == b.alphabet() && a.neighborhood() == b.neighborhood() &&
         a.table() == b.table();
}

EquivarianceResult equivariance_check(const LocalRule& f, const std::vector<Sym>& perm) {
  const int k = f.symbols();
  if (static_cast<int>(perm.size()) != k) throw InputError("permutation size differs from alphabet");
  std::vector<char> hit(static_cast<std::size_t>(k), 0);
  for (Sym s : perm) {
    if (s < 0 || s >= k || hit[s]) throw InputError("not a permutation of the alphabet");
    hit[s] = 1;
  }
  if (perm[0] != 0) throw InputError("symbol permutation must fix 0");
  EquivarianceResult res;
  for (std::size_t idx = 0; idx < f.table_size(); ++idx) {
    auto v = f.decode(idx);
    auto pv = v;
    for (auto& s : pv) s = perm[s];
    if (f.eval(pv) != perm[f.eval_index(idx)]) {
      res.commutes = false;
      for (std::size_t i = 0; i < v.size(); ++i) res.witness.cells[f.neighborhood()[i]] = v[i];
      return res;
    }
  }
  return res;
}

EquivarianceResult equivariance_check(const LocalRule& f,
                                      const std::function<GroupElem(const GroupElem&)>& alpha_inv) {
  const GroupCtx& G = f.group();
  std::vector<GroupElem> moved;
  for (const auto& n : f.neighborhood()) moved.push_back(G.canonical(alpha_inv(n)));
  LocalRule h(G, f.alphabet(), moved, f.table());
  EquivarianceResult res;
  if (same_function(f, h)) return res;
  res.commutes = false;
  std::set<GroupElem> u(f.neighborhood().begin(), f.neighborhood().end());
  u.insert(moved.begin(), moved.end());
  std::vector<GroupElem> U(u.begin(), u.end());
  const int k = f.symbols();
  std::vector<Sym> vals(U.size(), 0);
  auto read = [&](const std::vector<GroupElem>& where) {
    std::vector<Sym> out;
    for (const auto& w : where) out.push_back(vals[std::lower_bound(U.begin(), U.end(), w) - U.begin()]);
    return out;
  };
  for (;;) {
    if (f.eval(read(f.neighborhood())) != h.eval(read(moved))) {
      for (std::size_t i = 0; i < U.size(); ++i) res.witness.cells[U[i]] = vals[i];
      return res;
    }
    std::size_t i = vals.size();
    while (i-- > 0) {
      if (++vals[i] < k) break;
      vals[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return res;
}

LocalRule induced_periodic_rule(const LocalRule& f, const QuotientCtx& q) {
  if (!(f.group() == q.base())) throw InputError("quotient is not over the rule's group");
  std::vector<GroupElem> N;
  std::vector<std::size_t> where;
  for (const auto& n : f.neighborhood()) {
    GroupElem p = q.project(n);
    auto it = std::find(N.begin(), N.end(), p);
    if (it == N.end()) {
      where.push_back(N.size());
      N.push_back(p);
    } else {
      where.push_back(static_cast<std::size_t>(it - N.begin()));
    }
  }
  const int k = f.symbols();
  std::size_t n = table_len(k, N.size(), std::size_t{1} << 26);
  std::vector<Sym> table(n);
  std::vector<Sym> small(N.size(), 0), big(f.neighborhood().size());
  for (std::size_t idx = 0; idx < n; ++idx) {
    for (std::size_t i = 0; i < big.size(); ++i) big[i] = small[where[i]];
    table[idx] = f.eval(big);
    for (std::size_t i = small.size(); i-- > 0;) {
      if (++small[i] < k) break;
      small[i] = 0;
    }
  }
  LocalRule r(q.group(), f.alphabet(), std::move(N), std::move(table));
  r.formula = f.formula;
  return r;
}

OrbitTrace orbit_trace(const LocalRule& f, const Configuration& x, const GroupElem& g, Int horizon) {
  if (horizon < 0) throw InputError("horizon must be nonnegative");
  OrbitTrace t{x, g, horizon, {}};
  Configuration cur = x;
  t.symbols.push_back(cur.at(g));
  for (Int m = 0; m < horizon; ++m) {
    cur = apply(f, cur);
    t.symbols.push_back(cur.at(g));
  }
  return t;
}

// ---- line fast path ----

Sym LineWord::at(Int i) const {
  Int j = i - origin;
  if (j < 0 || j >= static_cast<Int>(cells.size())) return 0;
  return cells[static_cast<std::size_t>(j)];
}

void LineWord::trim() {
  std::size_t a = 0;
  while (a < cells.size() && cells[a] == 0) ++a;
  if (a == cells.size()) {
    cells.clear();
    origin = 0;
    return;
  }
  std::size_t b = cells.size();
  while (cells[b - 1] == 0) --b;
  if (a > 0 || b < cells.size()) cells = std::vector<Sym>(cells.begin() + static_cast<std::ptrdiff_t>(a),
                                                         cells.begin() + static_cast<std::ptrdiff_t>(b));
  origin += static_cast<Int>(a);
}

LineRule::LineRule(const LocalRule& f) : table_(f.table()), k_(f.symbols()) {
  if (!(f.group() == GroupCtx::zd(1))) throw InputError("line fast path needs a rule on Z");
  std::size_t w = 1;
  mult_.resize(f.neighborhood().size());
  for (std::size_t i = f.neighborhood().size(); i-- > 0;) {
    mult_[i] = w;
    w *= static_cast<std::size_t>(k_);
  }
  for (const auto& n : f.neighborhood()) offs_.push_back(n.nf[0]);
  if (!offs_.empty()) {
    lo_ = *std::min_element(offs_.begin(), offs_.end());
    hi_ = *std::max_element(offs_.begin(), offs_.end());
  }
}

LineWord LineRule::step(const LineWord& w) const {
  LineWord out;
  if (w.zero() || offs_.empty()) return out;
  Int a = w.origin, b = w.origin + static_cast<Int>(w.cells.size()) - 1;
  out.origin = a - hi_;
  Int len = (b - lo_) - (a - hi_) + 1;
  out.cells.assign(static_cast<std::size_t>(len), 0);
  const Int n = static_cast<Int>(w.cells.size());
  for (Int i = 0; i < len; ++i) {
    Int pos = out.origin + i - w.origin;
    std::size_t idx = 0;
    for (std::size_t j = 0; j < offs_.size(); ++j) {
      Int p = pos + offs_[j];
      if (p >= 0 && p < n) idx += mult_[j] * static_cast<std::size_t>(w.cells[static_cast<std::size_t>(p)]);
    }
    out.cells[static_cast<std::size_t>(i)] = table_[idx];
  }
  out.trim();
  return out;
}

LineWord to_line(const Configuration& x) {
  if (x.is_periodic() || x.group().kind() != GroupKind::kZd || x.group().dim() != 1) {
    throw InputError("line view needs a finite configuration on Z");
  }
  LineWord w;
  if (x.is_zero()) return w;
  w.origin = x.entries().begin()->first.nf[0];
  Int hi = x.entries().rbegin()->first.nf[0];
  w.cells.assign(static_cast<std::size_t>(hi - w.origin + 1), 0);
  for (const auto& [g, s] : x.entries()) w.cells[static_cast<std::size_t>(g.nf[0] - w.origin)] = s;
  return w;
}

Configuration from_line(const LineWord& w) { return Configuration::word(w.cells, w.origin); }

}  // namespace symdyn
