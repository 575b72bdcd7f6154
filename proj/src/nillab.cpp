#include "symdyn/nillab.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <map>
#include <set>

#include "symdyn/error.hpp"
#include "symdyn/line.hpp"

namespace symdyn {

namespace {

bool on_line(const GroupCtx& g) { return g.kind() == GroupKind::kZd && g.dim() == 1; }

std::uint64_t checked_pow(std::uint64_t k, std::uint64_t e, std::uint64_t budget, const char* what) {
  std::uint64_t n = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (n > budget / std::max<std::uint64_t>(k, 1)) throw BudgetExceeded(what);
    n *= k;
  }
  if (n > budget) throw BudgetExceeded(what);
  return n;
}

}  // namespace

Mortality mortality(const LocalRule& f, const Configuration& x, Int horizon) {
  if (x.is_zero()) return {true, 0};
  if (on_line(f.group()) && !x.is_periodic()) {
    LineRule lr(f);
    LineWord w = to_line(x);
    for (Int t = 1; t <= horizon; ++t) {
      w = lr.step(w);
      if (w.zero()) return {true, t};
    }
    return {false, horizon};
  }
  Configuration c = x;
  for (Int t = 1; t <= horizon; ++t) {
    c = apply(f, c);
    if (c.is_zero()) return {true, t};
  }
  return {false, horizon};
}

BoundedNilpotency bounded_nilpotency(const LocalRule& f, Int n, std::uint64_t budget) {
  if (!on_line(f.group())) throw InputError("bounded nilpotency is decided for rules on Z");
  if (n < 1) throw InputError("n must be positive");
  LineRule lr(f);
  BoundedNilpotency res;
  res.width = n * (lr.hi() - lr.lo()) + 1;
  res.offset = n * lr.lo();
  const int k = f.symbols();
  const std::size_t width = static_cast<std::size_t>(res.width);
  checked_pow(static_cast<std::uint64_t>(k), width, budget, "bounded nilpotency enumeration too large");
  std::vector<Sym> w(width, 0);
  for (;;) {
    LineWord cur{res.offset, w};
    cur.trim();
    for (Int t = 0; t < n && !cur.zero(); ++t) cur = lr.step(cur);
    if (cur.at(0) != 0) {
      res.all_zero = false;
      res.witness = w;
      return res;
    }
    std::size_t i = width;
    while (i > 0) {
      --i;
      if (++w[i] < k) break;
      w[i] = 0;
      if (i == 0) return res;
    }
    if (width == 0) return res;
  }
}

std::vector<LineWord> enumerate_line_configs(const Subshift& x, Int lo, Int hi, std::uint64_t budget) {
  if (!on_line(x.group())) throw InputError("line enumeration needs a shift on Z");
  const int k = x.alphabet().size();
  const std::size_t len = hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0;
  std::vector<LineWord> out;
  std::vector<Sym> w(len, 0);
  const LinePresentation* lp = x.kind() == ShiftKind::kFull ? nullptr : x.line();
  std::uint64_t nodes = 0;
  auto emit = [&]() {
    LineWord lw{lo, w};
    lw.trim();
    out.push_back(std::move(lw));
    if (out.size() > budget) throw BudgetExceeded("too many configurations to enumerate");
  };
  if (lp) {
    std::function<void(std::size_t, const LinePresentation::StateSet&)> go =
        [&](std::size_t pos, const LinePresentation::StateSet& st) {
          if (pos == len) {
            if ((st & lp->zero_future()).any()) emit();
            return;
          }
          for (Sym s = 0; s < k; ++s) {
            if (++nodes > budget * 4) throw BudgetExceeded("line enumeration budget exceeded");
            auto nx = lp->step(st, s);
            if (nx.none()) continue;
            w[pos] = s;
            go(pos + 1, nx);
          }
          w[pos] = 0;
        };
    go(0, lp->zero_past());
    return out;
  }
  checked_pow(static_cast<std::uint64_t>(k), len, budget, "too many configurations to enumerate");
  for (;;) {
    if (x.kind() == ShiftKind::kFull || config_valid(x, Configuration::word(w, lo))) emit();
    std::size_t i = len;
    bool done = true;
    while (i > 0) {
      --i;
      if (++w[i] < k) {
        done = false;
        break;
      }
      w[i] = 0;
    }
    if (done) break;
  }
  return out;
}

MortalityProfile uniform_mortality_profile(const LocalRule& f, const Subshift& x, Int r_max, Int horizon,
                                           std::uint64_t budget) {
  if (!on_line(f.group()) || !on_line(x.group())) throw InputError("mortality profiles are computed on Z");
  LineRule lr(f);
  MortalityProfile prof;
  prof.horizon = horizon;
  for (Int r = 0; r <= r_max; ++r) {
    ProfileEntry e;
    e.r = r;
    for (auto w : enumerate_line_configs(x, -r, r, budget)) {
      ++e.configs;
      Int t = 0;
      while (!w.zero() && t < horizon) {
        w = lr.step(w);
        ++t;
      }
      if (!w.zero()) ++e.alive;
      else e.max_time = std::max(e.max_time, t);
    }
    prof.entries.push_back(e);
  }
  return prof;
}

// ---- spaceships ----

bool verify_spaceship(const LocalRule& f, const SpaceshipCertificate& c) {
  if (c.x.is_zero() || c.n < 1 || c.x.is_periodic()) return false;
  return iterate(f, c.x, c.n) == c.x.translate(c.g);
}

std::optional<SpaceshipCertificate> spaceship_search(const LocalRule& f, const Subshift& x, Int r, Int horizon,
                                                     std::uint64_t budget) {
  const GroupCtx& G = x.group();
  if (!(f.group() == G)) throw InputError("rule and shift over different groups");
  if (on_line(G)) {
    LineRule lr(f);
    for (const auto& seed : enumerate_line_configs(x, -r, r, budget)) {
      if (seed.zero()) continue;
      std::map<std::vector<Sym>, std::pair<Int, Int>> seen;
      LineWord cur = seed;
      for (Int t = 0; t <= horizon && !cur.zero(); ++t) {
        auto [it, fresh] = seen.emplace(cur.cells, std::make_pair(t, cur.origin));
        if (!fresh) {
          SpaceshipCertificate c{Configuration::word(cur.cells, 0), t - it->second.first,
                                 GroupElem{cur.origin - it->second.second}};
          if (!verify_spaceship(f, c)) throw std::logic_error("spaceship certificate failed to verify");
          return c;
        }
        cur = lr.step(cur);
      }
    }
    return std::nullopt;
  }
  auto canon = [&](const Configuration& c) { return c.translate(G.inv(c.entries().begin()->first)); };
  for (const auto& p : enumerate_valid_patterns(x, G.ball(r), 2, budget)) {
    Configuration seed = Configuration::finite(G, p.cells);
    if (seed.is_zero() || !config_valid(x, seed)) continue;
    std::map<CellMap, Int> seen;
    Configuration cur = seed;
    for (Int t = 0; t <= horizon && !cur.is_zero(); ++t) {
      Configuration cc = canon(cur);
      auto [it, fresh] = seen.emplace(cc.entries(), t);
      if (!fresh) {
        Int n = t - it->second;
        // identity lies in supp(cc), so the translation is some element of supp(y)
        Configuration y = iterate(f, cc, n);
        SpaceshipCertificate c{cc, n, G.identity()};
        for (const auto& [s, val] : y.entries()) {
          if (cc.translate(s) == y) {
            c.g = s;
            break;
          }
        }
        if (!verify_spaceship(f, c)) throw std::logic_error("spaceship certificate failed to verify");
        return c;
      }
      cur = apply(f, cur);
    }
  }
  return std::nullopt;
}

Diagram spacetime_diagram(const LocalRule& f, const Configuration& x, Int steps, Int lo, Int hi) {
  if (!on_line(x.group())) throw InputError("space-time diagrams are drawn for Z");
  Diagram d;
  Configuration cur = x;
  for (Int t = 0; t <= steps; ++t) {
    std::vector<Sym> row;
    for (Int i = lo; i <= hi; ++i) row.push_back(cur.at(GroupElem{i}));
    d.push_back(std::move(row));
    if (t < steps) cur = apply(f, cur);
  }
  return d;
}

std::optional<SpacetimePath> spacetime_path(const Diagram& d, Int jump_bound) {
  std::size_t L = 0;
  std::vector<std::vector<Int>> nz;
  for (const auto& row : d) {
    std::vector<Int> cols;
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) cols.push_back(static_cast<Int>(i));
    if (cols.empty()) break;
    nz.push_back(std::move(cols));
    ++L;
  }
  if (L == 0) return std::nullopt;
  // bottleneck DP: cost[k][j] = least max jump of a path ending at nz[k][j]
  std::vector<std::vector<Int>> cost(L), from(L);
  cost[0].assign(nz[0].size(), 0);
  from[0].assign(nz[0].size(), -1);
  for (std::size_t k = 1; k < L; ++k) {
    cost[k].assign(nz[k].size(), std::numeric_limits<Int>::max());
    from[k].assign(nz[k].size(), -1);
    for (std::size_t j = 0; j < nz[k].size(); ++j) {
      for (std::size_t i = 0; i < nz[k - 1].size(); ++i) {
        Int c = std::max(cost[k - 1][i], std::abs(nz[k][j] - nz[k - 1][i]));
        if (c < cost[k][j]) {
          cost[k][j] = c;
          from[k][j] = static_cast<Int>(i);
        }
      }
    }
  }
  std::size_t best = 0;
  for (std::size_t j = 1; j < cost[L - 1].size(); ++j)
    if (cost[L - 1][j] < cost[L - 1][best]) best = j;
  SpacetimePath p;
  p.jump = cost[L - 1][best];
  if (jump_bound >= 0 && p.jump > jump_bound) return std::nullopt;
  p.column.assign(L, 0);
  Int j = static_cast<Int>(best);
  for (std::size_t k = L; k-- > 0;) {
    p.column[k] = nz[k][static_cast<std::size_t>(j)];
    j = from[k][static_cast<std::size_t>(j)];
  }
  for (std::size_t k = 0; k < L; ++k)
    for (Int c : nz[k]) p.halo = std::max(p.halo, std::abs(c - p.column[k]));
  return p;
}

// ---- finite systems ----

FiniteSystemReport finite_system_checks(const LocalRule& f, const QuotientCtx& q,
                                        const std::vector<GroupElem>& eps_window, std::size_t state_budget) {
  if (!(f.group() == q.base())) throw InputError("quotient over a different group");
  if (!q.finite_index()) throw InputError("finite-system checks need a finite quotient");
  auto reps = q.representatives();
  const std::size_t R = reps.size();
  const int k = f.symbols();
  FiniteSystemReport rep;
  rep.states = static_cast<std::size_t>(checked_pow(static_cast<std::uint64_t>(k), R, state_budget,
                                                    "finite state space too large"));
  LocalRule g = induced_periodic_rule(f, q);
  const GroupCtx& Q = q.group();
  std::map<GroupElem, std::size_t> pos;
  for (std::size_t i = 0; i < R; ++i) pos[reps[i]] = i;
  std::vector<std::vector<std::size_t>> nb(R);
  for (std::size_t i = 0; i < R; ++i)
    for (const auto& n : g.neighborhood()) nb[i].push_back(pos.at(Q.canonical(Q.mul(reps[i], n))));
  std::vector<std::size_t> win;
  for (const auto& e : eps_window) win.push_back(pos.at(q.project(e)));
  std::vector<std::size_t> pw(R + 1, 1);
  for (std::size_t i = 1; i <= R; ++i) pw[i] = pw[i - 1] * static_cast<std::size_t>(k);
  const std::size_t S = rep.states;
  std::vector<std::uint32_t> succ(S);
  std::vector<Sym> v(R), o(R);
  for (std::size_t s = 0; s < S; ++s) {
    std::size_t t = s;
    for (std::size_t i = 0; i < R; ++i) {
      v[i] = static_cast<Sym>(t % static_cast<std::size_t>(k));
      t /= static_cast<std::size_t>(k);
    }
    std::size_t out = 0;
    for (std::size_t i = 0; i < R; ++i) {
      std::size_t idx = 0;
      for (std::size_t j : nb[i]) idx = idx * static_cast<std::size_t>(k) + static_cast<std::size_t>(v[j]);
      out += pw[i] * static_cast<std::size_t>(g.eval_index(idx));
    }
    succ[s] = static_cast<std::uint32_t>(out);
  }
  std::vector<std::vector<std::uint32_t>> pred(S);
  for (std::size_t s = 0; s < S; ++s) pred[succ[s]].push_back(static_cast<std::uint32_t>(s));
  auto first_hit = [&](const std::function<bool(std::size_t)>& target) {
    std::vector<Int> dist(S, -1);
    std::deque<std::size_t> dq;
    for (std::size_t s = 0; s < S; ++s)
      if (target(s)) {
        dist[s] = 0;
        dq.push_back(s);
      }
    while (!dq.empty()) {
      std::size_t s = dq.front();
      dq.pop_front();
      for (auto p : pred[s]) {
        if (dist[p] < 0) {
          dist[p] = dist[s] + 1;
          dq.push_back(p);
        }
      }
    }
    return dist;
  };
  auto to_zero = first_hit([](std::size_t s) { return s == 0; });
  rep.weak_nilpotent = std::all_of(to_zero.begin(), to_zero.end(), [](Int d) { return d >= 0; });
  auto zero_on_window = [&](std::size_t s) {
    for (std::size_t i : win)
      if ((s / pw[i]) % static_cast<std::size_t>(k) != 0) return false;
    return true;
  };
  auto holes = first_hit(zero_on_window);
  rep.holes_bound = 0;
  for (Int d : holes) {
    if (d < 0) {
      rep.holes_bound = -1;
      break;
    }
    rep.holes_bound = std::max(rep.holes_bound, d);
  }
  // image iteration
  std::vector<char> in(S, 1), nx(S);
  std::size_t count = S;
  for (Int t = 0;; ++t) {
    if (count == 1 && in[0]) {
      rep.nilpotent = true;
      rep.nilpotency_bound = t;
      break;
    }
    std::fill(nx.begin(), nx.end(), 0);
    std::size_t c2 = 0;
    for (std::size_t s = 0; s < S; ++s)
      if (in[s] && !nx[succ[s]]) {
        nx[succ[s]] = 1;
        ++c2;
      }
    if (c2 == count) break;  // images only shrink; equal size means a fixed image set
    in.swap(nx);
    count = c2;
  }
  rep.agree = rep.weak_nilpotent == rep.nilpotent;
  if (!rep.weak_nilpotent) {
    std::size_t s = 0;
    while (to_zero[s] >= 0) ++s;
    std::map<std::size_t, Int> seen;
    Int t = 0;
    while (!seen.count(s)) {
      seen[s] = t++;
      s = succ[s];
    }
    rep.period = t - seen[s];
    CellMap cells;
    std::size_t u = s;
    for (std::size_t i = 0; i < R; ++i) {
      Sym val = static_cast<Sym>(u % static_cast<std::size_t>(k));
      u /= static_cast<std::size_t>(k);
      if (val != 0) cells[reps[i]] = val;
    }
    rep.recurrent = Configuration::periodic(q, cells);
  }
  return rep;
}

Fraction trace_zero_density(const LocalRule& f, const Configuration& x, const GroupElem& g, Int horizon) {
  if (horizon < 1) throw InputError("horizon must be at least 1");
  auto tr = orbit_trace(f, x, g, horizon - 1);
  Fraction fr{0, horizon};
  for (Sym s : tr.symbols)
    if (s == 0) ++fr.num;
  return fr;
}

// ---- verdicts ----

std::string to_string(NilpotencyVerdict::Kind k) {
  switch (k) {
    case NilpotencyVerdict::Kind::kNilpotent:
      return "Nilpotent";
    case NilpotencyVerdict::Kind::kNotNilpotent:
      return "NotNilpotent";
    case NilpotencyVerdict::Kind::kUnknown:
      return "Unknown";
  }
  return "Unknown";
}

NilpotencyVerdict classify(const LocalRule& f, const Subshift& x, const ClassifyOptions& opt) {
  const GroupCtx& G = x.group();
  NilpotencyVerdict v;
  v.horizon = opt.horizon;
  if (on_line(G)) {
    for (Int n = 1; n <= opt.max_steps; ++n) {
      try {
        if (bounded_nilpotency(f, n).all_zero) {
          v.kind = NilpotencyVerdict::Kind::kNilpotent;
          v.n = n;
          v.scope = "f^" + std::to_string(n) + " is the zero map on the full shift";
          return v;
        }
      } catch (const BudgetExceeded&) {
        break;
      }
    }
  }
  try {
    if (auto c = spaceship_search(f, x, opt.radius, opt.horizon)) {
      v.kind = NilpotencyVerdict::Kind::kNotNilpotent;
      v.spaceship = c;
      v.scope = "spaceship with support radius <= " + std::to_string(opt.radius);
      return v;
    }
  } catch (const BudgetExceeded&) {
  }
  if (G.kind() == GroupKind::kZd) {
    for (Int p = 1; p <= opt.ring_max; ++p) {
      try {
        auto q = QuotientCtx::moduli(std::vector<Int>(static_cast<std::size_t>(G.dim()), p));
        auto rep = finite_system_checks(f, q, {}, 1u << 20);
        if (rep.recurrent && config_valid(x, *rep.recurrent)) {
          v.kind = NilpotencyVerdict::Kind::kNotNilpotent;
          v.recurrent = rep.recurrent;
          v.period = rep.period;
          v.scope = "nonzero periodic orbit with period lattice " + std::to_string(p) + "Z^d";
          return v;
        }
      } catch (const BudgetExceeded&) {
        break;
      }
    }
  }
  v.kind = NilpotencyVerdict::Kind::kUnknown;
  v.scope = "evidence at scale (r=" + std::to_string(opt.radius) + ", T=" + std::to_string(opt.horizon) + ")";
  return v;
}

}  // namespace symdyn
