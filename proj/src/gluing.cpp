#include "symdyn/gluing.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <unordered_set>
#include <utility>

#include "symdyn/csp.hpp"
#include "symdyn/error.hpp"
#include "symdyn/line.hpp"

namespace symdyn {

// ---- rectangles ----

std::vector<GroupElem> Rect::cells() const {
  if (!finite()) throw InputError("cannot enumerate an infinite rectangle");
  std::vector<GroupElem> out;
  if (empty()) return out;
  out.reserve(static_cast<std::size_t>((x1 - x0 + 1) * (y1 - y0 + 1)));
  for (Int y = y0; y <= y1; ++y)
    for (Int x = x0; x <= x1; ++x) out.push_back(GroupElem{x, y});
  return out;
}

Rect hull(const Rect& a, const Rect& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return {std::min(a.x0, b.x0), std::max(a.x1, b.x1), std::min(a.y0, b.y0), std::max(a.y1, b.y1)};
}

Rect intersect(const Rect& a, const Rect& b) {
  return {std::max(a.x0, b.x0), std::min(a.x1, b.x1), std::max(a.y0, b.y0), std::min(a.y1, b.y1)};
}

Int distance(const Rect& a, const Rect& b) {
  Int gx = std::max<Int>({0, b.x0 - a.x1, a.x0 - b.x1});
  Int gy = std::max<Int>({0, b.y0 - a.y1, a.y0 - b.y1});
  return std::max(gx, gy);
}

Rect bounding_rect(const std::vector<GroupElem>& cells) {
  Rect r;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    Int x = cells[i].nf.at(0), y = cells[i].nf.at(1);
    if (i == 0) r = {x, x, y, y};
    else r = hull(r, {x, x, y, y});
  }
  return r;
}

Region Region::finite(const std::vector<GroupElem>& cells) {
  Region r;
  r.kind = Kind::kFinite;
  r.cells.insert(cells.begin(), cells.end());
  if (r.cells.size() != cells.size()) throw InputError("finite region lists a cell twice");
  return r;
}

Region Region::complement() {
  Region r;
  r.kind = Kind::kComplement;
  return r;
}

Region Region::rectangle(const Rect& rect) {
  Region r;
  r.kind = Kind::kRect;
  r.rect = rect;
  return r;
}

// ---- designations ----

namespace {

bool in_own(const Region& r, const GroupElem& g) {
  switch (r.kind) {
    case Region::Kind::kFinite:
      return r.cells.count(g) > 0;
    case Region::Kind::kRect:
      return g.nf.size() == 2 && r.rect.contains(g);
    case Region::Kind::kComplement:
      return false;
  }
  return false;
}

bool in_region(const Designation& d, std::size_t i, const GroupElem& g) {
  const Region& r = d.pieces[i].region;
  if (r.kind != Region::Kind::kComplement) return in_own(r, g);
  for (std::size_t j = 0; j < d.pieces.size(); ++j) {
    if (j != i && in_own(d.pieces[j].region, g)) return false;
  }
  return true;
}

bool in_any(const Designation& d, const GroupElem& g) {
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    if (in_region(d, i, g)) return true;
  }
  return false;
}

std::vector<GroupElem> collar_of(const Designation& d, const GroupCtx& G) {
  if (d.collar.empty()) return {G.identity()};
  std::vector<GroupElem> e;
  for (const auto& g : d.collar) e.push_back(G.canonical(g));
  return e;
}

GroupElem shift_elem(const GroupCtx& G, Int s) {
  GroupElem g = G.identity();
  if (s != 0) g.nf.at(0) = s;
  return g;
}

// Nonzero cells of (shift . translation . x_i) that lie in A_i.
CellMap content(const Designation& d, std::size_t i, const GroupCtx& G, Int shift) {
  const Piece& p = d.pieces[i];
  if (p.config.is_periodic()) throw InputError("designated pieces must be finitely supported");
  if (!(p.config.group() == G)) throw InputError("piece over a different group");
  GroupElem t = p.translation.nf.empty() ? G.identity() : G.canonical(p.translation);
  t = G.mul(shift_elem(G, shift), t);
  CellMap out;
  for (const auto& [g, s] : p.config.entries()) {
    GroupElem h = G.mul(t, g);
    if (in_region(d, i, h)) out[h] = s;
  }
  return out;
}

bool border_ok(const Designation& d, std::size_t i, const CellMap& c, const std::vector<GroupElem>& E,
               const GroupCtx& G) {
  for (const auto& [s, v] : c) {
    for (const auto& e : E) {
      if (!in_region(d, i, G.mul(e, s))) return false;
    }
  }
  return true;
}

bool rect_meets_finite(const Rect& r, const std::set<GroupElem>& cells) {
  for (const auto& c : cells) {
    if (c.nf.size() == 2 && r.contains(c)) return true;
  }
  return false;
}

std::vector<GroupElem> around(const GroupCtx& G, const std::vector<GroupElem>& cells, Int r) {
  if (G.kind() == GroupKind::kZd && G.dim() == 1) {
    std::vector<Int> xs;
    xs.reserve(cells.size());
    for (const auto& c : cells) xs.push_back(c.nf[0]);
    std::sort(xs.begin(), xs.end());
    std::vector<GroupElem> out;
    Int next = std::numeric_limits<Int>::min();
    for (Int x : xs)
      for (Int i = std::max(next, x - r); i <= x + r; ++i) out.push_back(GroupElem{i}), next = i + 1;
    return out;
  }
  auto b = G.ball(r);
  std::set<GroupElem> uniq(cells.begin(), cells.end());
  std::vector<GroupElem> out;
  const bool flat = G.kind() == GroupKind::kZd;
  for (const auto& c : uniq)
    for (const auto& e : b) {
      if (!flat) {
        out.push_back(G.mul(c, e));
        continue;
      }
      GroupElem g = c;
      for (std::size_t i = 0; i < g.nf.size(); ++i) g.nf[i] += e.nf[i];
      out.push_back(std::move(g));
    }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Int collar_radius(const GroupCtx& G, const std::vector<GroupElem>& E) {
  Int r = 0;
  for (const auto& e : E) r = std::max(r, G.norm(e));
  return r;
}

}  // namespace

std::vector<GroupElem> default_collar(const Subshift& x) {
  return x.group().ball(std::max<Int>(0, x.window() - 1));
}

namespace {

void check_disjoint(const Designation& d, const GroupCtx& G) {
  int complements = 0;
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    const Region& a = d.pieces[i].region;
    if (a.kind == Region::Kind::kComplement) ++complements;
    if (a.kind == Region::Kind::kRect && !G.is_zd_like()) throw InputError("rectangle regions need Z^2");
    for (std::size_t j = i + 1; j < d.pieces.size(); ++j) {
      const Region& b = d.pieces[j].region;
      bool meet = false;
      using K = Region::Kind;
      if (a.kind == K::kFinite && b.kind == K::kFinite) {
        for (const auto& c : a.cells) {
          if (b.cells.count(c)) {
            meet = true;
            break;
          }
        }
      } else if (a.kind == K::kFinite && b.kind == K::kRect) {
        meet = rect_meets_finite(b.rect, a.cells);
      } else if (a.kind == K::kRect && b.kind == K::kFinite) {
        meet = rect_meets_finite(a.rect, b.cells);
      } else if (a.kind == K::kRect && b.kind == K::kRect) {
        meet = !a.rect.empty() && !b.rect.empty() && !intersect(a.rect, b.rect).empty();
      }
      if (meet) {
        throw GluingError(GluingError::Code::kDisjointnessViolation,
                          "regions " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
      }
    }
  }
  if (complements > 1) throw GluingError(GluingError::Code::kDisjointnessViolation, "more than one complement region");
}

GluingError border_error(std::size_t i) {
  return GluingError(GluingError::Code::kBorderNotZero,
                     "piece " + std::to_string(i) + " is nonzero on the border of its region");
}

}  // namespace

void check_designation(const Designation& d, const GroupCtx& G) {
  check_disjoint(d, G);
  auto E = collar_of(d, G);
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    if (!border_ok(d, i, content(d, i, G, 0), E, G)) {
      throw border_error(i);
    }
  }
}

namespace {

struct Attempt {
  CellMap fixed;                 // nonzero designated cells
  std::vector<GroupElem> free;   // collar cells outside every region
  bool ok = true;
  std::size_t bad_piece = 0;
};

Attempt prepare(const Designation& d, const GroupCtx& G, const std::vector<GroupElem>& E,
                const std::vector<Int>& shifts, Int pad) {
  Attempt a;
  bool has_complement = false;
  std::vector<GroupElem> seeds;
  for (std::size_t i = 0; i < d.pieces.size(); ++i) {
    CellMap c = content(d, i, G, shifts[i]);
    if (!border_ok(d, i, c, E, G)) {
      a.ok = false;
      a.bad_piece = i;
      return a;
    }
    for (const auto& [g, s] : c) {
      a.fixed[g] = s;
      seeds.push_back(g);
    }
    const Region& r = d.pieces[i].region;
    if (r.kind == Region::Kind::kComplement) has_complement = true;
    if (r.kind == Region::Kind::kFinite) seeds.insert(seeds.end(), r.cells.begin(), r.cells.end());
  }
  if (has_complement || seeds.empty()) return a;
  Int rad = collar_radius(G, E);
  std::vector<GroupElem> einv;
  for (const auto& e : E) einv.push_back(G.inv(e));
  // Collar cells of infinite rectangles only matter near the designated content.
  bool all_finite = true;
  for (const auto& p : d.pieces) all_finite = all_finite && p.region.kind == Region::Kind::kFinite;
  if (all_finite) {
    // every region is finite: the free cells are E A \ A
    std::set<GroupElem> near;
    for (const auto& p : d.pieces)
      for (const auto& g : p.region.cells)
        for (const auto& e : E) near.insert(G.mul(e, g));
    for (const auto& c : near)
      if (!in_any(d, c)) a.free.push_back(c);
    return a;
  }
  std::vector<GroupElem> zone = around(G, seeds, rad + pad);
  for (const auto& c : zone) {
    if (in_any(d, c)) continue;
    bool near = false;
    for (const auto& ei : einv) {
      GroupElem g = G.mul(ei, c);
      for (std::size_t i = 0; i < d.pieces.size() && !near; ++i) near = in_region(d, i, g);
      if (near) break;
    }
    if (near) a.free.push_back(c);
  }
  return a;
}

bool next_choice(std::vector<Int>& v, Int gamma) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i] < gamma) {
      ++v[i];
      return true;
    }
    v[i] = 0;
  }
  return false;
}

// Exact search over the free cells of a line configuration, leftmost cell first.
std::optional<CellMap> fill_line(const LinePresentation& lp, const CellMap& fixed,
                                 const std::vector<GroupElem>& free, int k, std::uint64_t budget) {
  if (fixed.empty() && free.empty()) {
    if (lp.finite_valid({})) return CellMap{};
    return std::nullopt;
  }
  Int lo = kInf, hi = -kInf;
  for (const auto& [g, s] : fixed) lo = std::min(lo, g.nf[0]), hi = std::max(hi, g.nf[0]);
  for (const auto& g : free) lo = std::min(lo, g.nf[0]), hi = std::max(hi, g.nf[0]);
  const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
  std::vector<Sym> w(n, 0);
  std::vector<char> is_free(n, 0);
  for (const auto& [g, s] : fixed) w[static_cast<std::size_t>(g.nf[0] - lo)] = s;
  for (const auto& g : free) is_free[static_cast<std::size_t>(g.nf[0] - lo)] = 1;
  std::uint64_t nodes = 0;
  std::function<bool(std::size_t, LinePresentation::StateSet)> go = [&](std::size_t pos,
                                                                         LinePresentation::StateSet st) {
    while (pos < n && !is_free[pos]) {
      st = lp.step(st, w[pos]);
      if (st.none()) return false;
      ++pos;
    }
    if (pos == n) return (st & lp.zero_future()).any();
    for (Sym s = 0; s < k; ++s) {
      if (++nodes > budget) throw BudgetExceeded("line gluing search budget exceeded");
      auto nx = lp.step(st, s);
      if (nx.none()) continue;
      w[pos] = s;
      if (go(pos + 1, std::move(nx))) return true;
    }
    w[pos] = 0;
    return false;
  };
  if (!go(0, lp.zero_past())) return std::nullopt;
  CellMap out;
  for (std::size_t i = 0; i < n; ++i)
    if (w[i] != 0) out[GroupElem{lo + static_cast<Int>(i)}] = w[i];
  return out;
}

}  // namespace

Realization realize(const Designation& d, const Subshift& x, GlueMode mode, Int gamma, std::uint64_t budget) {
  const GroupCtx& G = x.group();
  if (gamma < 0) throw InputError("gamma must be nonnegative");
  if (gamma > 0 && !G.is_zd_like()) throw InputError("translation gluing needs Z^d");
  switch (mode) {
    case GlueMode::kSuperpose:
      if (x.kind() != ShiftKind::kFull) {
        throw GluingError(GluingError::Code::kModeNotAdmissible, "superposition needs a full shift");
      }
      break;
    case GlueMode::kSynchronizing1D:
      if (G.kind() != GroupKind::kZd || G.dim() != 1 || !x.line()) {
        throw GluingError(GluingError::Code::kModeNotAdmissible, "line gluing needs a shift on Z with a presentation");
      }
      break;
    case GlueMode::kBlockGlue2D:
      if (!(G == GroupCtx::zd(2))) {
        throw GluingError(GluingError::Code::kModeNotAdmissible, "block gluing needs a shift on Z^2");
      }
      break;
  }
  check_disjoint(d, G);
  auto E = collar_of(d, G);
  const int k = x.alphabet().size();
  const Int w = std::max<Int>(1, x.window());
  std::vector<Int> shifts(d.pieces.size(), 0);
  bool first = true;
  do {
    Attempt a = prepare(d, G, E, shifts, w);
    if (first && !a.ok) throw border_error(a.bad_piece);
    first = false;
    if (!a.ok) continue;
    Configuration y(G);
    if (mode == GlueMode::kSuperpose) {
      for (const auto& [g, s] : a.fixed) y.set(g, s);
      return {y, shifts};
    }
    if (mode == GlueMode::kSynchronizing1D) {
      auto free = a.free;
      std::sort(free.begin(), free.end());
      auto filled = fill_line(*x.line(), a.fixed, free, k, budget);
      if (!filled) continue;
      // fill_line reads the whole word through the presentation, zero past to zero future
      return {Configuration::finite(G, *filled), shifts};
    }
    if (x.kind() == ShiftKind::kSft) {
      std::vector<GroupElem> nz;
      for (const auto& [g, s] : a.fixed) nz.push_back(g);
      std::set<GroupElem> free_set(a.free.begin(), a.free.end());
      CellMap fixed;
      for (const auto& c : around(G, nz, w - 1)) {
        if (free_set.count(c)) continue;
        auto it = a.fixed.find(c);
        fixed[c] = it == a.fixed.end() ? 0 : it->second;
      }
      auto res = complete_pattern(G, k, x.forbidden(), fixed, row_major(a.free), budget);
      if (res.status == CspSolver::Status::kBudget) throw BudgetExceeded("block gluing search budget exceeded");
      if (res.status != CspSolver::Status::kSolved) continue;
      for (const auto& [g, s] : res.cells) y.set(g, s);
    } else {
      for (const auto& [g, s] : a.fixed) y.set(g, s);
    }
    if (!config_valid(x, y)) continue;
    return {y, shifts};
  } while (next_choice(shifts, gamma));
  throw GluingError(GluingError::Code::kGluingFailed, "no realization with the allowed translations");
}

// ---- synchronizing radius ----

namespace {

std::string key_of(const LinePresentation::StateSet& s) {
  std::string k;
  boost::to_string(s, k);
  return k;
}

// Is every word readable from p also readable from q (q a subset of p)?
bool same_language(const LinePresentation& lp, const LinePresentation::StateSet& p,
                   const LinePresentation::StateSet& q) {
  std::unordered_set<std::string> seen;
  std::vector<std::pair<LinePresentation::StateSet, LinePresentation::StateSet>> stack{{p, q}};
  seen.insert(key_of(p) + "|" + key_of(q));
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    for (Sym s = 0; s < lp.symbols(); ++s) {
      auto a2 = lp.step(a, s);
      if (a2.none()) continue;
      auto b2 = lp.step(b, s);
      if (b2.none()) return false;
      if (seen.insert(key_of(a2) + "|" + key_of(b2)).second) stack.emplace_back(a2, b2);
    }
  }
  return true;
}

}  // namespace

Int synchronizing_radius(const Subshift& x) {
  if (!(x.group() == GroupCtx::zd(1))) throw InputError("synchronizing radius needs a shift on Z");
  if (x.kind() == ShiftKind::kFull) return 0;
  const LinePresentation* lp = x.line();
  if (!lp) throw InputError("shift has no line presentation");
  if (lp->zero_past().none() || !(lp->zero_past() & lp->zero_future()).any()) {
    throw InputError("the zero configuration is not in the shift");
  }
  // subsets reachable from the full state set
  std::vector<LinePresentation::StateSet> reach{lp->all()};
  std::unordered_set<std::string> seen{key_of(lp->all())};
  for (std::size_t i = 0; i < reach.size(); ++i) {
    for (Sym s = 0; s < lp->symbols(); ++s) {
      auto n = lp->step(reach[i], s);
      if (n.none()) continue;
      if (seen.insert(key_of(n)).second) reach.push_back(n);
    }
  }
  const Int cap = 2 * static_cast<Int>(lp->states()) + 2;
  std::vector<LinePresentation::StateSet> cur = reach;
  LinePresentation::StateSet t0 = lp->all();
  for (Int r = 0; r <= cap; ++r) {
    bool ok = true;
    for (const auto& b : cur) {
      if (b.none()) continue;
      if (!same_language(*lp, t0, b)) {
        ok = false;
        break;
      }
    }
    if (ok) return r;
    for (auto& b : cur) b = lp->step(b, 0);
    t0 = lp->step(t0, 0);
  }
  throw GluingError(GluingError::Code::kModeNotAdmissible, "no power of 0 is synchronizing");
}

// ---- block gluing ----

namespace {

struct BlockClass {
  Pattern p;
  std::uint64_t mask = 0;
};

bool locally_clean(const Subshift& x, const CellMap& cells) {
  if (x.kind() == ShiftKind::kFull) return true;
  auto res = complete_pattern(x.group(), x.alphabet().size(), x.forbidden(), cells, {});
  return res.status == CspSolver::Status::kSolved;
}

std::vector<BlockClass> block_classes(const Subshift& x, Int n, Int w) {
  const GroupCtx& G = x.group();
  Rect sq{0, n - 1, 0, n - 1};
  auto dom = sq.cells();
  auto pats = enumerate_valid_patterns(x, dom, w);
  std::vector<GroupElem> ring;
  for (const auto& c : dom) {
    Int depth = std::min({c.nf[0], c.nf[1], n - 1 - c.nf[0], n - 1 - c.nf[1]});
    if (depth < w - 1) ring.push_back(c);
  }
  std::map<std::vector<Sym>, std::size_t> seen;
  std::vector<BlockClass> out;
  const int k = x.alphabet().size();
  std::vector<bool> const_ok(static_cast<std::size_t>(k));
  for (Sym s = 0; s < k; ++s) {
    CellMap cells;
    for (const auto& c : Rect{0, w, 0, w}.cells()) cells[c] = s;
    const_ok[s] = locally_clean(x, cells);
  }
  auto halo = around(G, dom, w - 1);
  for (auto& p : pats) {
    std::vector<Sym> key;
    for (const auto& c : ring) key.push_back(p.cells.at(c));
    if (!seen.emplace(key, out.size()).second) continue;
    BlockClass bc{p, 0};
    for (Sym s = 0; s < k; ++s) {
      if (!const_ok[s]) continue;
      CellMap cells;
      for (const auto& c : halo) {
        auto it = p.cells.find(c);
        cells[c] = it == p.cells.end() ? s : it->second;
      }
      if (locally_clean(x, cells)) bc.mask |= 1ULL << s;
    }
    out.push_back(std::move(bc));
  }
  return out;
}

}  // namespace

BlockGluingResult verify_block_gluing(const Subshift& x, Int R, Int n_max, std::uint64_t budget) {
  const GroupCtx& G = x.group();
  if (!(G == GroupCtx::zd(2))) throw InputError("block gluing is checked on Z^2");
  if (x.kind() == ShiftKind::kPredicate) throw InputError("block gluing is checked for SFTs");
  const Int w = std::max<Int>(1, x.window());
  const int k = x.alphabet().size();
  BlockGluingResult res;
  res.n_max = n_max;
  std::vector<std::vector<BlockClass>> classes(static_cast<std::size_t>(n_max + 1));
  for (Int n = 1; n <= n_max; ++n) {
    classes[n] = block_classes(x, n, w);
    res.classes += static_cast<Int>(classes[n].size());
  }
  const Int dlo = std::max<Int>(R, 1), dhi = dlo + w;
  std::uint64_t csp_nodes = 0;
  auto glue_ok = [&](const Pattern& p, const Pattern& q, Int ox, Int oy) {
    CellMap fixed = p.cells;
    for (const auto& [c, s] : q.cells) fixed[GroupElem{c.nf[0] + ox, c.nf[1] + oy}] = s;
    std::vector<GroupElem> cells;
    for (const auto& [c, s] : fixed) cells.push_back(c);
    std::vector<GroupElem> free;
    for (const auto& c : around(G, cells, w)) {
      if (!fixed.count(c)) free.push_back(c);
    }
    auto r = complete_pattern(G, k, x.forbidden(), fixed, row_major(std::move(free)), budget);
    if (r.status == CspSolver::Status::kBudget) throw BudgetExceeded("block gluing pair search budget exceeded");
    ++res.pairs_csp;
    if (res.pairs_csp > 2'000'000 || ++csp_nodes > 2'000'000) {
      throw BudgetExceeded("too many block pairs need constraint search");
    }
    return r.status == CspSolver::Status::kSolved;
  };
  for (Int m = 1; m <= n_max; ++m) {
    for (Int np = 1; np <= m; ++np) {
      for (Int nq = 1; nq <= m; ++nq) {
        if (std::max(np, nq) != m) continue;
        const auto& P = classes[np];
        const auto& Q = classes[nq];
        bool masks_all = true;
        for (const auto& a : P) {
          for (const auto& b : Q) {
            if (!(a.mask & b.mask)) masks_all = false;
          }
        }
        Rect rp{0, np - 1, 0, np - 1};
        for (Int oy = -nq - dhi + 1; oy <= np - 1 + dhi; ++oy) {
          for (Int ox = -nq - dhi + 1; ox <= np - 1 + dhi; ++ox) {
            Rect rq{ox, ox + nq - 1, oy, oy + nq - 1};
            Int d = distance(rp, rq);
            if (d < dlo || d > dhi) continue;
            if (d >= w && masks_all) continue;
            for (const auto& a : P) {
              for (const auto& b : Q) {
                if (d >= w && (a.mask & b.mask)) continue;
                if (!glue_ok(a.p, b.p, ox, oy)) {
                  res.holds = false;
                  res.p = a.p;
                  res.q = b.p;
                  res.offset = GroupElem{ox, oy};
                  res.distance = d;
                  return res;
                }
              }
            }
          }
        }
      }
    }
  }
  return res;
}

// ---- schedules ----

void check_schedule(const GluingSchedule& s) {
  Rect h;
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    const Rect& b = s.entries[i].block;
    if (b.empty()) throw InputError("empty block in schedule");
    if (i > 0) {
      Int d = distance(h, b);
      if (d < s.R) {
        throw GluingError(GluingError::Code::kScheduleDistanceViolation,
                          "block " + std::to_string(i) + " is at distance " + std::to_string(d) +
                              " from the earlier blocks, need " + std::to_string(s.R));
      }
    }
    h = hull(h, b);
  }
}

Pattern ordinal_glue(const GluingSchedule& s, const Subshift& x, const Rect& window, std::uint64_t budget) {
  const GroupCtx& G = x.group();
  if (!(G == GroupCtx::zd(2))) throw InputError("ordinal gluing works on Z^2");
  if (!window.finite()) throw InputError("gluing window must be finite");
  check_schedule(s);
  CellMap fixed;
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    const auto& e = s.entries[i];
    Rect part = intersect(e.block, window);
    if (part.empty()) continue;
    for (const auto& c : part.cells()) {
      Sym v = 0;
      if (e.pattern) {
        auto it = e.pattern->cells.find(c);
        if (it == e.pattern->cells.end()) throw InputError("scheduled pattern does not cover its block");
        v = it->second;
      }
      auto [it, fresh] = fixed.emplace(c, v);
      if (!fresh && it->second != v) {
        throw GluingError(GluingError::Code::kDisjointnessViolation, "scheduled blocks overlap");
      }
    }
  }
  std::vector<GroupElem> free;
  for (const auto& c : window.cells()) {
    if (!fixed.count(c)) free.push_back(c);
  }
  if (x.kind() == ShiftKind::kSft) {
    auto res = complete_pattern(G, x.alphabet().size(), x.forbidden(), fixed, free, budget);
    if (res.status == CspSolver::Status::kBudget) throw BudgetExceeded("ordinal gluing search budget exceeded");
    if (res.status != CspSolver::Status::kSolved) {
      throw GluingError(GluingError::Code::kGluingFailed, "window admits no locally valid filling");
    }
    return Pattern(res.cells);
  }
  Pattern p(fixed);
  for (const auto& c : free) p.cells[c] = 0;
  if (pattern_valid(x, p, 0) == Validity::kInvalid) {
    throw GluingError(GluingError::Code::kGluingFailed, "zero filling of the window is invalid");
  }
  return p;
}

GluingSchedule figure_a(const Pattern& p, Int n, Int R, const Rect& window) {
  GluingSchedule s;
  s.R = R;
  const Int step = n + R - 1;
  auto add = [&](Int k) {
    Rect b{0, n - 1, k * step, k * step + n - 1};
    if (intersect(b, window) != b) return false;
    Pattern q;
    for (const auto& [c, v] : p.cells) q.cells[GroupElem{c.nf[0], c.nf[1] + k * step}] = v;
    s.entries.push_back({b, q});
    return true;
  };
  add(0);
  for (Int k = 1;; ++k) {
    bool up = add(k);
    bool down = add(-k);
    if (!up && !down) break;
  }
  s.entries.push_back({Rect{-kInf, -R, -kInf, kInf}, std::nullopt});
  s.entries.push_back({Rect{n + R - 1, kInf, -kInf, kInf}, std::nullopt});
  return s;
}

GluingSchedule figure_b(const Pattern& q, Int n, Int R) {
  GluingSchedule s;
  s.R = R;
  s.entries.push_back({Rect{0, n - 1, 0, n - 1}, q});
  s.entries.push_back({Rect{0, n - 1, n - 1 + R, kInf}, std::nullopt});
  s.entries.push_back({Rect{0, n - 1, -kInf, -R}, std::nullopt});
  s.entries.push_back({Rect{-kInf, -R, -kInf, kInf}, std::nullopt});
  s.entries.push_back({Rect{n - 1 + R, kInf, -kInf, kInf}, std::nullopt});
  return s;
}

Configuration pigeonhole_periodic(const Pattern& window_pattern, Int block_height, Int copy_period,
                                  const Subshift& x, const std::optional<Pattern>& seed) {
  if (!(x.group() == GroupCtx::zd(2))) throw InputError("pigeonhole periodization works on Z^2");
  if (block_height < 1 || copy_period < 1) throw InputError("slab height and period must be positive");
  Rect win = bounding_rect(window_pattern.domain());
  if (window_pattern.size() != static_cast<std::size_t>((win.x1 - win.x0 + 1) * (win.y1 - win.y0 + 1))) {
    throw InputError("pigeonhole input must be a full rectangle");
  }
  auto row = [&](Int y) {
    std::vector<Sym> r;
    for (Int xx = win.x0; xx <= win.x1; ++xx) r.push_back(window_pattern.cells.at(GroupElem{xx, y}));
    return r;
  };
  std::vector<std::vector<Sym>> rows;
  for (Int y = win.y0; y <= win.y1; ++y) rows.push_back(row(y));
  const Int H = win.y1 - win.y0 + 1;
  for (Int h2 = copy_period; h2 + block_height <= H; ++h2) {
    for (Int h1 = h2 - copy_period; h1 >= 0; h1 -= copy_period) {
      bool same = true;
      for (Int i = 0; i < block_height && same; ++i) same = rows[h1 + i] == rows[h2 + i];
      if (!same) continue;
      Int period = h2 - h1;
      QuotientCtx q = QuotientCtx::from_generators(2, {{0, period}});
      CellMap cells;
      for (Int y = h1; y < h2; ++y) {
        for (Int xx = win.x0; xx <= win.x1; ++xx) {
          Sym v = rows[y][xx - win.x0];
          if (v != 0) cells[GroupElem{xx, win.y0 + y}] = v;
        }
      }
      Configuration z = Configuration::periodic(q, cells);
      if (!config_valid(x, z)) continue;
      if (seed) {
        bool agree = true;
        for (const auto& [c, v] : seed->cells) agree = agree && z.at(c) == v;
        if (!agree) continue;
      }
      return z;
    }
  }
  throw GluingError(GluingError::Code::kNoRepetitionFound, "no repeated slab within the sampled rows");
}

}  // namespace symdyn
