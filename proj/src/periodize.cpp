#include "symdyn/periodize.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <memory>
#include <set>
#include <tuple>

#include "symdyn/error.hpp"

namespace symdyn {

bool fix_membership(const Configuration& x, const QuotientCtx& f) {
  if (!(x.group() == f.base())) throw InputError("period lattice over a different group");
  for (const auto& row : f.lattice().basis()) {
    GroupElem k(row);
    GroupElem kinv = x.group().inv(k);
    if (!(x.translate(k) == x) || !(x.translate(kinv) == x)) return false;
  }
  return true;
}

bool fin_membership(const Configuration& x, const QuotientCtx& q, const std::vector<GroupElem>& e) {
  std::set<GroupElem> allowed;
  for (const auto& g : e) allowed.insert(q.project(g));
  for (const auto& s : k_shadow(x, q)) {
    if (!allowed.count(s)) return false;
  }
  return true;
}

// ---- Loc ----

namespace {

// Stallings graph of a subgroup of F2: folded core graph, base vertex 0.
class StallingsGraph {
 public:
  explicit StallingsGraph(const std::vector<GroupElem>& gens) {
    add_vertex();
    for (const auto& g : gens) {
      int v = 0;
      for (std::size_t i = 0; i < g.nf.size(); ++i) {
        int u = i + 1 == g.nf.size() ? 0 : add_vertex();
        add_edge(v, g.nf[i], u);
        v = u;
      }
    }
    fold();
  }

  bool contains(const GroupElem& w) const {
    int v = 0;
    for (Int t : w.nf) {
      auto it = adj_[v].find(t);
      if (it == adj_[v].end()) return false;
      v = it->second;
    }
    return v == 0;
  }

 private:
  int add_vertex() {
    adj_.emplace_back();
    parent_.push_back(static_cast<int>(parent_.size()));
    return static_cast<int>(adj_.size()) - 1;
  }
  void add_edge(int v, Int t, int u) {
    pending_.emplace_back(v, t, u);
    pending_.emplace_back(u, -t, v);
  }
  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void fold() {
    while (!pending_.empty()) {
      auto [v, t, u] = pending_.back();
      pending_.pop_back();
      v = find(v);
      u = find(u);
      auto it = adj_[v].find(t);
      if (it == adj_[v].end()) {
        adj_[v][t] = u;
        continue;
      }
      int w = find(it->second);
      if (w == u) continue;
      // merge u into w; re-queue u's edges
      parent_[u] = w;
      for (const auto& [s, z] : adj_[u]) pending_.emplace_back(w, s, z);
      adj_[u].clear();
    }
    // canonicalize targets
    std::vector<std::map<Int, int>> out(adj_.size());
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      int r = find(static_cast<int>(v));
      for (const auto& [t, u] : adj_[v]) out[r][t] = find(u);
    }
    if (find(0) != 0) {
      // keep vertex 0 as the base
      int r = find(0);
      std::swap(out[0], out[r]);
      for (auto& m : out)
        for (auto& [t, u] : m) {
          if (u == r) u = 0;
          else if (u == 0) u = r;
        }
    }
    adj_ = std::move(out);
  }

  std::vector<std::map<Int, int>> adj_;
  std::vector<int> parent_;
  std::vector<std::tuple<int, Int, int>> pending_;
};

}  // namespace

bool LocSubsystem::contains(const Configuration& x) const {
  for (const auto& g : support(x)) {
    if (!member(g)) return false;
  }
  return true;
}

std::vector<GroupElem> LocSubsystem::ball(Int r) const {
  std::vector<GroupElem> out{group.identity()};
  std::set<GroupElem> seen{group.identity()};
  std::size_t lo = 0;
  for (Int d = 0; d < r; ++d) {
    std::size_t hi = out.size();
    std::vector<GroupElem> layer;
    for (std::size_t i = lo; i < hi; ++i) {
      for (const auto& s : generators) {
        GroupElem g = group.mul(out[i], s);
        if (seen.insert(g).second) layer.push_back(g);
      }
    }
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
    lo = hi;
  }
  return out;
}

LocSubsystem loc_subsystem(const LocalRule& f, const std::vector<GroupElem>& generators) {
  const GroupCtx& G = f.group();
  std::vector<GroupElem> gens;
  std::set<GroupElem> seen;
  for (const auto& g : generators) {
    for (const auto& h : {G.canonical(g), G.inv(G.canonical(g))}) {
      if (h == G.identity()) continue;
      if (seen.insert(h).second) gens.push_back(h);
    }
  }
  std::function<bool(const GroupElem&)> member;
  if (G.kind() == GroupKind::kZd) {
    std::vector<std::vector<Int>> rows;
    for (const auto& g : gens) rows.push_back(g.nf);
    auto lat = std::make_shared<Lattice>(G.dim(), rows);
    member = [lat](const GroupElem& g) { return lat->contains(g.nf); };
  } else if (G.kind() == GroupKind::kFree2) {
    auto sg = std::make_shared<StallingsGraph>(gens);
    member = [sg](const GroupElem& g) { return sg->contains(g); };
  } else {
    throw InputError("subgroup membership is only available on Z^d and F2");
  }
  LocalRule rule = canonicalize(f);
  for (const auto& n : rule.neighborhood()) {
    if (!member(G.inv(n))) {
      throw InputError("generating set is not suitable: a neighbor of the rule lies outside <F>");
    }
  }
  return LocSubsystem{G, gens, rule, member};
}

// ---- periodization ----

PeriodizeReport periodize(const Configuration& y, const QuotientCtx& k, const Subshift& x,
                          const std::vector<GroupElem>& window) {
  const GroupCtx& G = x.group();
  if (G.kind() != GroupKind::kZd) throw InputError("periodization works on Z^d");
  if (!(y.group() == G) || y.is_periodic()) throw InputError("periodize needs a finite configuration of the shift");
  if (!(k.base() == G)) throw InputError("periodization subgroup over a different group");
  if (!x.zero_gluing_collar) {
    throw GluingError(GluingError::Code::kModeNotAdmissible,
                      "shift '" + x.label + "' has no zero-gluing collar; periodization needs one");
  }
  if (!config_valid(x, y)) throw InputError("y is not a point of the shift");
  const Int c = *x.zero_gluing_collar;
  PeriodizeReport rep;
  rep.collar = c;
  auto W = G.ball(c);
  std::set<GroupElem> E(W.begin(), W.end());
  E.insert(G.identity());
  for (const auto& g : window) E.insert(G.canonical(g));
  std::set<GroupElem> Ep{G.identity()};
  for (const auto& s : support(y))
    for (const auto& w : W) Ep.insert(G.mul(s, w));
  std::set<GroupElem> sum;
  for (const auto& a : E)
    for (const auto& b : Ep) sum.insert(G.mul(a, b));
  std::set<GroupElem> M;
  for (const auto& a : sum)
    for (const auto& b : sum) M.insert(G.mul(a, G.inv(b)));
  rep.m_set.assign(M.begin(), M.end());
  QuotientCtx avoid = sublattice_avoiding(G.dim(), rep.m_set);
  rep.m = avoid.lattice().basis()[0][0];
  std::vector<std::vector<Int>> rows;
  for (const auto& r : k.lattice().basis()) {
    std::vector<Int> v = r;
    for (auto& t : v) t *= rep.m;
    rows.push_back(v);
  }
  QuotientCtx F(Lattice(G.dim(), rows));
  rep.lattice = F;
  rep.avoids_m = true;
  for (const auto& v : rep.m_set) {
    if (v != G.identity() && F.lattice().contains(v.nf)) rep.avoids_m = false;
  }
  rep.z = Configuration::periodic(F, y.entries());
  rep.periodic = fix_membership(rep.z, F);
  rep.window_agrees = true;
  for (const auto& g : window) rep.window_agrees = rep.window_agrees && rep.z.at(g) == y.at(g);
  std::set<GroupElem> N;
  for (const auto& w : W) N.insert(k.project(w));
  N.insert(k.project(G.identity()));
  rep.n_set.assign(N.begin(), N.end());
  std::set<GroupElem> bound;
  for (const auto& s : k_shadow(y, k))
    for (const auto& n : N) bound.insert(k.group().mul(n, s));
  rep.shadow_contained = true;
  for (const auto& s : k_shadow(rep.z, k)) rep.shadow_contained = rep.shadow_contained && bound.count(s) > 0;
  rep.valid = config_valid(x, rep.z);
  return rep;
}

}  // namespace symdyn
