#include "symdyn/line.hpp"

#include <algorithm>

#include "symdyn/error.hpp"

namespace symdyn {

LinePresentation::LinePresentation(int states, int symbols, const std::vector<Edge>& edges) : k_(symbols) {
  if (symbols < 1) throw InputError("presentation needs at least one symbol");
  build(states, edges);
}

void LinePresentation::build(int states, const std::vector<Edge>& edges) {
  // trim to the essential subgraph
  std::vector<char> alive(states, 1);
  for (;;) {
    std::vector<int> in(states, 0), out(states, 0);
    for (const auto& [a, s, b] : edges) {
      if (a < 0 || a >= states || b < 0 || b >= states || s < 0 || s >= k_) {
        throw InputError("presentation edge out of range");
      }
      if (alive[a] && alive[b]) {
        ++out[a];
        ++in[b];
      }
    }
    bool changed = false;
    for (int q = 0; q < states; ++q) {
      if (alive[q] && (in[q] == 0 || out[q] == 0)) {
        alive[q] = 0;
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::vector<int> remap(states, -1);
  n_ = 0;
  for (int q = 0; q < states; ++q) if (alive[q]) remap[q] = n_++;
  edges_.clear();
  for (const auto& [a, s, b] : edges) {
    if (alive[a] && alive[b]) edges_.emplace_back(remap[a], s, remap[b]);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  succ_.assign(static_cast<std::size_t>(n_) * k_, {});
  pred_.assign(static_cast<std::size_t>(n_) * k_, {});
  for (const auto& [a, s, b] : edges_) {
    succ_[static_cast<std::size_t>(a) * k_ + s].push_back(b);
    pred_[static_cast<std::size_t>(b) * k_ + s].push_back(a);
  }
  zero_past_ = all();
  for (;;) {
    StateSet nxt = step(zero_past_, 0) & zero_past_;
    if (nxt == zero_past_) break;
    zero_past_ = nxt;
  }
  zero_future_ = all();
  for (;;) {
    StateSet nxt = back(zero_future_, 0) & zero_future_;
    if (nxt == zero_future_) break;
    zero_future_ = nxt;
  }
}

LinePresentation LinePresentation::de_bruijn(int symbols, const std::vector<Pattern>& forbidden,
                                             std::size_t state_budget) {
  // normalize forbidden patterns to offsets from their leftmost cell
  std::vector<std::vector<std::pair<Int, Sym>>> fs;
  Int w = 2;
  for (const auto& p : forbidden) {
    if (p.empty()) throw InputError("forbidden pattern with empty domain");
    Int lo = p.cells.begin()->first.nf.at(0);
    Int hi = lo;
    for (const auto& [g, s] : p.cells) {
      if (g.nf.size() != 1) throw InputError("forbidden pattern is not on Z");
      lo = std::min(lo, g.nf[0]);
      hi = std::max(hi, g.nf[0]);
    }
    std::vector<std::pair<Int, Sym>> f;
    for (const auto& [g, s] : p.cells) f.emplace_back(g.nf[0] - lo, s);
    fs.push_back(std::move(f));
    w = std::max(w, hi - lo + 1);
  }
  std::size_t n = 1;
  for (Int i = 0; i + 1 < w; ++i) {
    n *= static_cast<std::size_t>(symbols);
    if (n > state_budget) throw BudgetExceeded("de Bruijn presentation too large");
  }
  std::vector<Edge> edges;
  std::vector<Sym> word(static_cast<std::size_t>(w));
  for (std::size_t u = 0; u < n; ++u) {
    // digits of u, most significant first
    std::size_t t = u;
    for (Int i = w - 2; i >= 0; --i) {
      word[static_cast<std::size_t>(i)] = static_cast<Sym>(t % symbols);
      t /= symbols;
    }
    for (Sym a = 0; a < symbols; ++a) {
      word[static_cast<std::size_t>(w - 1)] = a;
      bool ok = true;
      for (const auto& f : fs) {
        Int span = 0;
        for (const auto& [o, s] : f) span = std::max(span, o);
        for (Int sh = 0; sh + span < w && ok; ++sh) {
          bool match = true;
          for (const auto& [o, s] : f) {
            if (word[static_cast<std::size_t>(sh + o)] != s) {
              match = false;
              break;
            }
          }
          if (match) ok = false;
        }
        if (!ok) break;
      }
      if (!ok) continue;
      std::size_t v = (u * symbols + a) % n;
      edges.emplace_back(static_cast<int>(u), a, static_cast<int>(v));
    }
  }
  LinePresentation lp(static_cast<int>(n), symbols, edges);
  lp.window_ = static_cast<int>(w);
  return lp;
}

LinePresentation::StateSet LinePresentation::step(const StateSet& s, Sym a) const {
  StateSet out(n_);
  for (auto q = s.find_first(); q != StateSet::npos; q = s.find_next(q)) {
    for (int r : succ_[q * k_ + a]) out.set(r);
  }
  return out;
}

LinePresentation::StateSet LinePresentation::step_any(const StateSet& s) const {
  StateSet out(n_);
  for (auto q = s.find_first(); q != StateSet::npos; q = s.find_next(q)) {
    for (Sym a = 0; a < k_; ++a) for (int r : succ_[q * k_ + a]) out.set(r);
  }
  return out;
}

LinePresentation::StateSet LinePresentation::back(const StateSet& s, Sym a) const {
  StateSet out(n_);
  for (auto q = s.find_first(); q != StateSet::npos; q = s.find_next(q)) {
    for (int r : pred_[q * k_ + a]) out.set(r);
  }
  return out;
}

bool LinePresentation::word_valid(const std::vector<Sym>& w) const {
  if (n_ == 0) return false;
  StateSet s = all();
  for (Sym a : w) {
    if (a >= k_) return false;
    s = a < 0 ? step_any(s) : step(s, a);
    if (s.none()) return false;
  }
  return true;
}

bool LinePresentation::finite_valid(const std::vector<Sym>& w) const {
  StateSet s = zero_past_;
  for (Sym a : w) {
    if (s.none()) return false;
    if (a >= k_) return false;
    s = a < 0 ? step_any(s) : step(s, a);
  }
  return s.intersects(zero_future_);
}

bool LinePresentation::periodic_valid(const std::vector<Sym>& w) const {
  if (n_ == 0) return false;
  if (w.empty()) return finite_valid({});
  // image of each single state under w, then look for a cycle
  std::vector<StateSet> img(n_);
  for (int q = 0; q < n_; ++q) {
    StateSet s(n_);
    s.set(q);
    for (Sym a : w) {
      if (a < 0 || a >= k_) return false;
      s = step(s, a);
      if (s.none()) break;
    }
    img[q] = s;
  }
  // iterative DFS cycle detection
  std::vector<int> color(n_, 0);
  for (int root = 0; root < n_; ++root) {
    if (color[root]) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, img[root].find_first()}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [q, it] = stack.back();
      if (it == StateSet::npos) {
        color[q] = 2;
        stack.pop_back();
        continue;
      }
      int r = static_cast<int>(it);
      it = img[q].find_next(it);
      if (color[r] == 1) return true;
      if (color[r] == 0) {
        color[r] = 1;
        stack.emplace_back(r, img[r].find_first());
      }
    }
  }
  return false;
}

std::vector<Sym> pattern_word(const Pattern& p, Int& lo) {
  if (p.empty()) {
    lo = 0;
    return {};
  }
  lo = p.cells.begin()->first.nf.at(0);
  Int hi = p.cells.rbegin()->first.nf.at(0);
  std::vector<Sym> w(static_cast<std::size_t>(hi - lo + 1), -1);
  for (const auto& [g, s] : p.cells) w[static_cast<std::size_t>(g.nf[0] - lo)] = s;
  return w;
}

}  // namespace symdyn
