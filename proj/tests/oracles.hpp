#pragma once

// Naive reference computations. Nothing here calls into the library, so the
// tests can compare two independent answers.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

using I = std::int64_t;

// Heisenberg element (a, b, c) as the matrix [[1 a c] [0 1 b] [0 0 1]].
inline std::array<I, 3> heis_mul(const std::array<I, 3>& g, const std::array<I, 3>& h) {
  I m1[3][3] = {{1, g[0], g[2]}, {0, 1, g[1]}, {0, 0, 1}};
  I m2[3][3] = {{1, h[0], h[2]}, {0, 1, h[1]}, {0, 0, 1}};
  I p[3][3] = {};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) p[i][j] += m1[i][k] * m2[k][j];
  return {p[0][1], p[1][2], p[0][2]};
}

// Free reduction on strings over a A b B.
inline std::string free_reduce(const std::string& w) {
  std::string out;
  for (char c : w) {
    char inv = static_cast<char>(std::islower(static_cast<unsigned char>(c)) ? std::toupper(c) : std::tolower(c));
    if (!out.empty() && out.back() == inv)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

inline std::size_t free_ball_size(int r) {
  std::set<std::string> seen{""};
  std::vector<std::string> frontier{""};
  for (int i = 0; i < r; ++i) {
    std::vector<std::string> next;
    for (const auto& w : frontier)
      for (char c : std::string("aAbB")) {
        auto v = free_reduce(w + c);
        if (seen.insert(v).second) next.push_back(v);
      }
    frontier = next;
  }
  return seen.size();
}

// Lamplighter element: cursor and set of lit lamps.
struct Lamp {
  I cursor = 0;
  std::set<I> lamps;
  bool operator<(const Lamp& o) const { return std::tie(cursor, lamps) < std::tie(o.cursor, o.lamps); }
};

inline Lamp lamp_mul(const Lamp& g, const Lamp& h) {
  Lamp out{g.cursor + h.cursor, g.lamps};
  for (I l : h.lamps) {
    I p = l + g.cursor;
    if (!out.lamps.erase(p)) out.lamps.insert(p);
  }
  return out;
}

// Word-length of every element within radius r, generators t, t^-1, a.
inline std::map<Lamp, int> lamp_ball(int r) {
  std::vector<Lamp> gens{{1, {}}, {-1, {}}, {0, {0}}};
  std::map<Lamp, int> dist{{Lamp{}, 0}};
  std::vector<Lamp> frontier{Lamp{}};
  for (int i = 1; i <= r; ++i) {
    std::vector<Lamp> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        Lamp h = lamp_mul(g, s);
        if (dist.emplace(h, i).second) next.push_back(h);
      }
    frontier = next;
  }
  return dist;
}

// v in the lattice spanned by the rows of a 2x2 basis (Cramer's rule).
inline bool in_lattice2(const std::array<std::array<I, 2>, 2>& b, I x, I y) {
  I det = b[0][0] * b[1][1] - b[0][1] * b[1][0];
  // v = s b0 + t b1
  I s = x * b[1][1] - y * b[1][0];
  I t = y * b[0][0] - x * b[0][1];
  return s % det == 0 && t % det == 0;
}

// Dense evaluation of a rule on Z: out[i] = F(w[i + off_1], ..., w[i + off_m]),
// cells outside w read as 0. Returns the image on [lo - pad, hi + pad].
inline std::vector<int> apply_word(const std::function<int(const std::vector<int>&)>& F, const std::vector<I>& offs,
                                   const std::vector<int>& w, I pad) {
  auto at = [&](I i) { return i < 0 || i >= static_cast<I>(w.size()) ? 0 : w[static_cast<std::size_t>(i)]; };
  std::vector<int> out;
  for (I i = -pad; i < static_cast<I>(w.size()) + pad; ++i) {
    std::vector<int> v;
    for (I o : offs) v.push_back(at(i + o));
    out.push_back(F(v));
  }
  return out;
}

// Longest run of 1s: the mortality time of the minimum automaton.
inline int longest_run(const std::vector<int>& w) {
  int best = 0, cur = 0;
  for (int s : w) {
    cur = s ? cur + 1 : 0;
    best = std::max(best, cur);
  }
  return best;
}

inline bool has_factor(const std::vector<int>& w, const std::vector<std::vector<int>>& forbidden) {
  for (const auto& f : forbidden) {
    if (f.size() > w.size()) continue;
    for (std::size_t i = 0; i + f.size() <= w.size(); ++i)
      if (std::equal(f.begin(), f.end(), w.begin() + static_cast<long>(i))) return true;
  }
  return false;
}

// ...0 w 0... contains no 1 0^{odd} 1.
inline bool even_shift_finite(const std::vector<int>& w) {
  I last = -1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i]) continue;
    if (last >= 0 && (static_cast<I>(i) - last - 1) % 2 == 1) return false;
    last = static_cast<I>(i);
  }
  return true;
}

// Binary SFT on Z with forbidden words of length <= 3. Words are validated by
// brute-force extension: a state is a 2-block, kept while it has a successor
// (resp. predecessor) that is also kept.
struct Sft3 {
  std::vector<std::vector<int>> forbidden;
  std::array<bool, 4> fwd{}, back{};

  static int code(int a, int b) { return 2 * a + b; }

  bool allowed3(int a, int b, int c) const { return !has_factor({a, b, c}, forbidden); }
  bool allowed2(int a, int b) const { return !has_factor({a, b}, forbidden); }

  explicit Sft3(std::vector<std::vector<int>> f) : forbidden(std::move(f)) {
    for (int s = 0; s < 4; ++s) fwd[s] = back[s] = allowed2(s >> 1, s & 1);
    for (bool changed = true; changed;) {
      changed = false;
      for (int s = 0; s < 4; ++s) {
        int a = s >> 1, b = s & 1;
        if (fwd[s]) {
          bool ok = false;
          for (int c = 0; c < 2; ++c) ok = ok || (fwd[code(b, c)] && allowed3(a, b, c));
          if (!ok) fwd[s] = false, changed = true;
        }
        if (back[s]) {
          bool ok = false;
          for (int z = 0; z < 2; ++z) ok = ok || (back[code(z, a)] && allowed3(z, a, b));
          if (!ok) back[s] = false, changed = true;
        }
      }
    }
  }

  // w extends to a bi-infinite point.
  bool valid(const std::vector<int>& w) const {
    for (int pre = 0; pre < 4; ++pre)
      for (int suf = 0; suf < 4; ++suf) {
        std::vector<int> s{pre >> 1, pre & 1};
        s.insert(s.end(), w.begin(), w.end());
        s.push_back(suf >> 1);
        s.push_back(suf & 1);
        if (has_factor(s, forbidden)) continue;
        if (back[code(s[0], s[1])] && fwd[code(s[s.size() - 2], s.back())]) return true;
      }
    return false;
  }
};

// Iterate a map on the finite state space {0..n-1}. Returns first-hit times of
// `target` (or -1) for every state.
inline std::vector<I> hit_times(const std::vector<std::size_t>& succ, const std::function<bool(std::size_t)>& target) {
  std::vector<I> out(succ.size(), -1);
  for (std::size_t s = 0; s < succ.size(); ++s) {
    std::size_t x = s;
    for (I t = 0; t <= static_cast<I>(succ.size()); ++t) {
      if (target(x)) {
        out[s] = t;
        break;
      }
      x = succ[x];
    }
  }
  return out;
}

// 4-connected components of a finite set of cells are filled squares.
inline bool components_are_squares(const std::set<std::pair<I, I>>& ones) {
  std::set<std::pair<I, I>> seen;
  for (const auto& start : ones) {
    if (seen.count(start)) continue;
    std::vector<std::pair<I, I>> stack{start}, comp;
    seen.insert(start);
    while (!stack.empty()) {
      auto c = stack.back();
      stack.pop_back();
      comp.push_back(c);
      const std::pair<I, I> nb[4] = {
          {c.first + 1, c.second}, {c.first - 1, c.second}, {c.first, c.second + 1}, {c.first, c.second - 1}};
      for (const auto& n : nb)
        if (ones.count(n) && seen.insert(n).second) stack.push_back(n);
    }
    I x0 = comp[0].first, x1 = x0, y0 = comp[0].second, y1 = y0;
    for (const auto& c : comp) {
      x0 = std::min(x0, c.first), x1 = std::max(x1, c.first);
      y0 = std::min(y0, c.second), y1 = std::max(y1, c.second);
    }
    if (x1 - x0 != y1 - y0) return false;
    if (static_cast<I>(comp.size()) != (x1 - x0 + 1) * (y1 - y0 + 1)) return false;
  }
  return true;
}

}  // namespace oracle
