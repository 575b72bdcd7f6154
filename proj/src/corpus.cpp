#include "symdyn/corpus.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "symdyn/error.hpp"
#include "symdyn/gluing.hpp"
#include "symdyn/line.hpp"
#include "symdyn/nillab.hpp"
#include "symdyn/onepoint.hpp"
#include "symdyn/periodize.hpp"

namespace symdyn {

namespace {

PropertyOutcome outcome(bool pass, std::string observed) { return {pass, std::move(observed)}; }

GroupElem v2(Int x, Int y) { return GroupElem{x, y}; }

Configuration plane(const std::vector<std::pair<GroupElem, Sym>>& cells) {
  CellMap m;
  for (const auto& [g, s] : cells) m[g] = s;
  return Configuration::finite(GroupCtx::zd(2), m);
}

Configuration filled(Int x0, Int y0, Int w, Int h) {
  CellMap m;
  for (Int x = x0; x < x0 + w; ++x)
    for (Int y = y0; y < y0 + h; ++y) m[v2(x, y)] = 1;
  return Configuration::finite(GroupCtx::zd(2), m);
}

std::string word_string(const std::vector<Sym>& w) {
  std::string s;
  for (Sym c : w) s += std::to_string(c);
  return s;
}

// ---- shifts on Z given by a labeled graph ----

class LineOracle : public PredicateOracle {
 public:
  LineOracle(std::string name, LinePresentation lp)
      : name_(std::move(name)), lp_(std::make_shared<LinePresentation>(std::move(lp))) {}
  std::string name() const override { return name_; }
  Exactness exactness() const override { return Exactness::kExact; }
  Validity pattern_valid(const Pattern& p, Int) const override {
    Int lo = 0;
    return lp_->word_valid(pattern_word(p, lo)) ? Validity::kValid : Validity::kInvalid;
  }
  bool config_valid(const Configuration& x) const override {
    if (x.kind() == ConfigKind::kFinite) {
      if (x.is_zero()) return lp_->finite_valid({});
      std::vector<Sym> w;
      for (Int i = x.entries().begin()->first.nf[0]; i <= x.entries().rbegin()->first.nf[0]; ++i)
        w.push_back(x.at(GroupElem{i}));
      return lp_->finite_valid(w);
    }
    std::vector<Sym> w;
    for (Int i = 0; i < x.quotient()->index(); ++i) w.push_back(x.at(GroupElem{i}));
    return lp_->periodic_valid(w);
  }
  Int window() const override { return lp_->window(); }
  const LinePresentation* line() const override { return lp_.get(); }

 private:
  std::string name_;
  std::shared_ptr<const LinePresentation> lp_;
};

// ---- squares ----

class SquaresOracle : public PredicateOracle {
 public:
  std::string name() const override { return "squares"; }
  Exactness exactness() const override { return Exactness::kWindowSound; }
  Int window() const override { return 2; }

  Validity pattern_valid(const Pattern& p, Int) const override {
    const auto& cells = p.cells;
    auto known = [&](const GroupElem& g) { return cells.count(g) > 0; };
    auto one = [&](const GroupElem& g) {
      auto it = cells.find(g);
      return it != cells.end() && it->second == 1;
    };
    std::set<GroupElem> seen;
    for (const auto& [g, s] : cells) {
      if (s != 1 || seen.count(g)) continue;
      Int x0 = g.nf[0], x1 = x0, y0 = g.nf[1], y1 = y0;
      std::deque<GroupElem> dq{g};
      seen.insert(g);
      while (!dq.empty()) {
        GroupElem c = dq.front();
        dq.pop_front();
        x0 = std::min(x0, c.nf[0]);
        x1 = std::max(x1, c.nf[0]);
        y0 = std::min(y0, c.nf[1]);
        y1 = std::max(y1, c.nf[1]);
        for (const auto& n : neighbors(c))
          if (one(n) && seen.insert(n).second) dq.push_back(n);
      }
      for (Int x = x0; x <= x1; ++x)
        for (Int y = y0; y <= y1; ++y)
          if (known(v2(x, y)) && !one(v2(x, y))) return Validity::kInvalid;
      if (!extendable(x0, x1, y0, y1, known, one)) return Validity::kInvalid;
    }
    return Validity::kValid;
  }

  bool config_valid(const Configuration& x) const override {
    const bool periodic = x.is_periodic();
    auto rep = [&](const GroupElem& g) { return periodic ? x.quotient()->project(g) : g; };
    std::set<GroupElem> done;
    for (const auto& [r, s] : x.entries()) {
      if (s != 1 || done.count(r)) continue;
      std::map<GroupElem, GroupElem> first;  // rep -> absolute cell
      std::deque<GroupElem> dq{r};
      first[rep(r)] = r;
      std::size_t count = 0;
      Int x0 = r.nf[0], x1 = x0, y0 = r.nf[1], y1 = y0;
      while (!dq.empty()) {
        GroupElem c = dq.front();
        dq.pop_front();
        ++count;
        x0 = std::min(x0, c.nf[0]);
        x1 = std::max(x1, c.nf[0]);
        y0 = std::min(y0, c.nf[1]);
        y1 = std::max(y1, c.nf[1]);
        for (const auto& n : neighbors(c)) {
          if (x.at(n) != 1) continue;
          auto [it, fresh] = first.emplace(rep(n), n);
          if (fresh) {
            dq.push_back(n);
          } else if (!(it->second == n)) {
            // the component meets a translate of itself, so it is infinite
            return periodic && x.quotient()->finite_index() &&
                   static_cast<Int>(x.entries().size()) == x.quotient()->index();
          }
        }
      }
      for (const auto& [q, c] : first) done.insert(q);
      Int w = x1 - x0 + 1, h = y1 - y0 + 1;
      if (w != h || static_cast<Int>(count) != w * h) return false;
    }
    return true;
  }

 private:
  static std::vector<GroupElem> neighbors(const GroupElem& c) {
    Int x = c.nf[0], y = c.nf[1];
    return {v2(x + 1, y), v2(x - 1, y), v2(x, y + 1), v2(x, y - 1)};
  }

  template <class Known, class One>
  static bool extendable(Int x0, Int x1, Int y0, Int y1, Known known, One one) {
    Int w = x1 - x0 + 1, h = y1 - y0 + 1;
    if (w == h) return true;
    const bool wide = w > h;
    Int need = wide ? w - h : h - w;
    for (Int a = 0; a <= need; ++a) {
      Int b = need - a;
      // grow across the short side: a before, b after
      Int X0 = x0, X1 = x1, Y0 = y0, Y1 = y1;
      if (wide) {
        Y0 -= a;
        Y1 += b;
      } else {
        X0 -= a;
        X1 += b;
      }
      bool ok = true;
      for (Int x = X0; x <= X1 && ok; ++x)
        for (Int y = Y0; y <= Y1 && ok; ++y) {
          bool inside_old = x >= x0 && x <= x1 && y >= y0 && y <= y1;
          if (!inside_old && known(v2(x, y))) ok = false;
        }
      for (Int x = X0; x <= X1 && ok; ++x)
        if (one(v2(x, Y0 - 1)) || one(v2(x, Y1 + 1))) ok = false;
      for (Int y = Y0; y <= Y1 && ok; ++y)
        if (one(v2(X0 - 1, y)) || one(v2(X1 + 1, y))) ok = false;
      if (ok) return true;
    }
    return false;
  }
};

// ---- union of Y and its reversal ----

bool y_word(const std::vector<Sym>& w) {
  std::vector<Int> ones;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) ones.push_back(static_cast<Int>(i));
  if (ones.size() <= 1) return true;
  Int gap = ones[1] - ones[0] - 1;
  for (std::size_t j = 2; j < ones.size(); ++j) {
    Int g = ones[j] - ones[j - 1] - 1;
    if (g != gap + 1) return false;
    gap = g;
  }
  Int trailing = static_cast<Int>(w.size()) - 1 - ones.back();
  return trailing <= gap + 1;
}

class ReversalOracle : public PredicateOracle {
 public:
  std::string name() const override { return "reversal-union"; }
  Exactness exactness() const override { return Exactness::kExact; }
  Int window() const override { return 1; }
  Validity pattern_valid(const Pattern& p, Int) const override {
    Int lo = 0;
    std::vector<Sym> w = pattern_word(p, lo);
    std::vector<std::size_t> holes;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] < 0) holes.push_back(i);
    if (holes.size() > 16) return Validity::kUnknownAtRadius;
    for (std::uint32_t mask = 0; mask < (1u << holes.size()); ++mask) {
      for (std::size_t j = 0; j < holes.size(); ++j) w[holes[j]] = (mask >> j) & 1u;
      if (reversal_union_word(w)) return Validity::kValid;
    }
    return Validity::kInvalid;
  }
  bool config_valid(const Configuration& x) const override {
    if (x.is_periodic()) return x.is_zero();
    return x.entries().size() <= 1;
  }
};

// ---- bundles ----

ExampleBundle min_ca_bundle() {
  ExampleBundle b;
  b.name = "min-ca";
  b.description = "minimum automaton f(x)_i = min(x_i, x_{i+1}) on {0,1}^Z";
  b.group = GroupCtx::zd(1);
  b.shift = Subshift::full(b.group, Alphabet::range(2));
  b.rules.push_back({"min", min_rule()});
  const LocalRule f = min_rule();
  const Subshift X = *b.shift;
  b.properties.push_back({"block of length 5 dies at step 5", "mortality", "Mortal(5)", [f] {
                            auto m = mortality(f, Configuration::word({1, 1, 1, 1, 1}), 64);
                            return outcome(m.mortal && m.time == 5,
                                           m.mortal ? "Mortal(" + std::to_string(m.time) + ")" : "Alive");
                          }});
  b.properties.push_back({"f^4 is not the zero map", "bounded_nilpotency", "No, verified witness", [f] {
                            auto r = bounded_nilpotency(f, 4);
                            if (r.all_zero) return outcome(false, "YesAllZero");
                            auto y = iterate(f, Configuration::word(r.witness, r.offset), 4);
                            return outcome(y.at(GroupElem{0}) != 0, "No, witness " + word_string(r.witness));
                          }});
  b.properties.push_back({"Z_4 ring is not weakly nilpotent", "finite_system_checks", "weak=false via 1111",
                          [f] {
                            auto r = finite_system_checks(f, QuotientCtx::moduli({4}), {GroupElem{0}});
                            bool all_one = r.recurrent && r.recurrent->entries().size() == 4 && r.period == 1;
                            return outcome(!r.weak_nilpotent && !r.nilpotent && r.agree && all_one,
                                           std::string("weak=") + (r.weak_nilpotent ? "true" : "false") +
                                               (all_one ? " fixed 1111" : ""));
                          }});
  b.properties.push_back({"no spaceship up to r=3, T=30", "spaceship_search", "none", [f, X] {
                            auto c = spaceship_search(f, X, 3, 30);
                            return outcome(!c, c ? "certificate found" : "none");
                          }});
  b.properties.push_back({"mortality profile r -> 2r+1", "uniform_mortality_profile", "max_time = 2r+1, r <= 5",
                          [f, X] {
                            auto p = uniform_mortality_profile(f, X, 5, 64);
                            bool ok = true;
                            std::string obs;
                            for (const auto& e : p.entries) {
                              ok = ok && e.alive == 0 && e.max_time == 2 * e.r + 1;
                              obs += (obs.empty() ? "" : ",") + std::to_string(e.max_time);
                            }
                            return outcome(ok, obs);
                          }});
  b.properties.push_back({"zero density of a 6-block at its left end", "trace_zero_density", "14/20", [f] {
                            auto fr = trace_zero_density(f, Configuration::word({1, 1, 1, 1, 1, 1}), GroupElem{0}, 20);
                            return outcome(fr == Fraction{14, 20},
                                           std::to_string(fr.num) + "/" + std::to_string(fr.den));
                          }});
  return b;
}

ExampleBundle spaceship_bundle() {
  ExampleBundle b;
  b.name = "spaceship-sofic";
  b.description = "1s and 2s alternate; the rule moves 1s right and 2s left and erases colliding pairs";
  b.group = GroupCtx::zd(1);
  b.shift = spaceship_shift();
  b.rules.push_back({"spaceship", spaceship_rule()});
  b.symmetries.push_back({"swap", {0, 2, 1}});
  const LocalRule f = spaceship_rule();
  const Subshift X = *b.shift;
  b.properties.push_back({"spaceship within T=3", "spaceship_search", "n=1, |g|=1", [f, X] {
                            auto c = spaceship_search(f, X, 1, 3);
                            if (!c) return outcome(false, "none");
                            return outcome(c->n == 1 && std::abs(c->g.nf[0]) == 1 && verify_spaceship(f, *c),
                                           "n=" + std::to_string(c->n) + " g=" + std::to_string(c->g.nf[0]));
                          }});
  b.properties.push_back({"rule does not commute with the swap", "equivariance_check", "witness", [f] {
                            auto r = equivariance_check(f, std::vector<Sym>{0, 2, 1});
                            return outcome(!r.commutes && !r.witness.empty(),
                                           r.commutes ? "commutes" : "witness of size " +
                                                                         std::to_string(r.witness.size()));
                          }});
  b.properties.push_back({"mortality profile grows with r", "uniform_mortality_profile", "strictly increasing, r=2..6",
                          [f, X] {
                            auto p = uniform_mortality_profile(f, X, 6, 64);
                            bool ok = true;
                            std::string obs;
                            for (std::size_t i = 0; i < p.entries.size(); ++i) {
                              if (i > 2) ok = ok && p.entries[i].max_time > p.entries[i - 1].max_time;
                              obs += (obs.empty() ? "" : ",") + std::to_string(p.entries[i].max_time);
                            }
                            return outcome(ok, obs);
                          }});
  b.properties.push_back({"origin window empties", "mortality", "[-2,2] zero at T=64 for seeds of radius <= 5",
                          [f, X] {
                            LineRule lr(f);
                            std::size_t n = 0;
                            for (auto w : enumerate_line_configs(X, -5, 5)) {
                              for (int t = 0; t < 64; ++t) w = lr.step(w);
                              for (Int i = -2; i <= 2; ++i)
                                if (w.at(i) != 0) return outcome(false, "seed " + std::to_string(n) + " stays");
                              ++n;
                            }
                            return outcome(true, std::to_string(n) + " seeds");
                          }});
  b.properties.push_back({"spaceship on the full shift", "spaceship_search", "certificate", [f] {
                            auto full = Subshift::full(GroupCtx::zd(1), Alphabet::range(3));
                            auto c = spaceship_search(f, full, 1, 3);
                            return outcome(c && verify_spaceship(f, *c), c ? "found" : "none");
                          }});
  return b;
}

ExampleBundle even_bundle() {
  ExampleBundle b;
  b.name = "even-shift";
  b.description = "forbidden words 1 0^{2n+1} 1";
  b.group = GroupCtx::zd(1);
  b.shift = even_shift();
  b.rules.push_back({"identity", identity_rule(b.group, b.shift->alphabet())});
  const Subshift X = *b.shift;
  auto pieces = [] {
    Designation d;
    d.collar = {GroupElem{-1}, GroupElem{0}, GroupElem{1}};
    for (Int p : {Int{0}, Int{5}}) {
      std::vector<GroupElem> region;
      for (Int i = p - 1; i <= p + 3; ++i) region.push_back(GroupElem{i});
      d.pieces.push_back({Region::finite(region), Configuration::word({1, 1}, p), GroupElem{}});
    }
    return d;
  };
  b.properties.push_back({"plain gluing fails on 11 at 0 and 5", "realize", "GluingFailed with gamma=0",
                          [X, pieces] {
                            try {
                              realize(pieces(), X, GlueMode::kSynchronizing1D, 0);
                              return outcome(false, "realized");
                            } catch (const GluingError& e) {
                              return outcome(e.code() == GluingError::Code::kGluingFailed, e.what());
                            }
                          }});
  b.properties.push_back({"one-step translations repair it", "realize", "realized with gamma=1", [X, pieces] {
                            auto r = realize(pieces(), X, GlueMode::kSynchronizing1D, 1);
                            std::string obs = "shifts";
                            for (Int s : r.shifts) obs += " " + std::to_string(s);
                            return outcome(config_valid(X, r.y), obs);
                          }});
  b.properties.push_back({"no synchronizing run of zeros", "synchronizing_radius", "ModeNotAdmissible", [X] {
                            try {
                              Int r = synchronizing_radius(X);
                              return outcome(false, "radius " + std::to_string(r));
                            } catch (const GluingError& e) {
                              return outcome(e.code() == GluingError::Code::kModeNotAdmissible, e.what());
                            }
                          }});
  return b;
}

ExampleBundle squares_bundle() {
  ExampleBundle b;
  b.name = "squares-shift";
  b.description = "4-connected components of 1s are filled squares, with their limits";
  b.group = GroupCtx::zd(2);
  b.shift = squares_shift();
  const Subshift X = *b.shift;
  b.properties.push_back({"membership of small configurations", "config_valid", "square yes, L no, corners yes",
                          [X] {
                            bool sq = config_valid(X, filled(0, 0, 2, 2));
                            bool ell = config_valid(X, plane({{v2(0, 0), 1}, {v2(1, 0), 1}, {v2(0, 1), 1}}));
                            bool corners = config_valid(X, plane({{v2(0, 0), 1}, {v2(1, 1), 1}}));
                            return outcome(sq && !ell && corners, std::string(sq ? "square " : "") +
                                                                      (ell ? "L " : "") + (corners ? "corners" : ""));
                          }});
  b.properties.push_back({"vertical strip is not a point", "config_valid", "false", [X] {
                            auto q = QuotientCtx::moduli({0, 1});
                            auto z = Configuration::periodic(q, {{v2(0, 0), 1}});
                            bool v = config_valid(X, z);
                            return outcome(!v, v ? "valid" : "invalid");
                          }});
  b.properties.push_back({"all-1 plane is a point", "config_valid", "true", [X] {
                            auto z = Configuration::periodic(QuotientCtx::moduli({1, 1}), {{v2(0, 0), 1}});
                            bool v = config_valid(X, z);
                            return outcome(v, v ? "valid" : "invalid");
                          }});
  b.properties.push_back({"periodize a 2x2 square", "periodize", "all checks pass", [X] {
                            auto y = filled(0, 0, 2, 2);
                            auto w = GroupCtx::zd(2).ball(2);
                            auto r1 = periodize(y, QuotientCtx::moduli({1, 1}), X, w);
                            auto r2 = periodize(y, QuotientCtx::moduli({0, 1}), X, w);
                            return outcome(r1.ok() && r2.ok(), "m=" + std::to_string(r1.m));
                          }});
  return b;
}

ExampleBundle arrow_bundle() {
  ExampleBundle b;
  b.name = "arrow-sft";
  b.description = "arrows form a disjoint union of paths";
  b.group = GroupCtx::zd(2);
  b.shift = arrow_sft();
  const Subshift X = *b.shift;
  // 0 > ^ < v
  auto cycle = plane({{v2(0, 0), 1}, {v2(1, 0), 2}, {v2(1, 1), 3}, {v2(0, 1), 4}});
  b.properties.push_back({"a 4-cycle is homoclinic", "config_valid", "true", [X, cycle] {
                            bool v = config_valid(X, cycle);
                            return outcome(v, v ? "valid" : "invalid");
                          }});
  b.properties.push_back({"a lone arrow is not", "config_valid", "false", [X] {
                            bool v = config_valid(X, plane({{v2(0, 0), 1}}));
                            return outcome(!v, v ? "valid" : "invalid");
                          }});
  b.properties.push_back({"two arrows into one cell", "pattern_valid", "invalid, one arrow alone valid", [X] {
                            Pattern two(CellMap{{v2(-1, 0), 1}, {v2(1, 0), 3}});
                            Pattern one(CellMap{{v2(-1, 0), 1}});
                            bool bad = pattern_valid(X, two, 1) == Validity::kInvalid;
                            bool good = pattern_valid(X, one, 1) == Validity::kValid;
                            return outcome(bad && good, std::string(bad ? "merge rejected" : "merge accepted") +
                                                            (good ? ", arrow extends" : ", arrow stuck"));
                          }});
  b.properties.push_back({"upward column lies in the Fin tier t=0", "fin_membership", "true", [X] {
                            auto q = QuotientCtx::moduli({0, 1});
                            auto z = Configuration::periodic(q, {{v2(0, 0), 2}});
                            bool v = config_valid(X, z);
                            bool fin = fin_membership(z, q, {v2(0, 0)});
                            return outcome(v && fin, std::string(v ? "valid" : "invalid") + (fin ? ", in tier" : ""));
                          }});
  b.properties.push_back({"the cycle lies in the Fin tier t=1", "fin_membership", "true", [cycle] {
                            bool fin = fin_membership(cycle, QuotientCtx::moduli({0, 1}), {v2(-1, 0), v2(0, 0), v2(1, 0)});
                            return outcome(fin, fin ? "in tier" : "outside");
                          }});
  return b;
}

ExampleBundle north_east_bundle() {
  ExampleBundle b;
  b.name = "north-or-east";
  b.description = "each 1 has a 1 as its north or east neighbor";
  b.group = GroupCtx::zd(2);
  b.shift = north_or_east();
  const Subshift X = *b.shift;
  b.properties.push_back({"no nonzero homoclinic point in a 3x3 box", "config_valid", "only 0", [X] {
                            auto box = GroupCtx::zd(2).ball(1);
                            int valid = 0;
                            for (std::uint32_t m = 0; m < (1u << box.size()); ++m) {
                              CellMap c;
                              for (std::size_t i = 0; i < box.size(); ++i)
                                if ((m >> i) & 1u) c[box[i]] = 1;
                              if (config_valid(X, Configuration::finite(GroupCtx::zd(2), c))) ++valid;
                            }
                            return outcome(valid == 1, std::to_string(valid) + " valid");
                          }});
  b.properties.push_back({"block gluing at R=2, fails at R=1", "verify_block_gluing", "n_max=2", [X] {
                            auto r2 = verify_block_gluing(X, 2, 2);
                            auto r1 = verify_block_gluing(X, 1, 2);
                            return outcome(r2.holds && !r1.holds,
                                           std::string("R=2 ") + (r2.holds ? "holds" : "fails") + ", R=1 " +
                                               (r1.holds ? "holds" : "fails"));
                          }});
  b.properties.push_back({"panel (a) on a 16x16 window", "ordinal_glue", "valid window", [X] {
                            Pattern p = Pattern::grid({{1, 1}, {1, 1}});
                            Rect win{-8, 7, -8, 7};
                            auto s = figure_a(p, 2, 2, win);
                            auto out = ordinal_glue(s, X, win);
                            bool v = pattern_valid(X, out, 0) != Validity::kInvalid;
                            return outcome(v && out.cells.at(v2(0, 0)) == 1, v ? "valid" : "invalid");
                          }});
  return b;
}

ExampleBundle density_bundle() {
  ExampleBundle b;
  b.name = "density-bounded";
  b.description = "no window of length 4 holds more than 2 nonzero symbols";
  b.group = GroupCtx::zd(1);
  b.shift = density_bounded(2);
  const Subshift X = *b.shift;
  b.properties.push_back({"words 1100 and 1101", "pattern_valid", "valid, invalid", [X] {
                            bool a = pattern_valid(X, Pattern::word({1, 1, 0, 0}), 2) == Validity::kValid;
                            bool c = pattern_valid(X, Pattern::word({1, 1, 0, 1}), 2) == Validity::kInvalid;
                            return outcome(a && c, std::string(a ? "1100 valid" : "1100 invalid") +
                                                       (c ? ", 1101 invalid" : ", 1101 valid"));
                          }});
  b.properties.push_back({"zeros synchronize", "synchronizing_radius", "<= 3", [X] {
                            Int r = synchronizing_radius(X);
                            return outcome(r <= 3, std::to_string(r));
                          }});
  b.properties.push_back({"pieces 11 at 0 and 4 glue", "realize", "realized with gamma=0", [X] {
                            Designation d;
                            d.collar = {GroupElem{-1}, GroupElem{0}, GroupElem{1}};
                            d.pieces.push_back({Region::finite({GroupElem{-1}, GroupElem{0}, GroupElem{1}, GroupElem{2}}),
                                                Configuration::word({1, 1}, 0), GroupElem{}});
                            d.pieces.push_back({Region::finite({GroupElem{3}, GroupElem{4}, GroupElem{5}, GroupElem{6}}),
                                                Configuration::word({1, 1}, 4), GroupElem{}});
                            auto r = realize(d, X, GlueMode::kSynchronizing1D, 0);
                            return outcome(config_valid(X, r.y), "support " + std::to_string(r.y.entries().size()));
                          }});
  return b;
}

ExampleBundle onepoint_bundle() {
  ExampleBundle b;
  b.name = "onepoint-ca";
  b.description = "max(0, min(x_{i-1}, m) - 1) on (N u {inf})^Z, m the distance to the next nonzero on the right";
  b.group = GroupCtx::zd(1);
  b.expansive = false;
  b.properties.push_back({"each cell nonzero at most once", "onepoint::check_at_most_once",
                          "holds for 50 random seeds, T=100", [] {
                            std::mt19937_64 rng(20261014);
                            for (int i = 0; i < 50; ++i) {
                              auto x = onepoint::random_seed(rng, 5, 8, 0.1);
                              auto r = onepoint::check_at_most_once(onepoint::orbit(x, 100));
                              if (!r.holds) {
                                std::string times;
                                for (Int t : r.times) times += (times.empty() ? "" : ",") + std::to_string(t);
                                return outcome(false, "seed " + onepoint::state_string(x) + ": cell " +
                                                          std::to_string(r.cell) + " nonzero at t=" + times);
                              }
                            }
                            return outcome(true, "50 seeds");
                          }});
  b.properties.push_back({"inf at -t reaches the origin at step t", "onepoint::infinity_hit_time", "t = 1..30", [] {
                            for (Int t = 1; t <= 30; ++t) {
                              auto h = onepoint::infinity_hit_time(t, 100);
                              if (!h || *h != t) return outcome(false, "t=" + std::to_string(t));
                            }
                            return outcome(true, "t = 1..30");
                          }});
  return b;
}

ExampleBundle reversal_bundle() {
  ExampleBundle b;
  b.name = "reversal-union";
  b.description = "orbit closure of 0^inf . 1 0^n 1 0^{n+1} 1 ... together with its reversal";
  b.group = GroupCtx::zd(1);
  b.shift = reversal_union();
  b.rules.push_back({"right-shift", shift_rule(b.group, b.shift->alphabet(), GroupElem{1})});
  const Subshift X = *b.shift;
  b.properties.push_back({"window words", "pattern_valid", "x^2 prefix and its mirror valid, 1001001 not", [X] {
                            std::vector<Sym> w{1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1};
                            std::vector<Sym> m(w.rbegin(), w.rend());
                            bool a = pattern_valid(X, Pattern::word(w), 0) == Validity::kValid;
                            bool c = pattern_valid(X, Pattern::word(m), 0) == Validity::kValid;
                            bool d = pattern_valid(X, Pattern::word({1, 0, 0, 1, 0, 0, 1}), 0) == Validity::kInvalid;
                            return outcome(a && c && d, std::string(a ? "x^2 " : "") + (c ? "mirror " : "") +
                                                            (d ? "1001001 rejected" : ""));
                          }});
  b.properties.push_back({"only homoclinic point is a single 1", "config_valid", "1 yes, 11 no", [X] {
                            bool a = config_valid(X, Configuration::word({1}));
                            bool c = config_valid(X, Configuration::word({1, 1}));
                            return outcome(a && !c, std::string(a ? "1 valid" : "1 invalid") + (c ? ", 11 valid" : ""));
                          }});
  b.properties.push_back({"right shift has a spaceship", "spaceship_search", "n=1, g=+1", [X, r = b.rules[0].rule] {
                            auto c = spaceship_search(r, X, 2, 3);
                            return outcome(c && c->n == 1 && c->g.nf[0] == 1, c ? "found" : "none");
                          }});
  return b;
}

}  // namespace

// ---- systems ----

LocalRule spaceship_rule() {
  LocalRule r = LocalRule::from_function(
      GroupCtx::zd(1), Alphabet::range(3), {GroupElem{-1}, GroupElem{0}, GroupElem{1}},
      [](const std::vector<Sym>& v) {
        if (v[0] == 1 && v[1] != 2 && v[2] != 2) return 1;
        if (v[2] == 2 && v[1] != 1 && v[0] != 1) return 2;
        return 0;
      });
  r.formula = "spaceship";
  return r;
}

Subshift spaceship_shift() {
  // states: 0 = last nonzero was 1, 1 = last nonzero was 2
  LinePresentation lp(2, 3, {{0, 0, 0}, {0, 2, 1}, {1, 0, 1}, {1, 1, 0}});
  auto x = Subshift::predicate(GroupCtx::zd(1), Alphabet::range(3),
                               std::make_shared<LineOracle>("spaceship-sofic", std::move(lp)));
  x.label = "spaceship-sofic";
  return x;
}

Subshift even_shift() {
  LinePresentation lp(2, 2, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  auto x = Subshift::predicate(GroupCtx::zd(1), Alphabet::range(2),
                               std::make_shared<LineOracle>("even-shift", std::move(lp)));
  x.label = "even-shift";
  return x;
}

Subshift squares_shift() {
  auto x = Subshift::predicate(GroupCtx::zd(2), Alphabet::range(2), std::make_shared<SquaresOracle>());
  x.label = "squares-shift";
  x.zero_gluing_collar = 1;
  return x;
}

Subshift arrow_sft() {
  const std::vector<GroupElem> dir{v2(1, 0), v2(0, 1), v2(-1, 0), v2(0, -1)};
  std::vector<Pattern> forb;
  for (Sym a = 1; a <= 4; ++a) forb.push_back(Pattern(CellMap{{v2(0, 0), a}, {dir[a - 1], 0}}));
  // two arrows pointing into the cell at the origin
  for (Sym a = 1; a <= 4; ++a)
    for (Sym b = a + 1; b <= 4; ++b) {
      const auto& da = dir[a - 1];
      const auto& db = dir[b - 1];
      forb.push_back(Pattern(CellMap{{v2(-da.nf[0], -da.nf[1]), a}, {v2(-db.nf[0], -db.nf[1]), b}}));
    }
  auto x = Subshift::sft(GroupCtx::zd(2), Alphabet({"0", ">", "^", "<", "v"}), forb);
  x.label = "arrow-sft";
  x.zero_gluing_collar = 1;
  return x;
}

Subshift north_or_east() {
  auto x = Subshift::sft(GroupCtx::zd(2), Alphabet::range(2),
                         {Pattern(CellMap{{v2(0, 0), 1}, {v2(0, 1), 0}, {v2(1, 0), 0}})});
  x.label = "north-or-east";
  x.zero_gluing_collar = 1;
  return x;
}

Subshift density_bounded(int k) {
  if (k < 1 || k > 4) throw InputError("density bound k must be in 1..4");
  const int len = k * k;
  std::vector<Pattern> forb;
  for (std::uint32_t m = 0; m < (1u << len); ++m) {
    if (__builtin_popcount(m) <= k) continue;
    std::vector<Sym> w;
    for (int i = 0; i < len; ++i) w.push_back(static_cast<Sym>((m >> i) & 1u));
    forb.push_back(Pattern::word(w));
  }
  auto x = Subshift::sft(GroupCtx::zd(1), Alphabet::range(2), forb);
  x.label = "density-bounded";
  x.zero_gluing_collar = len / 2;
  return x;
}

Subshift reversal_union() {
  auto x = Subshift::predicate(GroupCtx::zd(1), Alphabet::range(2), std::make_shared<ReversalOracle>());
  x.label = "reversal-union";
  return x;
}

bool reversal_union_word(const std::vector<Sym>& w) {
  return y_word(w) || y_word(std::vector<Sym>(w.rbegin(), w.rend()));
}

// ---- registry ----

const LocalRule& ExampleBundle::rule(const std::string& n) const {
  for (const auto& r : rules)
    if (r.name == n) return r.rule;
  throw InputError("example '" + name + "' has no rule '" + n + "'");
}

std::vector<std::string> example_names() {
  return {"min-ca",       "spaceship-sofic", "even-shift",  "squares-shift", "arrow-sft",
          "north-or-east", "density-bounded", "onepoint-ca", "reversal-union"};
}

ExampleBundle load_example(const std::string& name) {
  if (name == "min-ca") return min_ca_bundle();
  if (name == "spaceship-sofic") return spaceship_bundle();
  if (name == "even-shift") return even_bundle();
  if (name == "squares-shift") return squares_bundle();
  if (name == "arrow-sft") return arrow_bundle();
  if (name == "north-or-east") return north_east_bundle();
  if (name == "density-bounded") return density_bundle();
  if (name == "onepoint-ca") return onepoint_bundle();
  if (name == "reversal-union") return reversal_bundle();
  throw InputError("unknown example '" + name + "'");
}

std::vector<PropertyResult> run_properties(const ExampleBundle& b) {
  std::vector<PropertyResult> out;
  for (const auto& p : b.properties) {
    PropertyResult r{p.name, p.operation, p.expected, "", false};
    try {
      auto o = p.check();
      r.pass = o.pass;
      r.observed = o.observed;
    } catch (const BudgetExceeded&) {
      throw;
    } catch (const std::exception& e) {
      r.observed = std::string("error: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace symdyn
