#include <doctest.h>

#include <random>
#include <set>

#include "../oracles.hpp"
#include "symdyn/corpus.hpp"
#include "symdyn/error.hpp"
#include "symdyn/nillab.hpp"

using namespace symdyn;

namespace {

const GroupCtx Z = GroupCtx::zd(1);

LocalRule random_rule(std::mt19937_64& rng, int k, std::vector<GroupElem> nb, unsigned zero_bias = 0) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < nb.size(); ++i) size *= static_cast<std::size_t>(k);
  std::vector<Sym> table(size);
  for (std::size_t i = 1; i < size; ++i)
    table[i] = rng() % (zero_bias + 1) ? 0 : static_cast<Sym>(rng() % static_cast<unsigned>(k));
  return LocalRule(Z, Alphabet::range(k), std::move(nb), table);
}

// Successor table of f on the p-cell ring, states in base k with cell 0 least significant.
std::vector<std::size_t> ring_successors(const LocalRule& f, int p) {
  const int k = f.symbols();
  std::size_t n = 1;
  for (int i = 0; i < p; ++i) n *= static_cast<std::size_t>(k);
  std::vector<std::size_t> succ(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> cells;
    for (std::size_t t = s, i = 0; i < static_cast<std::size_t>(p); ++i, t /= static_cast<std::size_t>(k))
      cells.push_back(static_cast<int>(t % static_cast<std::size_t>(k)));
    std::size_t out = 0, mul = 1;
    for (int i = 0; i < p; ++i) {
      std::size_t idx = 0;
      for (const auto& g : f.neighborhood()) {
        Int j = ((i + g.nf[0]) % p + p) % p;
        idx = idx * static_cast<std::size_t>(k) + static_cast<std::size_t>(cells[static_cast<std::size_t>(j)]);
      }
      out += mul * static_cast<std::size_t>(f.table()[idx]);
      mul *= static_cast<std::size_t>(k);
    }
    succ[s] = out;
  }
  return succ;
}

}  // namespace

TEST_CASE("mortality") {
  auto m = mortality(min_rule(), Configuration::word({1, 1, 1, 1, 1}), 64);
  CHECK(m.mortal);
  CHECK(m.time == 5);
  auto z = mortality(zero_rule(Z, Alphabet::range(2)), Configuration::word({1, 0, 1}), 64);
  CHECK((z.mortal && z.time == 1));
  auto id = mortality(identity_rule(Z, Alphabet::range(2)), Configuration::word({1}), 10);
  CHECK_FALSE(id.mortal);
  CHECK(id.time == 10);
  CHECK(mortality(min_rule(), Configuration(), 5).time == 0);
}

TEST_CASE("min CA mortality is the longest run") {
  for (int len = 1; len <= 10; ++len)
    for (std::uint32_t m = 0; m < (1u << len); ++m) {
      std::vector<int> w;
      for (int i = 0; i < len; ++i) w.push_back(static_cast<int>((m >> i) & 1u));
      auto r = mortality(min_rule(), Configuration::word(w), 64);
      REQUIRE(r.mortal);
      REQUIRE(r.time == oracle::longest_run(w));
    }
}

TEST_CASE("bounded nilpotency") {
  auto zr = bounded_nilpotency(zero_rule(Z, Alphabet::range(2)), 1);
  CHECK(zr.all_zero);
  for (Int n = 1; n <= 6; ++n) {
    auto b = bounded_nilpotency(min_rule(), n);
    REQUIRE_FALSE(b.all_zero);
    CHECK(b.width == n + 1);
    auto x = Configuration::word(b.witness, b.offset);
    CHECK(iterate(min_rule(), x, n).at(GroupElem{0}) != 0);
  }
  auto s = shift_rule(Z, Alphabet::range(2), GroupElem{1});
  auto bs = bounded_nilpotency(s, 3);
  REQUIRE_FALSE(bs.all_zero);
  CHECK(iterate(s, Configuration::word(bs.witness, bs.offset), 3).at(GroupElem{0}) == 1);
  CHECK_THROWS_AS(bounded_nilpotency(min_rule(), 40, 1000), BudgetExceeded);
}

TEST_CASE("bounded nilpotency agrees with full enumeration") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 40; ++t) {
    auto f = random_rule(rng, 2, {GroupElem{-1}, GroupElem{0}, GroupElem{1}}, 2);
    for (Int n = 1; n <= 3; ++n) {
      // f^n(x)_0 depends on x_{-n..n}
      bool all_zero = true;
      for (std::uint32_t m = 0; m < (1u << (2 * n + 1)) && all_zero; ++m) {
        std::vector<Sym> w;
        for (Int i = 0; i <= 2 * n; ++i) w.push_back(static_cast<Sym>((m >> i) & 1u));
        all_zero = iterate(f, Configuration::word(w, -n), n).at(GroupElem{0}) == 0;
      }
      CHECK(bounded_nilpotency(f, n).all_zero == all_zero);
    }
  }
}

TEST_CASE("mortality profiles") {
  auto full = Subshift::full(Z, Alphabet::range(2));
  auto p = uniform_mortality_profile(min_rule(), full, 4, 64);
  REQUIRE(p.entries.size() == 5);
  for (const auto& e : p.entries) {
    CHECK(e.max_time == 2 * e.r + 1);
    CHECK(e.alive == 0);
    CHECK(e.configs == (std::size_t{1} << (2 * e.r + 1)));
  }
  auto z = uniform_mortality_profile(zero_rule(Z, Alphabet::range(2)), full, 3, 64);
  for (const auto& e : z.entries) CHECK(e.max_time == 1);

  auto x = spaceship_shift();
  auto q = uniform_mortality_profile(spaceship_rule(), x, 5, 64);
  for (std::size_t i = 1; i < q.entries.size(); ++i) CHECK(q.entries[i].max_time > q.entries[i - 1].max_time);
}

TEST_CASE("enumerating line configurations") {
  auto golden = Subshift::sft(Z, Alphabet::range(2), {Pattern::word({1, 1})});
  auto words = enumerate_line_configs(golden, 0, 2);
  CHECK(words.size() == 5);
  auto even = enumerate_line_configs(even_shift(), 0, 3);
  for (const auto& w : even) {
    std::vector<int> cells(w.cells.begin(), w.cells.end());
    CHECK(oracle::even_shift_finite(cells));
  }
  std::size_t count = 0;
  for (std::uint32_t m = 0; m < 16; ++m) {
    std::vector<int> w;
    for (int i = 0; i < 4; ++i) w.push_back(static_cast<int>((m >> i) & 1u));
    if (oracle::even_shift_finite(w)) ++count;
  }
  CHECK(even.size() == count);
}

TEST_CASE("spaceship search") {
  auto full = Subshift::full(Z, Alphabet::range(2));
  auto s = shift_rule(Z, Alphabet::range(2), GroupElem{1});
  auto c = spaceship_search(s, full, 1, 2);
  REQUIRE(c);
  CHECK(c->n == 1);
  CHECK(c->g == GroupElem{1});
  CHECK(support(c->x).size() == 1);
  CHECK(verify_spaceship(s, *c));

  auto sc = spaceship_search(spaceship_rule(), spaceship_shift(), 1, 3);
  REQUIRE(sc);
  CHECK(sc->n == 1);
  CHECK(GroupCtx::zd(1).norm(sc->g) == 1);
  CHECK(iterate(spaceship_rule(), sc->x, sc->n) == sc->x.translate(sc->g));

  CHECK_FALSE(spaceship_search(min_rule(), full, 5, 30));
  SpaceshipCertificate fake{Configuration::word({1}), 1, GroupElem{2}};
  CHECK_FALSE(verify_spaceship(s, fake));
}

TEST_CASE("spaceships on other groups") {
  auto F2 = GroupCtx::free2();
  auto a = free_word_parse("a");
  auto f = shift_rule(F2, Alphabet::range(2), a);
  auto c = spaceship_search(f, Subshift::full(F2, Alphabet::range(2)), 1, 3);
  REQUIRE(c);
  CHECK(verify_spaceship(f, *c));
  CHECK(iterate(f, c->x, c->n) == c->x.translate(c->g));
}

TEST_CASE("space-time paths") {
  auto s = shift_rule(Z, Alphabet::range(2), GroupElem{1});
  auto d = spacetime_diagram(s, Configuration::word({1}), 5, 0, 6);
  auto p = spacetime_path(d);
  REQUIRE(p);
  CHECK(p->column == std::vector<Int>{0, 1, 2, 3, 4, 5});
  CHECK(p->halo == 0);
  CHECK(p->jump == 1);

  auto x = Configuration::word({1, 0, 0, 0, 0, 2});
  auto d2 = spacetime_diagram(spaceship_rule(), x, 6, 0, 5);
  auto p2 = spacetime_path(d2);
  REQUIRE(p2);
  CHECK(p2->column.size() < d2.size());
  CHECK(p2->jump <= 1);
  for (std::size_t k = 0; k < p2->column.size(); ++k) CHECK(d2[k][static_cast<std::size_t>(p2->column[k])] != 0);

  Diagram zeros(4, std::vector<Sym>(5, 0));
  CHECK_FALSE(spacetime_path(zeros));
  CHECK_FALSE(spacetime_path(d, 0));
}

TEST_CASE("certificate diagrams admit a path with small halo") {
  auto c = spaceship_search(spaceship_rule(), spaceship_shift(), 2, 8);
  REQUIRE(c);
  auto sup = support(c->x);
  Int diam = sup.back().nf[0] - sup.front().nf[0];
  auto d = spacetime_diagram(spaceship_rule(), c->x, 8, -20, 20);
  auto p = spacetime_path(d);
  REQUIRE(p);
  CHECK(p->halo <= diam);
  CHECK(p->column.size() == d.size());
}

TEST_CASE("finite systems") {
  auto min4 = finite_system_checks(min_rule(), QuotientCtx::moduli({4}), {GroupElem{0}});
  CHECK(min4.states == 16);
  CHECK_FALSE(min4.weak_nilpotent);
  CHECK_FALSE(min4.nilpotent);
  REQUIRE(min4.recurrent);
  CHECK(min4.recurrent->entries().size() == 4);
  CHECK(min4.period == 1);

  auto z = finite_system_checks(zero_rule(Z, Alphabet::range(2)), QuotientCtx::moduli({3}), {GroupElem{0}});
  CHECK(z.weak_nilpotent);
  CHECK(z.nilpotency_bound == 1);
  CHECK(z.holes_bound == 1);

  auto land = LocalRule::from_function(Z, Alphabet::range(2), {GroupElem{0}, GroupElem{1}},
                                       [](const std::vector<Sym>& v) { return v[0] & v[1]; });
  auto a3 = finite_system_checks(land, QuotientCtx::moduli({3}), {GroupElem{0}});
  CHECK_FALSE(a3.weak_nilpotent);
  CHECK(a3.recurrent->entries().size() == 3);
}

TEST_CASE("finite systems match direct ring iteration") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 60; ++t) {
    int k = 2 + static_cast<int>(rng() % 2);
    int p = 2 + static_cast<int>(rng() % 3);
    auto f = random_rule(rng, k, {GroupElem{0}, GroupElem{1}}, 1 + static_cast<unsigned>(rng() % 3));
    auto succ = ring_successors(f, p);
    auto to_zero = oracle::hit_times(succ, [](std::size_t s) { return s == 0; });
    bool weak = std::all_of(to_zero.begin(), to_zero.end(), [](oracle::I v) { return v >= 0; });
    auto hole = oracle::hit_times(succ, [k](std::size_t s) { return s % static_cast<std::size_t>(k) == 0; });
    oracle::I holes = 0;
    for (auto h : hole) holes = h < 0 || holes < 0 ? -1 : std::max(holes, h);
    auto rep = finite_system_checks(f, QuotientCtx::moduli({p}), {GroupElem{0}});
    CAPTURE(k);
    CAPTURE(p);
    CHECK(rep.states == succ.size());
    CHECK(rep.weak_nilpotent == weak);
    CHECK(rep.nilpotent == weak);
    CHECK(rep.agree);
    CHECK(rep.holes_bound == holes);
    if (weak) CHECK(rep.nilpotency_bound == *std::max_element(to_zero.begin(), to_zero.end()));
  }
}

TEST_CASE("trace zero density") {
  auto zr = trace_zero_density(zero_rule(Z, Alphabet::range(2)), Configuration::word({1}), GroupElem{0}, 10);
  CHECK(zr == Fraction{9, 10});
  auto id = trace_zero_density(identity_rule(Z, Alphabet::range(2)), Configuration::word({1}), GroupElem{0}, 10);
  CHECK(id.num == 0);
  auto m = trace_zero_density(min_rule(), Configuration::word({1, 1, 1, 1, 1, 1}), GroupElem{0}, 20);
  CHECK(m == Fraction{14, 20});
}

TEST_CASE("classification") {
  auto full = Subshift::full(Z, Alphabet::range(2));
  auto z = classify(zero_rule(Z, Alphabet::range(2)), full);
  CHECK(z.kind == NilpotencyVerdict::Kind::kNilpotent);
  CHECK(z.n == 1);
  auto m = classify(min_rule(), full);
  CHECK(m.kind == NilpotencyVerdict::Kind::kNotNilpotent);
  REQUIRE(m.recurrent);
  CHECK(iterate(min_rule(), *m.recurrent, m.period) == *m.recurrent);
  auto s = classify(spaceship_rule(), spaceship_shift());
  CHECK(s.kind == NilpotencyVerdict::Kind::kNotNilpotent);
  REQUIRE(s.spaceship);
  CHECK(verify_spaceship(spaceship_rule(), *s.spaceship));
  CHECK(to_string(NilpotencyVerdict::Kind::kUnknown).find("nknown") != std::string::npos);
}
