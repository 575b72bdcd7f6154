#include <doctest.h>

#include <set>

#include "../oracles.hpp"
#include "symdyn/error.hpp"
#include "symdyn/groups.hpp"

using namespace symdyn;

namespace {

std::vector<GroupCtx> all_groups() {
  return {GroupCtx::zd(1),
          GroupCtx::zd(2),
          GroupCtx::zd_quotient(Lattice::diagonal({0, 5})),
          GroupCtx::zd_quotient(Lattice(2, {{2, 1}, {0, 3}})),
          GroupCtx::heisenberg(),
          GroupCtx::lamplighter(),
          GroupCtx::free2()};
}

}  // namespace

TEST_CASE("products in Z^2, Heisenberg and F2") {
  auto z2 = GroupCtx::zd(2);
  CHECK(z2.mul({1, 2}, {3, -1}) == GroupElem{4, 1});

  auto h = GroupCtx::heisenberg();
  GroupElem x{1, 0, 0}, y{0, 1, 0};
  CHECK(h.mul(x, y) == GroupElem{1, 1, 1});
  CHECK(h.mul(y, x) == GroupElem{1, 1, 0});

  auto f = GroupCtx::free2();
  CHECK(free_word_string(f.mul(free_word_parse("ab"), free_word_parse("Ba"))) == "aa");
}

TEST_CASE("Heisenberg product agrees with matrix multiplication") {
  auto h = GroupCtx::heisenberg();
  auto b = h.ball(3);
  for (const auto& g : b)
    for (const auto& k : b) {
      auto m = oracle::heis_mul({g.nf[0], g.nf[1], g.nf[2]}, {k.nf[0], k.nf[1], k.nf[2]});
      CHECK(h.mul(g, k) == GroupElem{m[0], m[1], m[2]});
    }
}

TEST_CASE("free reduction matches a string oracle") {
  auto f = GroupCtx::free2();
  for (std::string w : {"aA", "abBA", "abAB", "BbbaAB", "aaAbBa"}) {
    auto g = f.canonical(free_word_parse(w));
    CHECK(free_word_string(g) == oracle::free_reduce(w));
  }
}

TEST_CASE("ball sizes") {
  CHECK(GroupCtx::zd(2).ball(1).size() == 9);
  CHECK(GroupCtx::free2().ball(2).size() == 17);
  CHECK(GroupCtx::heisenberg().ball(1).size() == 5);
  for (int r = 0; r <= 3; ++r) CHECK(GroupCtx::free2().ball(r).size() == oracle::free_ball_size(r));
  for (int d = 1; d <= 3; ++d)
    for (int r = 0; r <= 2; ++r) {
      std::size_t side = static_cast<std::size_t>(2 * r + 1), want = 1;
      for (int i = 0; i < d; ++i) want *= side;
      CHECK(GroupCtx::zd(d).ball(r).size() == want);
    }
}

TEST_CASE("lamplighter norm is the breadth-first word length") {
  auto lg = GroupCtx::lamplighter();
  auto dist = oracle::lamp_ball(5);
  std::size_t within4 = 0;
  for (const auto& [l, d] : dist) {
    std::vector<Int> nf{l.cursor};
    nf.insert(nf.end(), l.lamps.begin(), l.lamps.end());
    CHECK(lg.norm(GroupElem(nf)) == d);
    if (d <= 4) ++within4;
  }
  CHECK(lg.ball(4).size() == within4);
}

TEST_CASE("group axioms on ball(2)") {
  for (const auto& G : all_groups()) {
    CAPTURE(G.describe());
    auto b = G.ball(2);
    auto e = G.identity();
    CHECK(std::find(b.begin(), b.end(), e) != b.end());
    CHECK(std::set<GroupElem>(b.begin(), b.end()).size() == b.size());
    for (const auto& g : b) {
      CHECK(G.mul(g, G.inv(g)) == e);
      CHECK(G.mul(e, g) == g);
      CHECK(G.inv(G.inv(g)) == g);
      for (const auto& h : b)
        for (const auto& k : b) REQUIRE(G.mul(G.mul(g, h), k) == G.mul(g, G.mul(h, k)));
    }
  }
}

TEST_CASE("balls are nested and ordered by norm") {
  for (const auto& G : all_groups()) {
    CAPTURE(G.describe());
    auto b1 = G.ball(1), b2 = G.ball(2);
    std::set<GroupElem> s2(b2.begin(), b2.end());
    for (const auto& g : b1) CHECK(s2.count(g));
    CHECK(b1.size() <= b2.size());
    for (std::size_t i = 1; i < b2.size(); ++i) CHECK(G.norm(b2[i - 1]) <= G.norm(b2[i]));
    for (const auto& g : b2) CHECK(G.norm(g) <= 2);
  }
}

TEST_CASE("quotient projection") {
  auto q = QuotientCtx::moduli({0, 5});
  CHECK(q.project({3, 7}) == GroupElem{3, 2});
  auto q2 = QuotientCtx::from_generators(2, {{2, 0}, {0, 3}});
  CHECK(q2.project({5, 4}) == GroupElem{1, 1});
  CHECK(q2.project({0, 0}) == GroupElem{0, 0});
  CHECK(q2.index() == 6);
  CHECK(q2.representatives().size() == 6);
}

TEST_CASE("quotient projection is a homomorphism with correct cosets") {
  std::vector<std::array<std::array<Int, 2>, 2>> bases{{{{2, 0}, {0, 3}}}, {{{2, 1}, {0, 3}}}, {{{3, 1}, {1, 2}}}};
  auto z2 = GroupCtx::zd(2);
  for (const auto& b : bases) {
    auto q = QuotientCtx::from_generators(2, {{b[0][0], b[0][1]}, {b[1][0], b[1][1]}});
    Int det = std::abs(b[0][0] * b[1][1] - b[0][1] * b[1][0]);
    CHECK(q.index() == det);
    auto reps = q.representatives();
    CHECK(static_cast<Int>(reps.size()) == det);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      CHECK(q.project(reps[i]) == reps[i]);
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        CHECK_FALSE(oracle::in_lattice2(b, reps[i].nf[0] - reps[j].nf[0], reps[i].nf[1] - reps[j].nf[1]));
    }
    const auto& G = q.group();
    auto ball = z2.ball(2);
    for (const auto& g : ball) {
      auto p = q.project(g);
      CHECK(oracle::in_lattice2(b, g.nf[0] - p.nf[0], g.nf[1] - p.nf[1]));
      for (const auto& h : ball) CHECK(q.project(z2.mul(g, h)) == G.mul(q.project(g), q.project(h)));
    }
  }
}

TEST_CASE("sublattice avoiding a finite set") {
  auto z2 = GroupCtx::zd(2);
  CHECK(sublattice_avoiding(2, z2.ball(5)).lattice() == Lattice::diagonal({6, 6}));
  CHECK(sublattice_avoiding(2, {GroupElem{1, 0}}).lattice() == Lattice::diagonal({2, 2}));
  std::vector<GroupElem> m;
  for (Int i = -3; i <= 3; ++i)
    if (i) m.push_back(GroupElem{i});
  CHECK(sublattice_avoiding(1, m).lattice() == Lattice::diagonal({4}));

  std::vector<GroupElem> odd{GroupElem{3, -7}, GroupElem{0, 2}, GroupElem{-4, 4}, GroupElem{0, 0}};
  auto q = sublattice_avoiding(2, odd);
  for (const auto& v : odd)
    if (v != z2.identity()) CHECK(q.project(v) != z2.identity());
}

TEST_CASE("Hermite form is canonical") {
  Lattice a(2, {{2, 1}, {0, 3}});
  Lattice b(2, {{2, 4}, {4, 11}, {0, 3}});
  CHECK(a == b);
  CHECK(a.index() == 6);
  CHECK(a.contains(std::vector<Int>{2, 4}));
  CHECK_FALSE(a.contains(std::vector<Int>{1, 0}));
  CHECK(a.scaled(2).index() == 24);
  CHECK(Lattice::diagonal({0, 5}).rank() == 1);
  CHECK_THROWS_AS(Lattice::diagonal({0, 5}).index(), std::exception);
}

TEST_CASE("bad input") {
  CHECK_THROWS_AS(GroupCtx::zd(0), InputError);
  CHECK_THROWS_AS(GroupCtx::zd(2).mul({1}, {1, 2}), InputError);
  CHECK_THROWS_AS(free_word_parse("abx"), InputError);
  CHECK_THROWS_AS(GroupCtx::zd(1).ball(-1), InputError);
}
