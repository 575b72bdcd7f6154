#include <doctest.h>

#include <set>

#include "../oracles.hpp"
#include "symdyn/corpus.hpp"
#include "symdyn/error.hpp"

using namespace symdyn;

TEST_CASE("registry") {
  auto names = example_names();
  std::set<std::string> want{"min-ca",    "spaceship-sofic", "even-shift",  "squares-shift", "arrow-sft",
                             "north-or-east", "density-bounded", "onepoint-ca", "reversal-union"};
  CHECK(std::set<std::string>(names.begin(), names.end()) == want);
  CHECK_THROWS_AS(load_example("no-such-example"), InputError);
  for (const auto& n : names) {
    auto b = load_example(n);
    CHECK(b.name == n);
    CHECK_FALSE(b.properties.empty());
    for (const auto& p : b.properties) {
      CHECK_FALSE(p.operation.empty());
      CHECK_FALSE(p.expected.empty());
    }
  }
  CHECK_FALSE(load_example("onepoint-ca").shift.has_value());
  CHECK_FALSE(load_example("onepoint-ca").expansive);
  CHECK(load_example("spaceship-sofic").symmetries.size() == 1);
}

TEST_CASE("every property holds except the one-point claim") {
  for (const auto& n : example_names()) {
    auto b = load_example(n);
    for (const auto& r : run_properties(b)) {
      CAPTURE(n);
      CAPTURE(r.name);
      CAPTURE(r.observed);
      if (n == "onepoint-ca" && r.name == "each cell nonzero at most once")
        CHECK_FALSE(r.pass);
      else
        CHECK(r.pass);
    }
  }
}

TEST_CASE("spaceship shift language") {
  auto x = spaceship_shift();
  // forbidden: 1 0^n 1 and 2 0^n 2; allowed: alternation 1 ... 2 ... 1
  auto ok = [&](const std::vector<Sym>& w) { return pattern_valid(x, Pattern::word(w), 0) == Validity::kValid; };
  CHECK(ok({1, 0, 2, 0, 0, 1}));
  CHECK_FALSE(ok({1, 0, 0, 1}));
  CHECK_FALSE(ok({2, 2}));
  CHECK(config_valid(x, Configuration::word({1})));
  CHECK(config_valid(x, Configuration::word({2, 1})));
}

TEST_CASE("arrow SFT paths") {
  auto x = arrow_sft();
  auto z2 = GroupCtx::zd(2);
  // > < is a 2-cycle; in > ^ the ^ points at a 0
  CHECK(config_valid(x, Configuration::finite(z2, {{GroupElem{0, 0}, 1}, {GroupElem{1, 0}, 3}})));
  CHECK_FALSE(config_valid(x, Configuration::finite(z2, {{GroupElem{0, 0}, 1}, {GroupElem{1, 0}, 2}})));
}

TEST_CASE("squares shift agrees with the component oracle") {
  auto x = squares_shift();
  auto z2 = GroupCtx::zd(2);
  auto box = z2.ball(1);
  for (std::uint32_t m = 0; m < (1u << box.size()); ++m) {
    CellMap c;
    std::set<std::pair<oracle::I, oracle::I>> ones;
    for (std::size_t i = 0; i < box.size(); ++i)
      if ((m >> i) & 1u) {
        c[box[i]] = 1;
        ones.insert({box[i].nf[0], box[i].nf[1]});
      }
    REQUIRE(config_valid(x, Configuration::finite(z2, c)) == oracle::components_are_squares(ones));
  }
}

TEST_CASE("density bounded words") {
  auto x = density_bounded(2);
  for (std::uint32_t m = 0; m < (1u << 8); ++m) {
    std::vector<int> w;
    for (int i = 0; i < 8; ++i) w.push_back(static_cast<int>((m >> i) & 1u));
    bool dense = false;
    for (int i = 0; i + 4 <= 8; ++i) dense = dense || (w[i] + w[i + 1] + w[i + 2] + w[i + 3] > 2);
    CHECK(config_valid(x, Configuration::word(w)) == !dense);
  }
  CHECK_THROWS_AS(density_bounded(0), InputError);
}

TEST_CASE("reversal union words") {
  for (std::uint32_t m = 0; m < (1u << 7); ++m) {
    std::vector<Sym> w;
    for (int i = 0; i < 7; ++i) w.push_back(static_cast<Sym>((m >> i) & 1u));
    std::vector<Sym> rw(w.rbegin(), w.rend());
    CHECK(reversal_union_word(w) == reversal_union_word(rw));
  }
  CHECK(config_valid(reversal_union(), Configuration::word({1})));
  CHECK_FALSE(config_valid(reversal_union(), Configuration::word({1, 1})));
}
