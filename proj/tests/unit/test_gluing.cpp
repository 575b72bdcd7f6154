#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "symdyn/corpus.hpp"
#include "symdyn/error.hpp"
#include "symdyn/gluing.hpp"

using namespace symdyn;

namespace {

const GroupCtx Z = GroupCtx::zd(1);
const GroupCtx Z2 = GroupCtx::zd(2);

GroupElem v2(Int x, Int y) { return GroupElem{x, y}; }

std::vector<GroupElem> interval(Int lo, Int hi) {
  std::vector<GroupElem> out;
  for (Int i = lo; i <= hi; ++i) out.push_back(GroupElem{i});
  return out;
}

Subshift sft_words(const std::vector<std::vector<Sym>>& words) {
  std::vector<Pattern> f;
  for (const auto& w : words) f.push_back(Pattern::word(w));
  return Subshift::sft(Z, Alphabet::range(2), f);
}

GluingError::Code code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const GluingError& e) {
    return e.code();
  }
  FAIL("no gluing error");
  return GluingError::Code::kGluingFailed;
}

std::vector<int> dense(const Configuration& x, Int lo, Int hi) {
  std::vector<int> out;
  for (Int i = lo; i <= hi; ++i) out.push_back(x.at(GroupElem{i}));
  return out;
}

}  // namespace

TEST_CASE("superposition on the full shift") {
  auto x = Subshift::full(Z, Alphabet::range(3));
  Designation d;
  d.pieces.push_back({Region::finite(interval(0, 3)), Configuration::word({1, 2}, 1), {}});
  d.pieces.push_back({Region::finite(interval(6, 9)), Configuration::word({2, 0, 1}, 7), {}});
  auto r = realize(d, x, GlueMode::kSuperpose, 0);
  CHECK(dense(r.y, 0, 9) == std::vector<int>{0, 1, 2, 0, 0, 0, 0, 2, 0, 1});
  CHECK(r.shifts == std::vector<Int>{0, 0});
}

TEST_CASE("designation errors") {
  auto x = Subshift::full(Z, Alphabet::range(2));
  Designation overlap;
  overlap.pieces.push_back({Region::finite(interval(0, 3)), Configuration::word({1}, 1), {}});
  overlap.pieces.push_back({Region::finite(interval(3, 5)), Configuration::word({1}, 4), {}});
  CHECK(code_of([&] { realize(overlap, x, GlueMode::kSuperpose, 0); }) ==
        GluingError::Code::kDisjointnessViolation);

  Designation border;
  border.collar = {GroupElem{-1}, GroupElem{0}, GroupElem{1}};
  border.pieces.push_back({Region::finite(interval(0, 3)), Configuration::word({1}, 3), {}});
  CHECK(code_of([&] { realize(border, x, GlueMode::kSuperpose, 0); }) == GluingError::Code::kBorderNotZero);

  Designation ok;
  ok.pieces.push_back({Region::finite(interval(0, 3)), Configuration::word({1}, 1), {}});
  CHECK(code_of([&] { realize(ok, even_shift(), GlueMode::kSuperpose, 0); }) ==
        GluingError::Code::kModeNotAdmissible);
  CHECK(code_of([&] { realize(ok, x, GlueMode::kBlockGlue2D, 0); }) == GluingError::Code::kModeNotAdmissible);
}

TEST_CASE("even shift needs a translation") {
  auto x = even_shift();
  Designation d;
  d.collar = {GroupElem{-1}, GroupElem{0}, GroupElem{1}};
  for (Int p : {Int{0}, Int{5}})
    d.pieces.push_back({Region::finite(interval(p - 1, p + 3)), Configuration::word({1, 1}, p), {}});
  CHECK(code_of([&] { realize(d, x, GlueMode::kSynchronizing1D, 0); }) == GluingError::Code::kGluingFailed);
  auto r = realize(d, x, GlueMode::kSynchronizing1D, 1);
  CHECK(r.shifts == std::vector<Int>{0, 1});
  auto w = dense(r.y, -2, 10);
  CHECK(oracle::even_shift_finite(w));
  CHECK(w == std::vector<int>{0, 0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 0, 0});
}

TEST_CASE("line gluing fills the collar") {
  // golden mean: 1 0 1 glues
  auto golden = sft_words({{1, 1}});
  Designation d;
  d.pieces.push_back({Region::finite(interval(0, 1)), Configuration::word({1}, 0), {}});
  d.pieces.push_back({Region::finite(interval(2, 3)), Configuration::word({1}, 2), {}});
  auto r = realize(d, golden, GlueMode::kSynchronizing1D, 0);
  CHECK(dense(r.y, 0, 3) == std::vector<int>{1, 0, 1, 0});
  CHECK(config_valid(golden, r.y));
}

TEST_CASE("synchronizing radius") {
  CHECK(synchronizing_radius(Subshift::full(Z, Alphabet::range(2))) == 0);
  CHECK(synchronizing_radius(sft_words({{1, 1}})) == 1);
  CHECK(synchronizing_radius(sft_words({{1, 0, 0, 1}})) <= 3);
  CHECK(synchronizing_radius(density_bounded(2)) <= 3);
  CHECK(code_of([] { synchronizing_radius(even_shift()); }) == GluingError::Code::kModeNotAdmissible);
  CHECK_THROWS_AS(synchronizing_radius(sft_words({{0}})), std::exception);
}

TEST_CASE("block gluing") {
  CHECK(verify_block_gluing(Subshift::full(Z2, Alphabet::range(2)), 0, 3).holds);
  auto ne = north_or_east();
  auto r1 = verify_block_gluing(ne, 1, 2);
  CHECK_FALSE(r1.holds);
  CHECK(r1.distance >= 1);
  CHECK(verify_block_gluing(ne, 2, 2).holds);
  CHECK(verify_block_gluing(ne, 3, 2).holds);

  // rows are constant, so a 1 and a 0 in the same row never glue
  auto rows = Subshift::sft(Z2, Alphabet::range(2),
                            {Pattern(CellMap{{v2(0, 0), 1}, {v2(1, 0), 0}}), Pattern(CellMap{{v2(0, 0), 0}, {v2(1, 0), 1}})});
  for (Int R : {1, 3, 5}) {
    auto r = verify_block_gluing(rows, R, 2);
    CHECK_FALSE(r.holds);
    CHECK(r.distance >= R);
  }
}

TEST_CASE("ordinal gluing") {
  auto ne = north_or_east();
  Rect win{-4, 4, -4, 4};
  GluingSchedule empty;
  auto z = ordinal_glue(empty, ne, win);
  CHECK(z.size() == 81);
  for (const auto& [c, v] : z.cells) CHECK(v == 0);

  Pattern p = Pattern::grid({{1, 1}, {1, 1}});
  auto s = figure_a(p, 2, 2, Rect{-10, 9, -10, 9});
  auto out = ordinal_glue(s, ne, Rect{-10, 9, -10, 9});
  for (const auto& e : s.entries) {
    if (!e.pattern) continue;
    for (const auto& [c, v] : e.pattern->cells) CHECK(out.cells.at(c) == v);
  }
  CHECK(pattern_valid(ne, out, 0) != Validity::kInvalid);

  GluingSchedule bad;
  bad.R = 3;
  bad.entries.push_back({Rect{0, 1, 0, 1}, p});
  bad.entries.push_back({Rect{3, 4, 0, 1}, std::nullopt});
  CHECK(code_of([&] { check_schedule(bad); }) == GluingError::Code::kScheduleDistanceViolation);
}

TEST_CASE("figure (b) confines the support to the H") {
  auto sq = squares_shift();
  Pattern q = Pattern::grid({{0, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  auto s = figure_b(q, 3, 2);
  Rect win{-8, 10, -8, 10};
  auto out = ordinal_glue(s, sq, win);
  for (const auto& [c, v] : out.cells)
    if (v) CHECK((c.nf[0] > -2 && c.nf[0] < 4));
  CHECK(out.cells.at(v2(1, 1)) == 1);
}

TEST_CASE("pigeonhole periodization") {
  auto full = Subshift::full(Z2, Alphabet::range(2));
  std::vector<std::vector<Sym>> rows;
  for (int y = 0; y < 16; ++y) rows.push_back({0, y % 4 == 0 ? 1 : 0, 0});
  auto strip = Pattern::grid(rows);
  auto z = pigeonhole_periodic(strip, 4, 1, full);
  REQUIRE(z.quotient());
  CHECK(z.quotient()->lattice() == Lattice(2, {{0, 4}}));
  for (int y = 0; y < 16; ++y) CHECK(z.at(v2(1, y)) == rows[static_cast<std::size_t>(y)][1]);

  std::vector<std::vector<Sym>> zeros(8, std::vector<Sym>(3, 0));
  CHECK(pigeonhole_periodic(Pattern::grid(zeros), 2, 1, full).is_zero());

  std::vector<std::vector<Sym>> ramp;
  for (int y = 0; y < 6; ++y) ramp.push_back({y == 0, y == 1, y == 2 || y == 5});
  CHECK(code_of([&] { pigeonhole_periodic(Pattern::grid(ramp), 3, 1, full); }) ==
        GluingError::Code::kNoRepetitionFound);
}

TEST_CASE("realizations do not depend on piece order") {
  std::mt19937_64 rng(2);
  auto x = Subshift::full(Z2, Alphabet::range(3));
  for (int t = 0; t < 20; ++t) {
    Designation d;
    for (Int k = 0; k < 3; ++k) {
      std::vector<GroupElem> reg;
      CellMap c;
      for (Int i = 0; i < 3; ++i)
        for (Int j = 0; j < 3; ++j) {
          reg.push_back(v2(5 * k + i, j));
          if (i == 1 && rng() % 2) c[v2(5 * k + i, j)] = static_cast<Sym>(1 + rng() % 2);
        }
      d.pieces.push_back({Region::finite(reg), Configuration::finite(Z2, c), {}});
    }
    auto a = realize(d, x, GlueMode::kSuperpose, 0).y;
    std::reverse(d.pieces.begin(), d.pieces.end());
    CHECK(a == realize(d, x, GlueMode::kSuperpose, 0).y);
  }
}

TEST_CASE("rectangle arithmetic") {
  Rect a{0, 2, 0, 2}, b{5, 6, -1, 0};
  CHECK(distance(a, b) == 3);
  CHECK(hull(a, b) == Rect{0, 6, -1, 2});
  CHECK(intersect(a, b).empty());
  CHECK(distance(a, Rect{1, 4, 1, 4}) == 0);
  CHECK(bounding_rect({v2(1, 2), v2(-3, 0)}) == Rect{-3, 1, 0, 2});
  CHECK(Rect{0, 1, 0, 2}.cells().size() == 6);
  CHECK_FALSE(Rect{-kInf, 0, 0, 0}.finite());
}
