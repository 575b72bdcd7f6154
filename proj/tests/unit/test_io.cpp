#include <doctest.h>

#include <random>

#include "symdyn/error.hpp"
#include "symdyn/io.hpp"
#include "symdyn/render.hpp"

using namespace symdyn;
using namespace symdyn::io;

namespace {

const char* kSystem = R"({
  "version": 1,
  "group": {"kind": "Zd", "d": 1},
  "subshift": {"kind": "sft", "alphabet": ["0", "1"], "forbidden": [{"cells": [[[0], "1"], [[1], "1"]]}], "collar": 1},
  "rules": {
    "min": {"formula": "min"},
    "right": {"formula": "shift", "params": {"t": [1]}},
    "and": {"neighborhood": [[0], [1]], "table": {"0,0": "0", "0,1": "0", "1,0": "0", "1,1": "1"}}
  },
  "symmetries": [{"name": "id", "perm": ["0", "1"]}]
})";

}  // namespace

TEST_CASE("system files round-trip") {
  auto s = parse_system(kSystem);
  CHECK(s.shift.kind() == ShiftKind::kSft);
  CHECK(s.shift.zero_gluing_collar == Int{1});
  CHECK(s.rules.size() == 3);
  CHECK(same_function(s.rule("min"), min_rule()));
  CHECK(same_function(s.rule("and"), min_rule()));
  CHECK(apply(s.rule("right"), Configuration::word({1})) == Configuration::word({1}, 1));
  auto text = serialize_system(s);
  CHECK(serialize_system(parse_system(text)) == text);
  CHECK_THROWS_AS(s.rule("nope"), InputError);

  for (const auto& n : example_names()) {
    if (n == "onepoint-ca") continue;
    auto e = system_for_example(n);
    auto t = serialize_system(e);
    CAPTURE(n);
    auto back = parse_system(t);
    CHECK(serialize_system(back) == t);
    CHECK(back.shift.alphabet() == e.shift.alphabet());
    for (const auto& [name, spec] : e.rules) CHECK(same_function(back.rule(name), spec.rule));
  }
}

TEST_CASE("malformed systems") {
  CHECK_THROWS_AS(parse_system("{"), InputError);
  CHECK_THROWS_AS(parse_system(R"({"version": 2, "group": {"kind": "Zd", "d": 1}})"), InputError);
  CHECK_THROWS_AS(parse_system(R"({"group": {"kind": "Zd", "d": 1}, "subshift": {"kind": "weird"}})"), InputError);
  CHECK_THROWS_AS(parse_system(R"({"group": {"kind": "Zd", "d": 1},
    "subshift": {"kind": "full", "alphabet": ["0", "1"]},
    "rules": {"r": {"neighborhood": [[0]], "table": {"0": "0"}}}})"),
                  InputError);
}

TEST_CASE("groups and elements") {
  for (const auto& G : {GroupCtx::zd(3), GroupCtx::zd_quotient(Lattice(2, {{2, 1}, {0, 3}})), GroupCtx::heisenberg(),
                        GroupCtx::lamplighter(), GroupCtx::free2()}) {
    CAPTURE(G.describe());
    auto back = group_from_json(group_to_json(G));
    CHECK(back == G);
    for (const auto& g : G.ball(2)) CHECK(elem_from_json(G, elem_to_json(G, g)) == g);
  }
  CHECK(elem_to_json(GroupCtx::free2(), free_word_parse("aB")) == json("aB"));
  CHECK(elem_to_json(GroupCtx::zd(2), GroupElem{3, -1}) == json::array({3, -1}));
}

TEST_CASE("configurations and patterns") {
  std::mt19937_64 rng(1);
  auto z2 = GroupCtx::zd(2);
  Alphabet a({"0", ">", "^"});
  for (int t = 0; t < 20; ++t) {
    CellMap c;
    for (int i = 0; i < 4; ++i) c[GroupElem{static_cast<Int>(rng() % 5), static_cast<Int>(rng() % 5)}] = 1 + rng() % 2;
    auto x = Configuration::finite(z2, c);
    CHECK(config_from_json(z2, a, config_to_json(a, x)) == x);
    Pattern p(c);
    CHECK(pattern_from_json(z2, a, pattern_to_json(z2, a, p)) == p);
  }
  auto q = QuotientCtx::from_generators(2, {{3, 0}, {1, 2}});
  auto per = Configuration::periodic(q, {{GroupElem{1, 0}, 2}});
  CHECK(config_from_json(z2, a, config_to_json(a, per)) == per);
  auto strip = Configuration::periodic(QuotientCtx::moduli({0, 4}), {{GroupElem{5, 1}, 1}});
  auto js = config_to_json(a, strip);
  CHECK(js.at("kind") == "strip_periodic");
  CHECK(config_from_json(z2, a, js) == strip);
}

TEST_CASE("rules as tables") {
  auto f = min_rule();
  auto j = rule_to_json(f);
  CHECK(j.at("table").at("1,1") == "1");
  CHECK(rule_from_json(GroupCtx::zd(1), j) == f);
  CHECK_THROWS_AS(builtin_rule(GroupCtx::zd(1), Alphabet::range(2), "bogus", json::object()), InputError);
}

TEST_CASE("schedules") {
  auto z2 = GroupCtx::zd(2);
  GluingSchedule s;
  s.R = 2;
  s.entries.push_back({Rect{0, 1, 0, 1}, Pattern::grid({{1, 0}, {0, 1}})});
  s.entries.push_back({Rect{-kInf, -2, -kInf, kInf}, std::nullopt});
  auto j = schedule_to_json(z2, Alphabet::range(2), s);
  CHECK(j.at("entries").at(1).at("block").at(0) == "-inf");
  auto back = schedule_from_json(z2, Alphabet::range(2), j);
  REQUIRE(back.entries.size() == 2);
  CHECK(back.R == 2);
  CHECK(back.entries[0].block == s.entries[0].block);
  CHECK(back.entries[1].block == s.entries[1].block);
  CHECK(back.entries[0].pattern == s.entries[0].pattern);
  CHECK_FALSE(back.entries[1].pattern);
  CHECK(rect_from_json(rect_to_json(Rect{-3, 4, kInf - 1, kInf})) == Rect{-3, 4, kInf - 1, kInf});
}

TEST_CASE("reports") {
  auto b = bounded_nilpotency(min_rule(), 2);
  auto j = to_json(b);
  CHECK(j.at("verdict") == "No");
  CHECK(j.contains("witness"));
  auto p = to_json(uniform_mortality_profile(min_rule(), Subshift::full(GroupCtx::zd(1), Alphabet::range(2)), 2, 16));
  CHECK(p.at("entries").size() == 3);
  auto m = to_json(mortality(min_rule(), Configuration::word({1, 1}), 10));
  CHECK(m.at("verdict") == "Mortal");
  CHECK(m.at("n") == 2);
}

TEST_CASE("PGM and SVG rendering") {
  auto d = spacetime_diagram(min_rule(), Configuration::word({1, 1, 1, 1, 1}), 5, 0, 4);
  std::string want =
      "P2\n5 6\n255\n"
      "255 255 255 255 255\n"
      "255 255 255 255 0\n"
      "255 255 255 0 0\n"
      "255 255 0 0 0\n"
      "255 0 0 0 0\n"
      "0 0 0 0 0\n";
  CHECK(render_pgm(d, 2) == want);
  CHECK(render_pgm({{0, 1, 2}}, 3) == "P2\n3 1\n255\n0 127 255\n");
  auto svg = render_svg({{0, 2}}, 3, 4);
  CHECK(svg.find("width=\"8\" height=\"4\"") != std::string::npos);
  CHECK(svg.find("x=\"4\" y=\"0\"") != std::string::npos);
  CHECK(svg.find("rgb(255,255,255)") != std::string::npos);

  Pattern p = Pattern::grid({{1, 0}, {0, 2}});
  auto rows = window_rows(p, Rect{0, 1, 0, 1});
  CHECK(rows == Diagram{{0, 2}, {1, 0}});
  CHECK_THROWS_AS(window_rows(p, Rect{0, kInf, 0, 1}), InputError);
}

TEST_CASE("files") {
  auto path = std::string("io_test_tmp.json");
  write_file(path, "abc\n");
  CHECK(read_file(path) == "abc\n");
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_file("/nonexistent/dir/file"), InputError);
}
