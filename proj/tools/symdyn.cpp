// symdyn: simulate, analyze, glue, periodize and reproduce from the command line.

#include <CLI11.hpp>
#include <filesystem>
#include <iostream>
#include <random>

#include "symdyn/corpus.hpp"
#include "symdyn/error.hpp"
#include "symdyn/gluing.hpp"
#include "symdyn/io.hpp"
#include "symdyn/nillab.hpp"
#include "symdyn/periodize.hpp"
#include "symdyn/render.hpp"

namespace fs = std::filesystem;
using namespace symdyn;
using io::json;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInput = 2, kBudget = 3 };

struct Common {
  std::string system;
  std::string example;
  std::string rule;
  std::string out_dir = ".";
  std::string render = "none";
  std::uint64_t seed = 1;
  int threads = 1;
};

io::SystemFile load_system(const Common& c) {
  if (!c.system.empty() && !c.example.empty()) throw InputError("give either --system or --example");
  if (!c.system.empty()) return io::parse_system(io::read_file(c.system));
  if (!c.example.empty()) return io::system_for_example(c.example);
  throw InputError("no system: use --system FILE or --example NAME");
}

fs::path out_path(const Common& c, const std::string& name) {
  fs::create_directories(c.out_dir);
  return fs::path(c.out_dir) / name;
}

void emit(const Common& c, const std::string& name, const json& j) {
  io::write_file(out_path(c, name).string(), j.dump(2) + "\n");
}

void render_diagram(const Common& c, const std::string& stem, const Diagram& d, int k) {
  if (c.render == "pgm") io::write_file(out_path(c, stem + ".pgm").string(), render_pgm(d, k));
  if (c.render == "svg") io::write_file(out_path(c, stem + ".svg").string(), render_svg(d, k));
}

std::vector<Sym> parse_word(const Alphabet& a, const std::string& s) {
  std::vector<Sym> w;
  if (s.find(',') == std::string::npos) {
    for (char ch : s) w.push_back(a.index(std::string(1, ch)));
    return w;
  }
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) w.push_back(a.index(part));
  return w;
}

Rect parse_rect(const std::string& s) {
  std::vector<Int> v;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(std::stoll(part));
  if (v.size() != 4) throw InputError("window is x0,x1,y0,y1");
  return Rect{v[0], v[1], v[2], v[3]};
}

Configuration random_config(const io::SystemFile& s, Int radius, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const GroupCtx& G = s.group;
  std::uniform_int_distribution<int> sym(0, s.shift.alphabet().size() - 1);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    CellMap m;
    for (const auto& g : G.ball(radius)) m[g] = sym(rng);
    auto x = Configuration::finite(G, m);
    if (config_valid(s.shift, x)) return x;
  }
  throw InputError("no valid random configuration found in 1000 draws");
}

// ---- simulate ----

struct SimArgs {
  std::string config, word;
  Int start = 0, steps = 10, random_radius = -1;
};

int cmd_simulate(const Common& c, const SimArgs& a) {
  auto s = load_system(c);
  const LocalRule& f = s.rule(c.rule);
  const Alphabet& A = s.shift.alphabet();
  Configuration x;
  if (!a.config.empty()) {
    x = io::config_from_json(s.group, A, json::parse(io::read_file(a.config)));
  } else if (!a.word.empty()) {
    if (!(s.group == GroupCtx::zd(1))) throw InputError("--word needs a system on Z");
    x = Configuration::word(parse_word(A, a.word), a.start);
  } else if (a.random_radius >= 0) {
    x = random_config(s, a.random_radius, c.seed);
  } else {
    throw InputError("no configuration: use --config, --word or --random-radius");
  }
  json snaps = json::array();
  std::vector<Configuration> orbit{x};
  for (Int t = 0; t < a.steps; ++t) orbit.push_back(apply(f, orbit.back()));
  for (const auto& y : orbit) snaps.push_back(io::config_to_json(A, y));
  emit(c, "snapshots.json", snaps);
  emit(c, "final.json", snaps.back());
  std::cout << snaps.back().dump() << "\n";
  if (c.render != "none" && !x.is_periodic()) {
    if (s.group == GroupCtx::zd(1)) {
      Int lo = 0, hi = 0;
      bool any = false;
      for (const auto& y : orbit)
        for (const auto& [g, v] : y.entries()) {
          lo = any ? std::min(lo, g.nf[0]) : g.nf[0];
          hi = any ? std::max(hi, g.nf[0]) : g.nf[0];
          any = true;
        }
      render_diagram(c, "spacetime", spacetime_diagram(f, x, a.steps, lo - 1, hi + 1), A.size());
    } else if (s.group == GroupCtx::zd(2)) {
      std::vector<GroupElem> all;
      for (const auto& y : orbit)
        for (const auto& [g, v] : y.entries()) all.push_back(g);
      Rect win = all.empty() ? Rect{0, 0, 0, 0} : bounding_rect(all);
      win = Rect{win.x0 - 1, win.x1 + 1, win.y0 - 1, win.y1 + 1};
      for (std::size_t t = 0; t < orbit.size(); ++t) {
        Pattern p(orbit[t].entries());
        render_diagram(c, "frame_" + std::to_string(t), window_rows(p, win), A.size());
      }
    }
  }
  return kOk;
}

// ---- analyze ----

struct AnalyzeArgs {
  Int horizon = 64, radius = 6, steps = 6;
};

int cmd_analyze(const Common& c, const AnalyzeArgs& a) {
  auto s = load_system(c);
  const LocalRule& f = s.rule(c.rule);
  const Alphabet& A = s.shift.alphabet();
  json rep;
  rep["system"] = s.shift.label;
  const bool line = s.group == GroupCtx::zd(1);
  if (line) {
    json bn = json::array();
    for (Int n = 1; n <= a.steps; ++n) {
      try {
        auto r = bounded_nilpotency(f, n);
        json j = io::to_json(r);
        j["n"] = n;
        bn.push_back(j);
        if (r.all_zero) break;
      } catch (const BudgetExceeded&) {
        bn.push_back({{"n", n}, {"verdict", "BudgetExceeded"}});
        break;
      }
    }
    rep["bounded_nilpotency"] = bn;
    rep["weak_on_Z4"] = io::to_json(A, finite_system_checks(f, QuotientCtx::moduli({4}), {GroupElem{0}}));
    try {
      rep["profile"] = io::to_json(uniform_mortality_profile(f, s.shift, a.radius, a.horizon));
    } catch (const BudgetExceeded& e) {
      rep["profile"] = {{"error", e.what()}};
    }
  } else if (s.group.kind() == GroupKind::kZd) {
    std::vector<Int> m(static_cast<std::size_t>(s.group.dim()), 2);
    rep["weak_on_torus_2"] = io::to_json(A, finite_system_checks(f, QuotientCtx::moduli(m), {s.group.identity()}));
  }
  ClassifyOptions opt;
  opt.horizon = a.horizon;
  opt.radius = std::min<Int>(a.radius, line ? 6 : 1);
  opt.max_steps = a.steps;
  auto v = classify(f, s.shift, opt);
  rep["verdict"] = io::to_json(A, v);
  if (v.spaceship && line && c.render != "none") {
    auto d = spacetime_diagram(f, v.spaceship->x, 2 * v.spaceship->n + 16, -20, 20);
    render_diagram(c, "spaceship", d, A.size());
  }
  emit(c, "analysis.json", rep);
  std::cout << rep.dump(2) << "\n";
  return kOk;
}

// ---- glue ----

struct GlueArgs {
  std::string schedule, window = "-30,29,-30,29";
};

int cmd_glue(const Common& c, const GlueArgs& a) {
  auto s = load_system(c);
  if (!(s.group == GroupCtx::zd(2))) throw InputError("glue works with schedules on Z^2");
  const Alphabet& A = s.shift.alphabet();
  GluingSchedule sch;
  if (!a.schedule.empty()) sch = io::schedule_from_json(s.group, A, json::parse(io::read_file(a.schedule)));
  Rect win = parse_rect(a.window);
  Pattern out = ordinal_glue(sch, s.shift, win);
  json j{{"window", io::rect_to_json(win)}, {"pattern", io::pattern_to_json(s.group, A, out)}};
  Pattern nonzero;
  for (const auto& [g, v] : out.cells)
    if (v != 0) nonzero.cells[g] = v;
  j["nonzero"] = nonzero.size();
  emit(c, "glued.json", j);
  if (c.render != "none") render_diagram(c, "glued", window_rows(out, win), A.size());
  std::cout << json{{"window", io::rect_to_json(win)}, {"nonzero", nonzero.size()}}.dump() << "\n";
  return kOk;
}

// ---- periodize ----

struct PeriodizeArgs {
  std::string config, lattice;
  Int window = 2;
};

int cmd_periodize(const Common& c, const PeriodizeArgs& a) {
  auto s = load_system(c);
  const Alphabet& A = s.shift.alphabet();
  if (a.config.empty()) throw InputError("periodize needs --config");
  auto y = io::config_from_json(s.group, A, json::parse(io::read_file(a.config)));
  std::vector<Int> m;
  if (a.lattice.empty()) {
    m.assign(static_cast<std::size_t>(s.group.dim()), 1);
  } else {
    std::stringstream ss(a.lattice);
    std::string part;
    while (std::getline(ss, part, ',')) m.push_back(std::stoll(part));
  }
  auto r = periodize(y, QuotientCtx::moduli(m), s.shift, s.group.ball(a.window));
  json j = io::to_json(A, r);
  emit(c, "periodized.json", j);
  std::cout << j.dump(2) << "\n";
  return r.ok() ? kOk : kCheckFailed;
}

// ---- reproduce ----

int cmd_reproduce(const Common& c, const std::string& name) {
  auto b = load_example(name);
  auto results = run_properties(b);
  json rep{{"example", b.name}, {"description", b.description}};
  json props = json::array();
  bool all = true;
  for (const auto& r : results) {
    props.push_back(io::to_json(r));
    all = all && r.pass;
    std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name << "  [" << r.operation << "] expected " << r.expected
              << ", observed " << r.observed << "\n";
  }
  rep["properties"] = props;
  rep["pass"] = all;
  // artifacts: a space-time diagram for each rule on Z and any spaceship certificate
  if (b.shift && b.group == GroupCtx::zd(1)) {
    for (const auto& nr : b.rules) {
      auto cert = spaceship_search(nr.rule, *b.shift, 2, 8);
      if (cert) rep["certificates"][nr.name] = io::to_json(b.shift->alphabet(), *cert);
      Configuration seed = cert ? cert->x : Configuration::word({1, 1, 1, 1, 1, 1});
      auto d = spacetime_diagram(nr.rule, seed, 24, -24, 24);
      Common cc = c;
      if (cc.render == "none") cc.render = "pgm";
      render_diagram(cc, b.name + "_" + nr.name, d, b.shift->alphabet().size());
    }
  }
  emit(c, b.name + "_report.json", rep);
  std::cout << (all ? "all properties pass" : "some properties fail") << "\n";
  return all ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic dynamics toolkit"};
  app.require_subcommand(1);
  Common c;
  auto common = [&c](CLI::App* sub) {
    sub->add_option("--system", c.system, "system file (JSON)");
    sub->add_option("--example", c.example, "registered example name");
    sub->add_option("--rule", c.rule, "rule name inside the system");
    sub->add_option("--out-dir", c.out_dir, "directory for outputs");
    sub->add_option("--render", c.render, "pgm, svg or none")->check(CLI::IsMember({"pgm", "svg", "none"}));
    sub->add_option("--seed", c.seed, "seed for random sampling");
    sub->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
  };

  SimArgs sim;
  auto* simulate = app.add_subcommand("simulate", "iterate a rule on a configuration");
  common(simulate);
  simulate->add_option("--config", sim.config, "configuration file (JSON)");
  simulate->add_option("--word", sim.word, "word on Z, symbol names");
  simulate->add_option("--start", sim.start, "first cell of --word");
  simulate->add_option("--random-radius", sim.random_radius, "random valid configuration on ball(r)");
  simulate->add_option("--steps", sim.steps, "number of steps");

  AnalyzeArgs an;
  auto* analyze = app.add_subcommand("analyze", "nilpotency analyses");
  common(analyze);
  analyze->add_option("--horizon", an.horizon, "time horizon");
  analyze->add_option("--radius", an.radius, "support radius for profiles and seeds");
  analyze->add_option("--steps", an.steps, "largest n for bounded nilpotency");

  GlueArgs gl;
  auto* glue = app.add_subcommand("glue", "ordinal gluing of a schedule on Z^2");
  common(glue);
  glue->add_option("--schedule", gl.schedule, "schedule file (JSON); empty means no blocks");
  glue->add_option("--window", gl.window, "x0,x1,y0,y1");

  PeriodizeArgs pa;
  auto* per = app.add_subcommand("periodize", "periodize a homoclinic point");
  common(per);
  per->add_option("--config", pa.config, "finite configuration (JSON)");
  per->add_option("--lattice", pa.lattice, "moduli of K, 0 for a free coordinate (default all 1)");
  per->add_option("--window", pa.window, "radius of the agreement window");

  std::string repro_name;
  auto* repro = app.add_subcommand("reproduce", "run an example's property list");
  common(repro);
  repro->add_option("name", repro_name, "example name")->required();

  auto* list = app.add_subcommand("list", "list registered examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(c, sim);
    if (analyze->parsed()) return cmd_analyze(c, an);
    if (glue->parsed()) return cmd_glue(c, gl);
    if (per->parsed()) return cmd_periodize(c, pa);
    if (repro->parsed()) return cmd_reproduce(c, repro_name);
    if (list->parsed()) {
      for (const auto& n : example_names()) std::cout << n << "\n";
      return kOk;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const GluingError& e) {
    std::cerr << "gluing: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kOk;
}
