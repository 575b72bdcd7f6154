#include "symdyn/io.hpp"

#include <fstream>
#include <sstream>

#include "symdyn/error.hpp"

namespace symdyn::io {

namespace {

json names(const Alphabet& a) { return json(a.names()); }

Alphabet alphabet_from(const json& j) {
  if (!j.is_array() || j.empty()) throw InputError("alphabet must be a nonempty array of names");
  std::vector<std::string> n;
  for (const auto& s : j) n.push_back(s.get<std::string>());
  return Alphabet(n);
}

Sym sym_from(const Alphabet& a, const json& j) {
  if (!j.is_string()) throw InputError("symbols are written as names");
  return a.index(j.get<std::string>());
}

json bound(Int v) {
  if (v <= -kInf) return "-inf";
  if (v >= kInf) return "inf";
  return v;
}

Int bound_from(const json& j) {
  if (j.is_string()) {
    if (j == "-inf") return -kInf;
    if (j == "inf") return kInf;
    throw InputError("rectangle bounds are integers or \"inf\"/\"-inf\"");
  }
  return j.get<Int>();
}

template <class F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

// ---- groups ----

json group_to_json(const GroupCtx& g) {
  switch (g.kind()) {
    case GroupKind::kZd:
      return {{"kind", "Zd"}, {"d", g.dim()}};
    case GroupKind::kZdQuotient:
      return {{"kind", "ZdQuotient"}, {"d", g.dim()}, {"lattice", g.lattice()->basis()}};
    case GroupKind::kHeisenberg:
      return {{"kind", "Heisenberg"}};
    case GroupKind::kLamplighter:
      return {{"kind", "Lamplighter"}};
    case GroupKind::kFree2:
      return {{"kind", "F2"}};
  }
  throw InputError("unknown group kind");
}

GroupCtx group_from_json(const json& j) {
  return guarded("group", [&] {
    const std::string k = j.at("kind").get<std::string>();
    if (k == "Zd") {
      int d = j.at("d").get<int>();
      if (d < 1 || d > 8) throw InputError("Zd dimension must be in 1..8");
      return GroupCtx::zd(d);
    }
    if (k == "ZdQuotient") {
      int d = j.at("d").get<int>();
      return GroupCtx::zd_quotient(Lattice(d, j.at("lattice").get<std::vector<std::vector<Int>>>()));
    }
    if (k == "Heisenberg") return GroupCtx::heisenberg();
    if (k == "Lamplighter") return GroupCtx::lamplighter();
    if (k == "F2") return GroupCtx::free2();
    throw InputError("unknown group kind '" + k + "'");
  });
}

json elem_to_json(const GroupCtx& g, const GroupElem& e) {
  if (g.kind() == GroupKind::kFree2) return free_word_string(e);
  return e.nf;
}

GroupElem elem_from_json(const GroupCtx& g, const json& j) {
  return guarded("group element", [&] {
    if (g.kind() == GroupKind::kFree2) {
      if (!j.is_string()) throw InputError("free-group elements are words over a, A, b, B");
      return g.canonical(free_word_parse(j.get<std::string>()));
    }
    auto v = j.get<std::vector<Int>>();
    if (g.is_zd_like() && static_cast<int>(v.size()) != g.dim()) {
      throw InputError("element has " + std::to_string(v.size()) + " coordinates, group has " +
                       std::to_string(g.dim()));
    }
    return g.canonical(GroupElem(v));
  });
}

// ---- patterns and configurations ----

json pattern_to_json(const GroupCtx& g, const Alphabet& a, const Pattern& p) {
  json cells = json::array();
  for (const auto& [e, s] : p.cells) cells.push_back({elem_to_json(g, e), a.name(s)});
  return {{"cells", cells}};
}

Pattern pattern_from_json(const GroupCtx& g, const Alphabet& a, const json& j) {
  return guarded("pattern", [&] {
    Pattern p;
    for (const auto& c : j.at("cells")) {
      if (!c.is_array() || c.size() != 2) throw InputError("pattern cells are [element, symbol] pairs");
      p.cells[elem_from_json(g, c[0])] = sym_from(a, c[1]);
    }
    return p;
  });
}

json config_to_json(const Alphabet& a, const Configuration& x) {
  json j;
  const GroupCtx& G = x.group();
  switch (x.kind()) {
    case ConfigKind::kFinite:
      j["kind"] = "finite";
      break;
    case ConfigKind::kLatticePeriodic:
      j["kind"] = "lattice_periodic";
      break;
    case ConfigKind::kStripPeriodic:
      j["kind"] = "strip_periodic";
      break;
  }
  if (x.is_periodic()) j["lattice"] = x.quotient()->lattice().basis();
  json e = json::array();
  for (const auto& [g, s] : x.entries()) e.push_back({elem_to_json(G, g), a.name(s)});
  j["entries"] = e;
  return j;
}

Configuration config_from_json(const GroupCtx& g, const Alphabet& a, const json& j) {
  return guarded("configuration", [&] {
    const std::string kind = j.at("kind").get<std::string>();
    CellMap cells;
    for (const auto& c : j.at("entries")) {
      if (!c.is_array() || c.size() != 2) throw InputError("entries are [element, symbol] pairs");
      GroupElem e = elem_from_json(g, c[0]);
      Sym s = sym_from(a, c[1]);
      if (s != 0) cells[e] = s;
    }
    if (kind == "finite") return Configuration::finite(g, cells);
    if (kind == "lattice_periodic" || kind == "strip_periodic") {
      if (g.kind() != GroupKind::kZd) throw InputError("periodic configurations live on Zd");
      QuotientCtx q(Lattice(g.dim(), j.at("lattice").get<std::vector<std::vector<Int>>>()));
      auto x = Configuration::periodic(q, cells);
      if ((kind == "lattice_periodic") != q.finite_index()) throw InputError("lattice rank does not match kind");
      return x;
    }
    throw InputError("unknown configuration kind '" + kind + "'");
  });
}

// ---- rules ----

json rule_to_json(const LocalRule& f) {
  const GroupCtx& G = f.group();
  const Alphabet& A = f.alphabet();
  json nb = json::array();
  for (const auto& n : f.neighborhood()) nb.push_back(elem_to_json(G, n));
  json table = json::object();
  for (std::size_t i = 0; i < f.table_size(); ++i) {
    std::string key;
    for (Sym s : f.decode(i)) key += (key.empty() ? "" : ",") + A.name(s);
    table[key] = A.name(f.eval_index(i));
  }
  return {{"alphabet", names(A)}, {"neighborhood", nb}, {"table", table}};
}

LocalRule builtin_rule(const GroupCtx& g, const Alphabet& a, const std::string& formula, const json& params) {
  if (formula == "zero") return zero_rule(g, a);
  if (formula == "identity") return identity_rule(g, a);
  if (formula == "shift") {
    GroupElem t = params.contains("t") ? elem_from_json(g, params.at("t")) : g.identity();
    return shift_rule(g, a, t);
  }
  if (formula == "min") {
    if (!(g == GroupCtx::zd(1)) || a.size() != 2) throw InputError("min is defined on {0,1}^Z");
    return min_rule();
  }
  if (formula == "spaceship") {
    if (!(g == GroupCtx::zd(1)) || a.size() != 3) throw InputError("spaceship is defined on {0,1,2}^Z");
    return spaceship_rule();
  }
  throw InputError("unknown rule formula '" + formula + "'");
}

LocalRule rule_from_json(const GroupCtx& g, const json& j) {
  return guarded("rule", [&] {
    Alphabet A = alphabet_from(j.at("alphabet"));
    if (j.contains("formula")) {
      return builtin_rule(g, A, j.at("formula").get<std::string>(), j.value("params", json::object()));
    }
    std::vector<GroupElem> nb;
    for (const auto& e : j.at("neighborhood")) nb.push_back(elem_from_json(g, e));
    const std::size_t k = static_cast<std::size_t>(A.size());
    std::size_t size = 1;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (size > (std::size_t{1} << 24) / k) throw InputError("rule table too large");
      size *= k;
    }
    std::vector<Sym> table(size, -1);
    for (const auto& [key, val] : j.at("table").items()) {
      std::vector<std::string> parts;
      std::stringstream ss(key);
      std::string part;
      while (std::getline(ss, part, ',')) parts.push_back(part);
      if (nb.empty() && key.empty()) parts.clear();
      if (parts.size() != nb.size()) throw InputError("table key '" + key + "' has the wrong arity");
      std::size_t idx = 0;
      for (const auto& p : parts) idx = idx * k + static_cast<std::size_t>(A.index(p));
      table[idx] = sym_from(A, val);
    }
    for (Sym s : table)
      if (s < 0) throw InputError("rule table is incomplete");
    return LocalRule(g, A, nb, table);
  });
}

// ---- systems ----

const LocalRule& SystemFile::rule(const std::string& name) const {
  if (rules.empty()) throw InputError("system has no rule");
  if (name.empty()) return rules.begin()->second.rule;
  auto it = rules.find(name);
  if (it == rules.end()) throw InputError("system has no rule '" + name + "'");
  return it->second.rule;
}

SystemFile system_from_json(const json& j) {
  return guarded("system", [&] {
    SystemFile s;
    s.version = j.value("version", 1);
    if (s.version != 1) throw InputError("unsupported system file version " + std::to_string(s.version));
    s.group_json = j.at("group");
    s.group = group_from_json(s.group_json);
    s.shift_json = j.at("subshift");
    const std::string kind = s.shift_json.at("kind").get<std::string>();
    if (kind == "example") {
      auto b = load_example(s.shift_json.at("name").get<std::string>());
      if (!b.shift) throw InputError("example '" + b.name + "' has no symbolic shift");
      if (!(b.group == s.group)) throw InputError("example group does not match the system group");
      s.shift = *b.shift;
    } else {
      Alphabet A = alphabet_from(s.shift_json.at("alphabet"));
      if (kind == "full") {
        s.shift = Subshift::full(s.group, A);
      } else if (kind == "sft") {
        std::vector<Pattern> forb;
        for (const auto& p : s.shift_json.at("forbidden")) forb.push_back(pattern_from_json(s.group, A, p));
        s.shift = Subshift::sft(s.group, A, forb);
      } else {
        throw InputError("unknown subshift kind '" + kind + "'");
      }
      s.shift.label = s.shift_json.value("label", kind);
    }
    if (s.shift_json.contains("collar")) s.shift.zero_gluing_collar = s.shift_json.at("collar").get<Int>();
    if (j.contains("rules")) {
      for (const auto& [name, r] : j.at("rules").items()) {
        json rj = r;
        if (!rj.contains("alphabet")) rj["alphabet"] = names(s.shift.alphabet());
        RuleSpec spec{r, rule_from_json(s.group, rj)};
        if (!(spec.rule.alphabet() == s.shift.alphabet())) throw InputError("rule '" + name + "' alphabet differs");
        s.rules.emplace(name, std::move(spec));
      }
    }
    if (j.contains("symmetries")) {
      for (const auto& h : j.at("symmetries")) {
        NamedSymmetry ns{h.at("name").get<std::string>(), {}};
        for (const auto& t : h.at("perm")) ns.perm.push_back(sym_from(s.shift.alphabet(), t));
        s.symmetries.push_back(std::move(ns));
      }
    }
    return s;
  });
}

json system_to_json(const SystemFile& s) {
  json j;
  j["version"] = s.version;
  j["group"] = s.group_json;
  j["subshift"] = s.shift_json;
  if (!s.rules.empty()) {
    json r = json::object();
    for (const auto& [name, spec] : s.rules) r[name] = spec.source;
    j["rules"] = r;
  }
  if (!s.symmetries.empty()) {
    json h = json::array();
    for (const auto& ns : s.symmetries) {
      json perm = json::array();
      for (Sym t : ns.perm) perm.push_back(s.shift.alphabet().name(t));
      h.push_back({{"name", ns.name}, {"perm", perm}});
    }
    j["symmetries"] = h;
  }
  return j;
}

SystemFile parse_system(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("system file is not JSON: ") + e.what());
  }
  return system_from_json(j);
}

std::string serialize_system(const SystemFile& s) { return system_to_json(s).dump(2) + "\n"; }

SystemFile system_for_example(const std::string& name) {
  auto b = load_example(name);
  if (!b.shift) throw InputError("example '" + name + "' has no symbolic shift");
  json j{{"version", 1}, {"group", group_to_json(b.group)}, {"subshift", {{"kind", "example"}, {"name", name}}}};
  json rules = json::object();
  for (const auto& r : b.rules) {
    json rj;
    if (r.rule.formula == "min" || r.rule.formula == "spaceship" || r.rule.formula == "identity") {
      rj = {{"formula", r.rule.formula}};
    } else {
      rj = rule_to_json(r.rule);
      rj.erase("alphabet");
    }
    rules[r.name] = rj;
  }
  if (!rules.empty()) j["rules"] = rules;
  if (!b.symmetries.empty()) {
    json h = json::array();
    for (const auto& ns : b.symmetries) {
      json perm = json::array();
      for (Sym t : ns.perm) perm.push_back(b.shift->alphabet().name(t));
      h.push_back({{"name", ns.name}, {"perm", perm}});
    }
    j["symmetries"] = h;
  }
  return system_from_json(j);
}

// ---- schedules ----

json rect_to_json(const Rect& r) { return json::array({bound(r.x0), bound(r.x1), bound(r.y0), bound(r.y1)}); }

Rect rect_from_json(const json& j) {
  return guarded("rectangle", [&] {
    if (!j.is_array() || j.size() != 4) throw InputError("rectangles are [x0, x1, y0, y1]");
    return Rect{bound_from(j[0]), bound_from(j[1]), bound_from(j[2]), bound_from(j[3])};
  });
}

json schedule_to_json(const GroupCtx& g, const Alphabet& a, const GluingSchedule& s) {
  json e = json::array();
  for (const auto& en : s.entries) {
    json x{{"block", rect_to_json(en.block)}};
    x["pattern"] = en.pattern ? pattern_to_json(g, a, *en.pattern) : json(nullptr);
    e.push_back(x);
  }
  return {{"R", s.R}, {"entries", e}};
}

GluingSchedule schedule_from_json(const GroupCtx& g, const Alphabet& a, const json& j) {
  return guarded("schedule", [&] {
    GluingSchedule s;
    const json& list = j.is_array() ? j : j.at("entries");
    if (j.is_object()) s.R = j.value("R", Int{0});
    for (const auto& en : list) {
      ScheduleEntry e;
      if (en.contains("pattern") && !en.at("pattern").is_null()) e.pattern = pattern_from_json(g, a, en.at("pattern"));
      if (en.contains("offset")) {
        // pattern given relative to the offset; the block is its bounding box
        if (!e.pattern) throw InputError("an offset entry needs a pattern");
        GroupElem off = elem_from_json(g, en.at("offset"));
        Pattern moved;
        for (const auto& [c, v] : e.pattern->cells) moved.cells[g.mul(off, c)] = v;
        e.pattern = moved;
        e.block = bounding_rect(moved.domain());
      } else {
        e.block = rect_from_json(en.at("block"));
      }
      s.entries.push_back(std::move(e));
    }
    return s;
  });
}

// ---- reports ----

json to_json(const Mortality& m) {
  return m.mortal ? json{{"verdict", "Mortal"}, {"n", m.time}} : json{{"verdict", "Alive"}, {"horizon", m.time}};
}

json to_json(const BoundedNilpotency& b) {
  json j{{"verdict", b.all_zero ? "YesAllZero" : "No"}, {"width", b.width}, {"offset", b.offset}};
  if (!b.all_zero) j["witness"] = b.witness;
  return j;
}

json to_json(const MortalityProfile& p) {
  json e = json::array();
  for (const auto& x : p.entries) {
    e.push_back({{"r", x.r},
                 {"max_time", x.max_time},
                 {"configs", x.configs},
                 {"alive", x.alive},
                 {"exhaustive", x.exhaustive}});
  }
  return {{"horizon", p.horizon}, {"entries", e}};
}

json to_json(const Alphabet& a, const SpaceshipCertificate& c) {
  return {{"x", config_to_json(a, c.x)}, {"n", c.n}, {"g", elem_to_json(c.x.group(), c.g)}};
}

json to_json(const Alphabet& a, const FiniteSystemReport& r) {
  json j{{"states", r.states},
         {"weak_nilpotent", r.weak_nilpotent},
         {"nilpotent", r.nilpotent},
         {"nilpotency_bound", r.nilpotency_bound},
         {"holes_bound", r.holes_bound},
         {"agree", r.agree}};
  if (r.recurrent) {
    j["recurrent"] = config_to_json(a, *r.recurrent);
    j["period"] = r.period;
  }
  return j;
}

json to_json(const Alphabet& a, const NilpotencyVerdict& v) {
  json j{{"verdict", to_string(v.kind)}, {"scope", v.scope}};
  switch (v.kind) {
    case NilpotencyVerdict::Kind::kNilpotent:
      j["n"] = v.n;
      break;
    case NilpotencyVerdict::Kind::kNotNilpotent:
      if (v.spaceship) j["spaceship"] = to_json(a, *v.spaceship);
      if (v.recurrent) j["recurrent"] = {{"x", config_to_json(a, *v.recurrent)}, {"period", v.period}};
      break;
    case NilpotencyVerdict::Kind::kUnknown:
      j["horizon"] = v.horizon;
      break;
  }
  return j;
}

json to_json(const Alphabet& a, const PeriodizeReport& r) {
  const GroupCtx& G = r.z.group();
  json n = json::array();
  for (const auto& g : r.n_set) n.push_back(elem_to_json(r.lattice.group(), g));
  return {{"F", r.lattice.lattice().basis()},
          {"m", r.m},
          {"collar", r.collar},
          {"z", config_to_json(a, r.z)},
          {"M_size", r.m_set.size()},
          {"N", n},
          {"checks",
           {{"periodic", r.periodic},
            {"window_agrees", r.window_agrees},
            {"shadow_contained", r.shadow_contained},
            {"valid", r.valid},
            {"avoids_M", r.avoids_m}}},
          {"ok", r.ok()},
          {"group", group_to_json(G)}};
}

json to_json(const GroupCtx& g, const Alphabet& a, const BlockGluingResult& r) {
  json j{{"holds", r.holds}, {"n_max", r.n_max}, {"classes", r.classes}, {"pairs_csp", r.pairs_csp}};
  if (!r.holds) {
    j["p"] = pattern_to_json(g, a, r.p);
    j["q"] = pattern_to_json(g, a, r.q);
    j["offset"] = elem_to_json(g, r.offset);
    j["distance"] = r.distance;
  }
  return j;
}

json to_json(const PropertyResult& r) {
  return {{"name", r.name},
          {"operation", r.operation},
          {"expected", r.expected},
          {"observed", r.observed},
          {"pass", r.pass}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
}

}  // namespace symdyn::io
