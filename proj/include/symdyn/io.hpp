#pragma once

#include <json.hpp>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/ca.hpp"
#include "symdyn/corpus.hpp"
#include "symdyn/gluing.hpp"
#include "symdyn/nillab.hpp"
#include "symdyn/periodize.hpp"
#include "symdyn/shifts.hpp"

namespace symdyn::io {

using nlohmann::json;

json group_to_json(const GroupCtx& g);
GroupCtx group_from_json(const json& j);

// Arrays of integers; words over a, A, b, B on F2.
json elem_to_json(const GroupCtx& g, const GroupElem& e);
GroupElem elem_from_json(const GroupCtx& g, const json& j);

json pattern_to_json(const GroupCtx& g, const Alphabet& a, const Pattern& p);
Pattern pattern_from_json(const GroupCtx& g, const Alphabet& a, const json& j);

// {"kind": "finite" | "lattice_periodic" | "strip_periodic", "lattice": [...], "entries": [[elem, sym], ...]}
json config_to_json(const Alphabet& a, const Configuration& x);
Configuration config_from_json(const GroupCtx& g, const Alphabet& a, const json& j);

// Table form; the formula form is resolved through builtin_rule.
json rule_to_json(const LocalRule& f);
LocalRule rule_from_json(const GroupCtx& g, const json& j);
// "zero", "identity", "min", "spaceship", "shift" (params {"t": elem})
LocalRule builtin_rule(const GroupCtx& g, const Alphabet& a, const std::string& formula, const json& params);

struct RuleSpec {
  json source;  // as written in the file
  LocalRule rule;
};

struct SystemFile {
  int version = 1;
  json group_json;
  json shift_json;
  GroupCtx group = GroupCtx::zd(1);
  Subshift shift = Subshift::full(GroupCtx::zd(1), Alphabet::range(2));
  std::map<std::string, RuleSpec> rules;
  std::vector<NamedSymmetry> symmetries;

  const LocalRule& rule(const std::string& name = "") const;
};

// Shift descriptors: {"kind":"full","alphabet":[..]}, {"kind":"sft","alphabet":[..],"forbidden":[pattern..]},
// {"kind":"example","name":<corpus name>}; optional "collar" sets the zero-gluing collar.
SystemFile system_from_json(const json& j);
json system_to_json(const SystemFile& s);
SystemFile parse_system(const std::string& text);
std::string serialize_system(const SystemFile& s);
SystemFile system_for_example(const std::string& name);

json schedule_to_json(const GroupCtx& g, const Alphabet& a, const GluingSchedule& s);
GluingSchedule schedule_from_json(const GroupCtx& g, const Alphabet& a, const json& j);
json rect_to_json(const Rect& r);
Rect rect_from_json(const json& j);

json to_json(const Mortality& m);
json to_json(const BoundedNilpotency& b);
json to_json(const MortalityProfile& p);
json to_json(const Alphabet& a, const SpaceshipCertificate& c);
json to_json(const Alphabet& a, const FiniteSystemReport& r);
json to_json(const Alphabet& a, const NilpotencyVerdict& v);
json to_json(const Alphabet& a, const PeriodizeReport& r);
json to_json(const GroupCtx& g, const Alphabet& a, const BlockGluingResult& r);
json to_json(const PropertyResult& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace symdyn::io
