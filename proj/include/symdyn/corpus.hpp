#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/ca.hpp"
#include "symdyn/shifts.hpp"

namespace symdyn {

struct PropertyOutcome {
  bool pass = false;
  std::string observed;
};

struct ExpectedProperty {
  std::string name;
  std::string operation;  // library call the check exercises
  std::string expected;
  std::function<PropertyOutcome()> check;
};

struct NamedRule {
  std::string name;
  LocalRule rule;
};

struct NamedSymmetry {
  std::string name;
  std::vector<Sym> perm;  // symbol permutation, perm[0] = 0
};

struct ExampleBundle {
  std::string name;
  std::string description;
  GroupCtx group = GroupCtx::zd(1);
  std::optional<Subshift> shift;  // none for onepoint-ca, whose alphabet is infinite
  bool expansive = true;
  std::vector<NamedRule> rules;
  std::vector<NamedSymmetry> symmetries;
  std::vector<ExpectedProperty> properties;

  const LocalRule& rule(const std::string& name) const;
};

struct PropertyResult {
  std::string name;
  std::string operation;
  std::string expected;
  std::string observed;
  bool pass = false;
};

std::vector<std::string> example_names();
ExampleBundle load_example(const std::string& name);
std::vector<PropertyResult> run_properties(const ExampleBundle& b);

// The systems themselves.
LocalRule spaceship_rule();
Subshift spaceship_shift();
Subshift even_shift();
Subshift squares_shift();
Subshift arrow_sft();
Subshift north_or_east();
// Forbids words of length k*k with more than k nonzero symbols.
Subshift density_bounded(int k);
Subshift reversal_union();

// Word-level membership for the union of Y and its reversal.
bool reversal_union_word(const std::vector<Sym>& w);

}  // namespace symdyn
