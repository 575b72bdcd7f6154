#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "symdyn/groups.hpp"

// Exact simulator for the endomorphism of (N u {inf})^Z with unbounded
// lookahead. Finitely supported states only.
namespace symdyn::onepoint {

using Value = std::uint64_t;
inline constexpr Value kInfinity = std::numeric_limits<Value>::max();

using State = std::map<Int, Value>;  // nonzero cells only

// kMirrored: f(x)_i = max(0, min(x_{i-1}, m) - 1), m the distance to the
// nearest nonzero cell strictly right of i (x_{i-1} - 1 when there is none).
// kLiteral is the reflected rule reading x_{i+1} and looking left.
enum class Orientation { kMirrored, kLiteral };

State step(const State& x, Orientation o = Orientation::kMirrored);
std::vector<State> orbit(const State& x, Int steps, Orientation o = Orientation::kMirrored);

// Number of times n in [from, orbit.size()) with orbit[n]_i != 0, per cell.
std::map<Int, Int> nonzero_counts(const std::vector<State>& orbit, std::size_t from = 0);

struct AtMostOnce {
  bool holds = true;
  Int cell = 0;            // first cell nonzero twice
  std::vector<Int> times;  // the times it is nonzero
};

AtMostOnce check_at_most_once(const std::vector<State>& orbit, std::size_t from = 0);

// First n <= horizon with f^n(x)_0 != 0 for x = inf at -t (mirrored) or +t (literal).
std::optional<Int> infinity_hit_time(Int t, Int horizon, Orientation o = Orientation::kMirrored);

State random_seed(std::mt19937_64& rng, Int radius, Value max_value, double inf_prob);

std::string value_string(Value v);
std::string state_string(const State& x);

}  // namespace symdyn::onepoint
