#include "symdyn/onepoint.hpp"

#include <algorithm>
#include <set>

namespace symdyn::onepoint {

namespace {

Value dec(Value v) { return v == kInfinity ? kInfinity : (v == 0 ? 0 : v - 1); }

}  // namespace

State step(const State& x, Orientation o) {
  State out;
  const bool mirrored = o == Orientation::kMirrored;
  for (const auto& [s, v] : x) {
    // only i = s + 1 (mirrored) or s - 1 (literal) can become nonzero
    Int i = mirrored ? s + 1 : s - 1;
    Value bound = kInfinity;
    if (mirrored) {
      auto it = x.upper_bound(i);
      if (it != x.end()) bound = static_cast<Value>(it->first - i);
    } else {
      auto it = x.lower_bound(i);
      if (it != x.begin()) bound = static_cast<Value>(i - std::prev(it)->first);
    }
    Value r = dec(std::min(v, bound));
    if (r != 0) out[i] = r;
  }
  return out;
}

std::vector<State> orbit(const State& x, Int steps, Orientation o) {
  std::vector<State> out{x};
  for (Int t = 0; t < steps; ++t) out.push_back(step(out.back(), o));
  return out;
}

std::map<Int, Int> nonzero_counts(const std::vector<State>& orbit, std::size_t from) {
  std::map<Int, Int> c;
  for (std::size_t n = from; n < orbit.size(); ++n)
    for (const auto& [i, v] : orbit[n]) ++c[i];
  return c;
}

AtMostOnce check_at_most_once(const std::vector<State>& orbit, std::size_t from) {
  AtMostOnce r;
  for (const auto& [i, c] : nonzero_counts(orbit, from)) {
    if (c <= 1) continue;
    r.holds = false;
    r.cell = i;
    for (std::size_t n = from; n < orbit.size(); ++n)
      if (orbit[n].count(i)) r.times.push_back(static_cast<Int>(n));
    return r;
  }
  return r;
}

std::optional<Int> infinity_hit_time(Int t, Int horizon, Orientation o) {
  State x{{o == Orientation::kMirrored ? -t : t, kInfinity}};
  for (Int n = 0; n <= horizon; ++n) {
    if (x.count(0)) return n;
    x = step(x, o);
  }
  return std::nullopt;
}

State random_seed(std::mt19937_64& rng, Int radius, Value max_value, double inf_prob) {
  std::uniform_int_distribution<Int> pos(-radius, radius);
  std::uniform_int_distribution<Int> count(1, 2 * radius + 1);
  std::uniform_int_distribution<Value> val(1, std::max<Value>(max_value, 1));
  std::bernoulli_distribution inf(inf_prob);
  State x;
  for (Int c = count(rng); c > 0; --c) x[pos(rng)] = inf(rng) ? kInfinity : val(rng);
  return x;
}

std::string value_string(Value v) { return v == kInfinity ? "inf" : std::to_string(v); }

std::string state_string(const State& x) {
  std::string s = "{";
  for (const auto& [i, v] : x) {
    if (s.size() > 1) s += ", ";
    s += std::to_string(i) + ":" + value_string(v);
  }
  return s + "}";
}

}  // namespace symdyn::onepoint
