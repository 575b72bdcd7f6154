#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symdyn/ca.hpp"
#include "symdyn/shifts.hpp"

namespace symdyn {

struct Mortality {
  bool mortal = false;
  Int time = 0;  // least n with f^n(x) = 0, or the horizon when alive
};

Mortality mortality(const LocalRule& f, const Configuration& x, Int horizon);

struct BoundedNilpotency {
  bool all_zero = true;
  Int width = 0;             // n (hi - lo) + 1
  Int offset = 0;            // witness[0] sits at cell offset
  std::vector<Sym> witness;  // f^n(witness)_0 != 0
};

// Decides whether f^n is the zero map on the full shift over Z.
BoundedNilpotency bounded_nilpotency(const LocalRule& f, Int n, std::uint64_t budget = 1u << 26);

struct ProfileEntry {
  Int r = 0;
  Int max_time = 0;        // over mortal configurations
  std::size_t configs = 0;
  std::size_t alive = 0;   // not mortal by the horizon
  bool exhaustive = true;
};

struct MortalityProfile {
  Int horizon = 0;
  std::vector<ProfileEntry> entries;
};

// Every valid configuration with support in [-r, r], r = 0..r_max.
MortalityProfile uniform_mortality_profile(const LocalRule& f, const Subshift& x, Int r_max, Int horizon,
                                           std::uint64_t budget = 1u << 24);

// Valid finite configurations of a shift on Z with support in [lo, hi], in
// lexicographic order of the words.
std::vector<LineWord> enumerate_line_configs(const Subshift& x, Int lo, Int hi, std::uint64_t budget = 1u << 24);

struct SpaceshipCertificate {
  Configuration x;
  Int n = 0;
  GroupElem g;
};

bool verify_spaceship(const LocalRule& f, const SpaceshipCertificate& c);
std::optional<SpaceshipCertificate> spaceship_search(const LocalRule& f, const Subshift& x, Int r, Int horizon,
                                                     std::uint64_t budget = 1u << 24);

using Diagram = std::vector<std::vector<Sym>>;  // rows = time steps

// Rows 0..T of the orbit of x on cells [lo, hi].
Diagram spacetime_diagram(const LocalRule& f, const Configuration& x, Int steps, Int lo, Int hi);

struct SpacetimePath {
  std::vector<Int> column;  // m_k, one per row of the nonempty prefix
  Int jump = 0;             // max |m_{k+1} - m_k|
  Int halo = 0;             // max distance from a nonzero cell to the path in its row
};

std::optional<SpacetimePath> spacetime_path(const Diagram& d, Int jump_bound = -1);

struct FiniteSystemReport {
  std::size_t states = 0;
  bool weak_nilpotent = false;
  bool nilpotent = false;
  Int nilpotency_bound = -1;  // least n with f^n = 0 when nilpotent
  Int holes_bound = -1;       // max first time an orbit is 0 on the window, -1 if some orbit never is
  bool agree = false;
  std::optional<Configuration> recurrent;  // nonzero periodic state when not weakly nilpotent
  Int period = 0;
};

FiniteSystemReport finite_system_checks(const LocalRule& f, const QuotientCtx& q,
                                        const std::vector<GroupElem>& eps_window,
                                        std::size_t state_budget = 1u << 22);

struct Fraction {
  Int num = 0;
  Int den = 1;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

Fraction trace_zero_density(const LocalRule& f, const Configuration& x, const GroupElem& g, Int horizon);

struct NilpotencyVerdict {
  enum class Kind { kNilpotent, kNotNilpotent, kUnknown };
  Kind kind = Kind::kUnknown;
  Int n = 0;                                   // Nilpotent
  std::optional<SpaceshipCertificate> spaceship;
  std::optional<Configuration> recurrent;      // nonzero periodic point
  Int period = 0;
  Int horizon = 0;
  std::string scope;
};

struct ClassifyOptions {
  Int max_steps = 6;    // bounded nilpotency up to this n
  Int radius = 4;       // spaceship seeds
  Int horizon = 64;
  Int ring_max = 4;     // periodic points on Z_p, p <= ring_max
};

NilpotencyVerdict classify(const LocalRule& f, const Subshift& x, const ClassifyOptions& opt = {});

std::string to_string(NilpotencyVerdict::Kind k);

}  // namespace symdyn
