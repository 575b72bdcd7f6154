#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symdyn/groups.hpp"

namespace symdyn {

// Symbol index into an Alphabet. Index 0 is always the pointed symbol 0.
using Sym = int;

class Alphabet {
 public:
  Alphabet() = default;
  // The first name is the zero symbol.
  explicit Alphabet(std::vector<std::string> names);
  static Alphabet range(int k);  // "0", "1", ..., "k-1"

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(Sym s) const { return names_.at(static_cast<std::size_t>(s)); }
  const std::vector<std::string>& names() const { return names_; }
  Sym index(const std::string& name) const;
  bool has(const std::string& name) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using CellMap = std::map<GroupElem, Sym>;

// Finite pattern: domain = keys, zeros stored explicitly.
struct Pattern {
  CellMap cells;

  Pattern() = default;
  explicit Pattern(CellMap c) : cells(std::move(c)) {}
  // Word on Z starting at `start`.
  static Pattern word(const std::vector<Sym>& w, Int start = 0);
  // Row-major rows[y][x] on Z^2 with `origin` the lower-left corner; rows[0] is the bottom row.
  static Pattern grid(const std::vector<std::vector<Sym>>& rows, Int x0 = 0, Int y0 = 0);

  std::vector<GroupElem> domain() const;
  std::size_t size() const { return cells.size(); }
  bool empty() const { return cells.empty(); }

  friend bool operator==(const Pattern&, const Pattern&) = default;
  friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

enum class ConfigKind { kFinite, kLatticePeriodic, kStripPeriodic };

// A configuration in Sigma^G that is either finitely supported or periodic
// under a sublattice of Z^d. Only nonzero cells are stored; keys are
// canonical elements of space() (coset representatives when periodic).
class Configuration {
 public:
  Configuration() : Configuration(GroupCtx::zd(1)) {}
  explicit Configuration(const GroupCtx& group);
  static Configuration finite(const GroupCtx& group, const CellMap& entries);
  static Configuration periodic(const QuotientCtx& q, const CellMap& cells);
  // Word on Z starting at `start`.
  static Configuration word(const std::vector<Sym>& w, Int start = 0);

  ConfigKind kind() const;
  // The group G acted on.
  const GroupCtx& group() const { return group_; }
  // Where keys live: G itself, or G/L for periodic configurations.
  const GroupCtx& space() const { return space_; }
  const std::optional<QuotientCtx>& quotient() const { return quotient_; }
  bool is_periodic() const { return quotient_.has_value(); }

  Sym at(const GroupElem& g) const;
  void set(const GroupElem& g, Sym s);
  const CellMap& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  // (g . x)_h = x_{g^{-1} h}
  Configuration translate(const GroupElem& g) const;
  friend bool operator==(const Configuration& a, const Configuration& b);

 private:
  GroupCtx group_;
  GroupCtx space_;
  std::optional<QuotientCtx> quotient_;
  CellMap entries_;
};

std::vector<GroupElem> support(const Configuration& x);
std::vector<GroupElem> shadow(const Configuration& x);
std::vector<GroupElem> k_shadow(const Configuration& x, const QuotientCtx& q);

// Restriction of x to a finite domain, zeros included.
Pattern restrict_pattern(const Configuration& x, const std::vector<GroupElem>& domain);

enum class Validity { kValid, kInvalid, kUnknownAtRadius };
enum class Exactness { kExact, kWindowSound };

class LinePresentation;

// Membership oracle for shifts not given by forbidden patterns.
class PredicateOracle {
 public:
  virtual ~PredicateOracle() = default;
  virtual std::string name() const = 0;
  virtual Exactness exactness() const = 0;
  virtual Validity pattern_valid(const Pattern& p, Int radius) const = 0;
  virtual bool config_valid(const Configuration& x) const = 0;
  // Side length of the largest local check; used as default collar width.
  virtual Int window() const = 0;
  virtual bool contains_zero_point() const { return true; }
  virtual const LinePresentation* line() const { return nullptr; }
};

enum class ShiftKind { kFull, kSft, kPredicate };

class Subshift {
 public:
  static Subshift full(const GroupCtx& group, const Alphabet& alphabet);
  static Subshift sft(const GroupCtx& group, const Alphabet& alphabet, std::vector<Pattern> forbidden);
  static Subshift predicate(const GroupCtx& group, const Alphabet& alphabet,
                            std::shared_ptr<const PredicateOracle> oracle);

  ShiftKind kind() const { return kind_; }
  const GroupCtx& group() const { return group_; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Pattern>& forbidden() const { return forbidden_; }
  const PredicateOracle* oracle() const { return oracle_.get(); }
  bool contains_zero_point() const { return contains_zero_; }
  Exactness exactness() const;
  // Exact transition-graph presentation for shifts on Z (SFT or sofic oracle).
  const LinePresentation* line() const;
  // l-infinity extent of forbidden patterns on Z^d (1 for the full shift).
  Int window() const;
  std::string label;
  // Radius c such that zero-bordered pieces whose supports are more than 2c
  // apart glue by plain superposition. Unset when no such radius is known.
  std::optional<Int> zero_gluing_collar;

 private:
  Subshift(ShiftKind kind, const GroupCtx& group, const Alphabet& alphabet);

  ShiftKind kind_;
  GroupCtx group_;
  Alphabet alphabet_;
  std::vector<Pattern> forbidden_;
  std::shared_ptr<const PredicateOracle> oracle_;
  std::shared_ptr<const LinePresentation> line_;
  bool contains_zero_ = true;
  Int window_ = 1;
};

Validity pattern_valid(const Subshift& x, const Pattern& p, Int search_radius);
// Exact membership for finite and periodic configurations (window-sound for
// predicate shifts graded that way).
bool config_valid(const Subshift& x, const Configuration& c);

// True if some forbidden pattern occurs in x at g.
bool sft_occurs_at(const Pattern& forbidden, const GroupCtx& group, const GroupElem& g,
                   const Configuration& x);

// Domain sorted by (norm, encoding).
std::vector<GroupElem> sort_domain(const GroupCtx& group, std::vector<GroupElem> domain);

// All patterns on `domain` passing pattern_valid at `radius`, in lexicographic
// order of value tuples over the sorted domain.
std::vector<Pattern> enumerate_valid_patterns(const Subshift& x, const std::vector<GroupElem>& domain,
                                              Int radius = 2, std::size_t budget = 1u << 22);

// l-infinity extent of a finite set in Z^d: 1 + max coordinate spread.
Int extent(const std::vector<GroupElem>& cells);

}  // namespace symdyn
