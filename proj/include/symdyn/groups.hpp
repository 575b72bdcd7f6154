#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

namespace symdyn {

using Int = std::int64_t;

// Group element in normal form. The tokens are interpreted by the GroupCtx
// that produced the element:
//   Zd, Zd quotient: coordinates (quotients keep the canonical coset rep)
//   Heisenberg:      (a, b, c) with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')
//   Lamplighter:     cursor followed by the strictly increasing lamp positions
//   Free2:           freely reduced word, letters a=1, A=-1, b=2, B=-2
// Equal elements have identical token vectors.
struct GroupElem {
  std::vector<Int> nf;

  GroupElem() = default;
  explicit GroupElem(std::vector<Int> tokens) : nf(std::move(tokens)) {}
  GroupElem(std::initializer_list<Int> tokens) : nf(tokens) {}

  friend bool operator==(const GroupElem&, const GroupElem&) = default;
  friend auto operator<=>(const GroupElem&, const GroupElem&) = default;
};

struct GroupElemHash {
  std::size_t operator()(const GroupElem& g) const noexcept;
};

enum class GroupKind { kZd, kZdQuotient, kHeisenberg, kLamplighter, kFree2 };

// Sublattice of Z^d, stored in Hermite normal form: rows in echelon form with
// positive pivots and entries above each pivot reduced into [0, pivot).
class Lattice {
 public:
  Lattice(int dim, std::vector<std::vector<Int>> generators);

  static Lattice diagonal(const std::vector<Int>& moduli);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::vector<Int>>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Canonical representative of v + L.
  std::vector<Int> reduce(std::vector<Int> v) const;
  bool contains(const std::vector<Int>& v) const;
  bool contains(const Lattice& other) const;

  bool finite_index() const { return rank() == dim_; }
  // Number of cosets; throws if the index is infinite.
  Int index() const;

  // { m * v : v in L }.
  Lattice scaled(Int m) const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.dim_ == b.dim_ && a.basis_ == b.basis_;
  }

 private:
  int dim_;
  std::vector<std::vector<Int>> basis_;
  std::vector<int> pivots_;
};

// A finitely generated group with decidable word problem. Immutable value.
class GroupCtx {
 public:
  static GroupCtx zd(int d);
  static GroupCtx zd_quotient(const Lattice& lattice);
  static GroupCtx heisenberg();
  static GroupCtx lamplighter();
  static GroupCtx free2();

  GroupKind kind() const { return kind_; }
  // Rank d for Zd and its quotients, 0 otherwise.
  int dim() const { return dim_; }
  bool is_zd_like() const { return kind_ == GroupKind::kZd || kind_ == GroupKind::kZdQuotient; }
  bool is_abelian() const { return is_zd_like(); }
  // Non-null for quotients.
  const Lattice* lattice() const { return lattice_.get(); }
  // The group this context is a quotient of (itself for non-quotients).
  GroupCtx base() const;

  GroupElem identity() const;
  GroupElem mul(const GroupElem& g, const GroupElem& h) const;
  GroupElem inv(const GroupElem& g) const;
  // Validates g; for quotients also reduces it to its coset representative.
  GroupElem canonical(const GroupElem& g) const;
  bool is_member(const GroupElem& g) const;

  // Symmetric generating set defining the word metric (king moves on Zd).
  const std::vector<GroupElem>& generators() const { return *gens_; }

  // Word norm: l-infinity on Zd, word length elsewhere.
  Int norm(const GroupElem& g) const;

  // All elements of norm <= r, ordered by (norm, encoding).
  std::vector<GroupElem> ball(Int r) const;

  std::string describe() const;

  friend bool operator==(const GroupCtx& a, const GroupCtx& b);

 private:
  GroupCtx(GroupKind kind, int dim, std::shared_ptr<const Lattice> lattice);
  Int bfs_norm(const GroupElem& g, Int cap) const;
  void require_member(const GroupElem& g) const;

  GroupKind kind_;
  int dim_ = 0;
  std::shared_ptr<const Lattice> lattice_;
  std::shared_ptr<const std::vector<GroupElem>> gens_;
};

// Z^d modulo a sublattice L, with projection onto canonical coset reps.
class QuotientCtx {
 public:
  explicit QuotientCtx(const Lattice& lattice);

  static QuotientCtx from_generators(int d, std::vector<std::vector<Int>> generators);
  // Diagonal lattice; modulus 0 leaves that coordinate free.
  static QuotientCtx moduli(const std::vector<Int>& m);

  const GroupCtx& base() const { return base_; }
  const GroupCtx& group() const { return group_; }
  const Lattice& lattice() const { return *group_.lattice(); }

  GroupElem project(const GroupElem& g) const;
  bool finite_index() const { return lattice().finite_index(); }
  Int index() const { return lattice().index(); }
  // All canonical coset representatives (finite index only), sorted by encoding.
  std::vector<GroupElem> representatives() const;

  friend bool operator==(const QuotientCtx& a, const QuotientCtx& b) {
    return a.lattice() == b.lattice();
  }

 private:
  GroupCtx base_;
  GroupCtx group_;
};

// Deterministic finite-index sublattice L with L ∩ M ⊆ {0}: m Z^d where
// m = 1 + max ||v||_inf over M.
QuotientCtx sublattice_avoiding(int d, const std::vector<GroupElem>& m);

Int floor_div(Int a, Int b);

// Free-group letters.
inline constexpr Int kLetterA = 1;
inline constexpr Int kLetterB = 2;

std::string free_word_string(const GroupElem& g);
GroupElem free_word_parse(const std::string& s);

}  // namespace symdyn
