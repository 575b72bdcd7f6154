#include "symdyn/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>

#include "symdyn/error.hpp"

namespace symdyn {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::size_t GroupElemHash::operator()(const GroupElem& g) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ g.nf.size();
  for (Int t : g.nf) {
    h ^= static_cast<std::size_t>(t) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

// ---- Lattice ----

Lattice::Lattice(int dim, std::vector<std::vector<Int>> rows) : dim_(dim) {
  if (dim < 0) throw InputError("lattice dimension must be nonnegative");
  for (auto& r : rows) {
    if (static_cast<int>(r.size()) != dim) throw InputError("lattice generator has wrong dimension");
  }
  std::size_t top = 0;
  for (int c = 0; c < dim && top < rows.size(); ++c) {
    // Euclid on column c among rows[top..]
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = top; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || std::abs(rows[i][c]) < std::abs(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      if (rows[top][c] < 0) for (auto& x : rows[top]) x = -x;
      bool done = true;
      for (std::size_t i = top + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Int q = floor_div(rows[i][c], rows[top][c]);
        for (int k = 0; k < dim; ++k) rows[i][k] -= q * rows[top][k];
        if (rows[i][c] != 0) done = false;
      }
      if (done) {
        pivots_.push_back(c);
        ++top;
        break;
      }
    }
  }
  rows.resize(top);
  // reduce entries above pivots
  for (std::size_t i = 0; i < rows.size(); ++i) {
    int p = pivots_[i];
    for (std::size_t j = 0; j < i; ++j) {
      Int q = floor_div(rows[j][p], rows[i][p]);
      if (q != 0) for (int k = 0; k < dim; ++k) rows[j][k] -= q * rows[i][k];
    }
  }
  basis_ = std::move(rows);
}

Lattice Lattice::diagonal(const std::vector<Int>& moduli) {
  int d = static_cast<int>(moduli.size());
  std::vector<std::vector<Int>> rows;
  for (int i = 0; i < d; ++i) {
    if (moduli[i] < 0) throw InputError("modulus must be nonnegative");
    if (moduli[i] == 0) continue;
    std::vector<Int> r(d, 0);
    r[i] = moduli[i];
    rows.push_back(std::move(r));
  }
  return Lattice(d, std::move(rows));
}

std::vector<Int> Lattice::reduce(std::vector<Int> v) const {
  if (static_cast<int>(v.size()) != dim_) throw InputError("vector has wrong dimension for lattice");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    int p = pivots_[i];
    Int q = floor_div(v[p], basis_[i][p]);
    if (q != 0) for (int k = 0; k < dim_; ++k) v[k] -= q * basis_[i][k];
  }
  return v;
}

bool Lattice::contains(const std::vector<Int>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Int x) { return x == 0; });
}

bool Lattice::contains(const Lattice& other) const {
  if (other.dim_ != dim_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const std::vector<Int>& b) { return contains(b); });
}

Int Lattice::index() const {
  if (!finite_index()) throw InputError("lattice has infinite index");
  Int idx = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) idx *= basis_[i][pivots_[i]];
  return idx;
}

Lattice Lattice::scaled(Int m) const {
  if (m <= 0) throw InputError("lattice scale must be positive");
  auto rows = basis_;
  for (auto& r : rows) for (auto& x : r) x *= m;
  return Lattice(dim_, std::move(rows));
}

// ---- GroupCtx ----

namespace {

Int linf(const std::vector<Int>& v) {
  Int m = 0;
  for (Int x : v) m = std::max(m, std::abs(x));
  return m;
}

std::vector<Int> free_reduce(std::vector<Int> w) {
  std::vector<Int> out;
  out.reserve(w.size());
  for (Int t : w) {
    if (!out.empty() && out.back() == -t) out.pop_back();
    else out.push_back(t);
  }
  return out;
}

// symmetric difference of sorted lists
std::vector<Int> sym_diff(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

GroupCtx::GroupCtx(GroupKind kind, int dim, std::shared_ptr<const Lattice> lattice)
    : kind_(kind), dim_(dim), lattice_(std::move(lattice)) {
  std::vector<GroupElem> gens;
  switch (kind_) {
    case GroupKind::kZd:
    case GroupKind::kZdQuotient: {
      // king moves: every nonzero vector in {-1,0,1}^d
      std::vector<Int> v(dim_, -1);
      for (;;) {
        if (std::any_of(v.begin(), v.end(), [](Int x) { return x != 0; })) {
          gens.push_back(canonical(GroupElem(v)));
        }
        int i = dim_ - 1;
        while (i >= 0 && v[i] == 1) v[i--] = -1;
        if (i < 0) break;
        ++v[i];
      }
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
      auto id = identity();
      gens.erase(std::remove(gens.begin(), gens.end(), id), gens.end());
      break;
    }
    case GroupKind::kHeisenberg:
      gens = {GroupElem{1, 0, 0}, GroupElem{-1, 0, 0}, GroupElem{0, 1, 0}, GroupElem{0, -1, 0}};
      break;
    case GroupKind::kLamplighter:
      gens = {GroupElem{1}, GroupElem{-1}, GroupElem{0, 0}};
      break;
    case GroupKind::kFree2:
      gens = {GroupElem{1}, GroupElem{-1}, GroupElem{2}, GroupElem{-2}};
      break;
  }
  gens_ = std::make_shared<const std::vector<GroupElem>>(std::move(gens));
}

GroupCtx GroupCtx::zd(int d) {
  if (d < 1) throw InputError("Zd requires d >= 1");
  static const GroupCtx small[] = {GroupCtx(GroupKind::kZd, 1, nullptr), GroupCtx(GroupKind::kZd, 2, nullptr),
                                   GroupCtx(GroupKind::kZd, 3, nullptr)};
  if (d <= 3) return small[d - 1];
  return GroupCtx(GroupKind::kZd, d, nullptr);
}

GroupCtx GroupCtx::zd_quotient(const Lattice& lattice) {
  if (lattice.dim() < 1) throw InputError("quotient requires d >= 1");
  return GroupCtx(GroupKind::kZdQuotient, lattice.dim(), std::make_shared<const Lattice>(lattice));
}

GroupCtx GroupCtx::heisenberg() { return GroupCtx(GroupKind::kHeisenberg, 0, nullptr); }
GroupCtx GroupCtx::lamplighter() { return GroupCtx(GroupKind::kLamplighter, 0, nullptr); }
GroupCtx GroupCtx::free2() { return GroupCtx(GroupKind::kFree2, 0, nullptr); }

GroupCtx GroupCtx::base() const {
  if (kind_ == GroupKind::kZdQuotient) return zd(dim_);
  return *this;
}

bool operator==(const GroupCtx& a, const GroupCtx& b) {
  if (a.kind_ != b.kind_ || a.dim_ != b.dim_) return false;
  if (a.lattice_ && b.lattice_) return *a.lattice_ == *b.lattice_;
  return !a.lattice_ && !b.lattice_;
}

GroupElem GroupCtx::identity() const {
  switch (kind_) {
    case GroupKind::kZd:
    case GroupKind::kZdQuotient:
      return GroupElem(std::vector<Int>(dim_, 0));
    case GroupKind::kHeisenberg:
      return GroupElem{0, 0, 0};
    case GroupKind::kLamplighter:
      return GroupElem{0};
    case GroupKind::kFree2:
      return GroupElem{};
  }
  return {};
}

bool GroupCtx::is_member(const GroupElem& g) const {
  switch (kind_) {
    case GroupKind::kZd:
      return static_cast<int>(g.nf.size()) == dim_;
    case GroupKind::kZdQuotient:
      return static_cast<int>(g.nf.size()) == dim_ && lattice_->reduce(g.nf) == g.nf;
    case GroupKind::kHeisenberg:
      return g.nf.size() == 3;
    case GroupKind::kLamplighter:
      if (g.nf.empty()) return false;
      for (std::size_t i = 2; i < g.nf.size(); ++i) {
        if (g.nf[i - 1] >= g.nf[i]) return false;
      }
      return true;
    case GroupKind::kFree2:
      for (std::size_t i = 0; i < g.nf.size(); ++i) {
        Int t = g.nf[i];
        if (t != 1 && t != -1 && t != 2 && t != -2) return false;
        if (i > 0 && g.nf[i - 1] == -t) return false;
      }
      return true;
  }
  return false;
}

void GroupCtx::require_member(const GroupElem& g) const {
  bool ok = true;
  switch (kind_) {
    case GroupKind::kZd:
    case GroupKind::kZdQuotient:
      ok = static_cast<int>(g.nf.size()) == dim_;
      break;
    case GroupKind::kHeisenberg:
      ok = g.nf.size() == 3;
      break;
    case GroupKind::kLamplighter:
      ok = !g.nf.empty();
      break;
    case GroupKind::kFree2:
      break;
  }
  if (!ok) throw InputError("group element does not belong to " + describe());
}

GroupElem GroupCtx::canonical(const GroupElem& g) const {
  switch (kind_) {
    case GroupKind::kZd:
    case GroupKind::kHeisenberg:
      require_member(g);
      return g;
    case GroupKind::kZdQuotient:
      require_member(g);
      return GroupElem(lattice_->reduce(g.nf));
    case GroupKind::kLamplighter: {
      require_member(g);
      std::vector<Int> lamps(g.nf.begin() + 1, g.nf.end());
      std::sort(lamps.begin(), lamps.end());
      std::vector<Int> out{g.nf[0]};
      for (std::size_t i = 0; i < lamps.size();) {
        std::size_t j = i;
        while (j < lamps.size() && lamps[j] == lamps[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(lamps[i]);
        i = j;
      }
      return GroupElem(std::move(out));
    }
    case GroupKind::kFree2:
      for (Int t : g.nf) {
        if (t != 1 && t != -1 && t != 2 && t != -2) throw InputError("invalid free-group letter");
      }
      return GroupElem(free_reduce(g.nf));
  }
  return g;
}

GroupElem GroupCtx::mul(const GroupElem& g, const GroupElem& h) const {
  require_member(g);
  require_member(h);
  switch (kind_) {
    case GroupKind::kZd: {
      GroupElem r = g;
      for (int i = 0; i < dim_; ++i) r.nf[i] += h.nf[i];
      return r;
    }
    case GroupKind::kZdQuotient: {
      std::vector<Int> v = g.nf;
      for (int i = 0; i < dim_; ++i) v[i] += h.nf[i];
      return GroupElem(lattice_->reduce(std::move(v)));
    }
    case GroupKind::kHeisenberg:
      return GroupElem{g.nf[0] + h.nf[0], g.nf[1] + h.nf[1], g.nf[2] + h.nf[2] + g.nf[0] * h.nf[1]};
    case GroupKind::kLamplighter: {
      Int c1 = g.nf[0];
      std::vector<Int> l1(g.nf.begin() + 1, g.nf.end());
      std::vector<Int> l2;
      l2.reserve(h.nf.size() - 1);
      for (std::size_t i = 1; i < h.nf.size(); ++i) l2.push_back(h.nf[i] + c1);
      std::vector<Int> out{c1 + h.nf[0]};
      auto l = sym_diff(l1, l2);
      out.insert(out.end(), l.begin(), l.end());
      return GroupElem(std::move(out));
    }
    case GroupKind::kFree2: {
      std::vector<Int> w = g.nf;
      for (Int t : h.nf) {
        if (!w.empty() && w.back() == -t) w.pop_back();
        else w.push_back(t);
      }
      return GroupElem(std::move(w));
    }
  }
  return {};
}

GroupElem GroupCtx::inv(const GroupElem& g) const {
  require_member(g);
  switch (kind_) {
    case GroupKind::kZd: {
      GroupElem r = g;
      for (auto& x : r.nf) x = -x;
      return r;
    }
    case GroupKind::kZdQuotient: {
      std::vector<Int> v = g.nf;
      for (auto& x : v) x = -x;
      return GroupElem(lattice_->reduce(std::move(v)));
    }
    case GroupKind::kHeisenberg:
      return GroupElem{-g.nf[0], -g.nf[1], -g.nf[2] + g.nf[0] * g.nf[1]};
    case GroupKind::kLamplighter: {
      // (L, c)^{-1} = (L - c, -c)
      Int c = g.nf[0];
      std::vector<Int> out{-c};
      for (std::size_t i = 1; i < g.nf.size(); ++i) out.push_back(g.nf[i] - c);
      return GroupElem(std::move(out));
    }
    case GroupKind::kFree2: {
      std::vector<Int> w(g.nf.rbegin(), g.nf.rend());
      for (auto& t : w) t = -t;
      return GroupElem(std::move(w));
    }
  }
  return {};
}

Int GroupCtx::bfs_norm(const GroupElem& g, Int cap) const {
  GroupElem target = canonical(g);
  GroupElem id = identity();
  if (target == id) return 0;
  std::unordered_set<GroupElem, GroupElemHash> seen{id};
  std::vector<GroupElem> frontier{id};
  for (Int r = 1; r <= cap; ++r) {
    std::vector<GroupElem> next;
    for (const auto& x : frontier) {
      for (const auto& s : *gens_) {
        GroupElem y = mul(x, s);
        if (y == target) return r;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return cap;
}

Int GroupCtx::norm(const GroupElem& g) const {
  switch (kind_) {
    case GroupKind::kZd:
      require_member(g);
      return linf(g.nf);
    case GroupKind::kZdQuotient: {
      GroupElem c = canonical(g);
      Int ub = linf(c.nf);
      // a shorter lift may exist on the other side of the fundamental domain
      if (ub <= 1) return ub;
      return bfs_norm(c, ub);
    }
    case GroupKind::kHeisenberg: {
      require_member(g);
      // x^a y^b followed by |c - ab| commutators
      Int ub = std::abs(g.nf[0]) + std::abs(g.nf[1]) + 4 * std::abs(g.nf[2] - g.nf[0] * g.nf[1]);
      return bfs_norm(g, ub);
    }
    case GroupKind::kLamplighter: {
      GroupElem c = canonical(g);
      Int cur = c.nf[0];
      Int lo = std::min<Int>(0, cur), hi = std::max<Int>(0, cur);
      for (std::size_t i = 1; i < c.nf.size(); ++i) {
        lo = std::min(lo, c.nf[i]);
        hi = std::max(hi, c.nf[i]);
      }
      Int left_first = (0 - lo) + (hi - lo) + (hi - cur);
      Int right_first = (hi - 0) + (hi - lo) + (cur - lo);
      return static_cast<Int>(c.nf.size() - 1) + std::min(left_first, right_first);
    }
    case GroupKind::kFree2:
      return static_cast<Int>(canonical(g).nf.size());
  }
  return 0;
}

std::vector<GroupElem> GroupCtx::ball(Int r) const {
  if (r < 0) throw InputError("ball radius must be nonnegative");
  std::vector<std::pair<Int, GroupElem>> out;
  if (kind_ == GroupKind::kZd) {
    std::vector<Int> v(dim_, -r);
    for (;;) {
      out.emplace_back(linf(v), GroupElem(v));
      int i = dim_ - 1;
      while (i >= 0 && v[i] == r) v[i--] = -r;
      if (i < 0) break;
      ++v[i];
    }
  } else {
    GroupElem id = identity();
    std::unordered_set<GroupElem, GroupElemHash> seen{id};
    std::vector<GroupElem> frontier{id};
    out.emplace_back(0, id);
    for (Int k = 1; k <= r && !frontier.empty(); ++k) {
      std::vector<GroupElem> next;
      for (const auto& x : frontier) {
        for (const auto& s : *gens_) {
          GroupElem y = mul(x, s);
          if (seen.insert(y).second) {
            out.emplace_back(k, y);
            next.push_back(std::move(y));
          }
        }
      }
      frontier = std::move(next);
    }
  }
  std::sort(out.begin(), out.end());
  std::vector<GroupElem> res;
  res.reserve(out.size());
  for (auto& p : out) res.push_back(std::move(p.second));
  return res;
}

std::string GroupCtx::describe() const {
  switch (kind_) {
    case GroupKind::kZd:
      return "Z^" + std::to_string(dim_);
    case GroupKind::kZdQuotient: {
      std::string s = "Z^" + std::to_string(dim_) + "/<";
      bool first = true;
      for (const auto& b : lattice_->basis()) {
        if (!first) s += ",";
        first = false;
        s += "(";
        for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
        s += ")";
      }
      return s + ">";
    }
    case GroupKind::kHeisenberg:
      return "Heisenberg";
    case GroupKind::kLamplighter:
      return "Lamplighter";
    case GroupKind::kFree2:
      return "F2";
  }
  return "?";
}

// ---- QuotientCtx ----

QuotientCtx::QuotientCtx(const Lattice& lattice)
    : base_(GroupCtx::zd(lattice.dim())), group_(GroupCtx::zd_quotient(lattice)) {}

QuotientCtx QuotientCtx::from_generators(int d, std::vector<std::vector<Int>> generators) {
  return QuotientCtx(Lattice(d, std::move(generators)));
}

QuotientCtx QuotientCtx::moduli(const std::vector<Int>& m) { return QuotientCtx(Lattice::diagonal(m)); }

GroupElem QuotientCtx::project(const GroupElem& g) const { return group_.canonical(g); }

std::vector<GroupElem> QuotientCtx::representatives() const {
  const Lattice& L = lattice();
  if (!L.finite_index()) throw InputError("representatives requested for infinite quotient");
  int d = L.dim();
  std::vector<Int> hi(d);
  for (int i = 0; i < d; ++i) hi[i] = L.basis()[i][i];
  std::vector<GroupElem> out;
  out.reserve(static_cast<std::size_t>(L.index()));
  std::vector<Int> v(d, 0);
  for (;;) {
    out.emplace_back(v);
    int i = d - 1;
    while (i >= 0 && v[i] == hi[i] - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

QuotientCtx sublattice_avoiding(int d, const std::vector<GroupElem>& m) {
  Int mx = 0;
  for (const auto& v : m) {
    if (static_cast<int>(v.nf.size()) != d) throw InputError("avoid-set vector has wrong dimension");
    mx = std::max(mx, linf(v.nf));
  }
  return QuotientCtx::moduli(std::vector<Int>(d, mx + 1));
}

std::string free_word_string(const GroupElem& g) {
  std::string s;
  for (Int t : g.nf) {
    switch (t) {
      case 1: s += 'a'; break;
      case -1: s += 'A'; break;
      case 2: s += 'b'; break;
      case -2: s += 'B'; break;
      default: throw InputError("invalid free-group token");
    }
  }
  return s;
}

GroupElem free_word_parse(const std::string& s) {
  std::vector<Int> w;
  for (char c : s) {
    switch (c) {
      case 'a': w.push_back(1); break;
      case 'A': w.push_back(-1); break;
      case 'b': w.push_back(2); break;
      case 'B': w.push_back(-2); break;
      default: throw InputError(std::string("invalid free-group letter '") + c + "'");
    }
  }
  return GroupElem(free_reduce(std::move(w)));
}

}  // namespace symdyn
