#pragma once

#include <optional>
#include <set>
#include <vector>

#include "symdyn/shifts.hpp"

namespace symdyn {

// Stand-in for an infinite side of a rectangle.
inline constexpr Int kInf = Int{1} << 40;

// Closed rectangle [x0, x1] x [y0, y1] on Z^2; sides may be +-kInf.
struct Rect {
  Int x0 = 0, x1 = -1, y0 = 0, y1 = -1;

  bool empty() const { return x0 > x1 || y0 > y1; }
  bool finite() const { return x0 > -kInf && x1 < kInf && y0 > -kInf && y1 < kInf; }
  bool contains(const GroupElem& g) const {
    return g.nf[0] >= x0 && g.nf[0] <= x1 && g.nf[1] >= y0 && g.nf[1] <= y1;
  }
  std::vector<GroupElem> cells() const;  // finite only, row-major
  friend bool operator==(const Rect&, const Rect&) = default;
};

Rect hull(const Rect& a, const Rect& b);
Rect intersect(const Rect& a, const Rect& b);
// l-infinity distance between nonempty rectangles (0 if they meet).
Int distance(const Rect& a, const Rect& b);
Rect bounding_rect(const std::vector<GroupElem>& cells);

struct Region {
  enum class Kind { kFinite, kComplement, kRect };
  Kind kind = Kind::kFinite;
  std::set<GroupElem> cells;
  Rect rect;

  static Region finite(const std::vector<GroupElem>& cells);
  static Region complement();
  static Region rectangle(const Rect& r);
};

struct Piece {
  Region region;
  Configuration config;  // finite support
  GroupElem translation; // empty means identity
};

struct Designation {
  std::vector<Piece> pieces;
  std::vector<GroupElem> collar;  // E; empty means {identity}
};

enum class GlueMode { kSuperpose, kSynchronizing1D, kBlockGlue2D };

struct Realization {
  Configuration y;
  std::vector<Int> shifts;  // extra translation of each piece along the first axis
};

// ball(window - 1), the default collar of a shift.
std::vector<GroupElem> default_collar(const Subshift& x);

// Throws DisjointnessViolation or BorderNotZero if the designation is malformed.
void check_designation(const Designation& d, const GroupCtx& group);

// Searches extra translations in {0..gamma}^pieces in lexicographic order.
Realization realize(const Designation& d, const Subshift& x, GlueMode mode, Int gamma = 1,
                    std::uint64_t budget = 5'000'000);

// Least r such that v 0^r and 0^r w valid imply v 0^r w valid.
Int synchronizing_radius(const Subshift& x);

struct BlockGluingResult {
  bool holds = true;
  Int n_max = 0;
  Int classes = 0;   // valid blocks after dedupe by boundary ring
  Int pairs_csp = 0; // placements settled by constraint search
  // first failing pair when !holds; q is placed at `offset` relative to p's lower-left cell
  Pattern p, q;
  GroupElem offset;
  Int distance = 0;
};

// Blocks are n x n squares, 1 <= n <= n_max, valid at radius `window`.
BlockGluingResult verify_block_gluing(const Subshift& x, Int R, Int n_max, std::uint64_t budget = 2'000'000);

struct ScheduleEntry {
  Rect block;
  std::optional<Pattern> pattern;  // absolute coordinates; none means all zeros
};

struct GluingSchedule {
  std::vector<ScheduleEntry> entries;
  Int R = 0;
};

void check_schedule(const GluingSchedule& s);

Pattern ordinal_glue(const GluingSchedule& s, const Subshift& x, const Rect& window,
                     std::uint64_t budget = 50'000'000);

// Copies of p (an n x n square at the origin) stacked vertically with gaps R,
// ordered 0, +1, -1, +2, ... and kept if they fit in `window`, flanked by
// zero half-planes x <= -R and x >= n + R - 1.
GluingSchedule figure_a(const Pattern& p, Int n, Int R, const Rect& window);
// q on [0, n-1]^2 with zero arms above and below and zero half-planes
// left and right, each at distance R.
GluingSchedule figure_b(const Pattern& q, Int n, Int R);

// Finds rows h1 < h2 = h1 + m * copy_period whose full-width slabs of height
// block_height agree and returns the (0, h2 - h1)-periodic configuration built
// from rows [h1, h2). Pairs are tried by increasing h2, then h1; a pair is
// accepted once the result is valid and, if given, agrees with `seed`.
Configuration pigeonhole_periodic(const Pattern& window_pattern, Int block_height, Int copy_period,
                                  const Subshift& x, const std::optional<Pattern>& seed = std::nullopt);

}  // namespace symdyn
