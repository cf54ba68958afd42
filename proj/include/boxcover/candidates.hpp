#pragma once

// Candidate box generation: inclusion-maximal monochromatic boxes and
// half-strips pinned by opposite-color blockers, tight boxes for SBCC
// search, and a general-position perturbation.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "boxcover/geometry.hpp"

namespace boxcover {

enum class Shape { Box, HalfStrip };

constexpr std::string_view to_string(Shape s) noexcept {
  return s == Shape::Box ? "box" : "halfstrip";
}

/// A box together with the label it is used under and the points it covers.
struct Candidate {
  XBox box;
  Color color = Color::Red;
  Mask covered;
};

namespace detail {

struct XY {
  Coord x, y;
};

inline Coord negate(Coord v) noexcept {
  if (v == kNegInf) return kPosInf;
  if (v == kPosInf) return kNegInf;
  return -v;
}

// Orientation that maps the requested half-strip direction onto "open to -x".
enum class Orientation { OpenLeft, OpenRight, OpenDown, OpenUp };

inline XY orient(Orientation o, XY p) noexcept {
  switch (o) {
    case Orientation::OpenLeft: return p;
    case Orientation::OpenRight: return {-p.x, p.y};
    case Orientation::OpenDown: return {p.y, p.x};
    case Orientation::OpenUp: return {-p.y, p.x};
  }
  return p;
}

inline XBox orient(Orientation o, const XBox& b) {
  switch (o) {
    case Orientation::OpenLeft: return b;
    case Orientation::OpenRight: return XBox(negate(b.hi_x()), b.lo_y(), negate(b.lo_x()), b.hi_y());
    case Orientation::OpenDown: return XBox(b.lo_y(), b.lo_x(), b.hi_y(), b.hi_x());
    case Orientation::OpenUp: return XBox(negate(b.hi_y()), b.lo_x(), negate(b.lo_y()), b.hi_x());
  }
  return b;
}

inline XBox unorient(Orientation o, const XBox& b) {
  switch (o) {
    case Orientation::OpenLeft: return b;
    case Orientation::OpenRight: return XBox(negate(b.hi_x()), b.lo_y(), negate(b.lo_x()), b.hi_y());
    case Orientation::OpenDown: return XBox(b.lo_y(), b.lo_x(), b.hi_y(), b.hi_x());
    case Orientation::OpenUp: return XBox(b.lo_y(), negate(b.hi_x()), b.hi_y(), negate(b.lo_x()));
  }
  return b;
}

// Blocker ys per x column, sorted, for O(log n) side-maximality tests.
class Columns {
 public:
  explicit Columns(const std::vector<XY>& blockers) {
    for (const auto& b : blockers) cols_[b.x].push_back(b.y);
    for (auto& [x, ys] : cols_) std::sort(ys.begin(), ys.end());
  }

  // Is there a blocker at column x strictly between lo and hi?
  bool blocks(Coord x, Coord lo, Coord hi) const {
    auto it = cols_.find(x);
    if (it == cols_.end()) return false;
    auto y = std::upper_bound(it->second.begin(), it->second.end(), lo);
    return y != it->second.end() && *y < hi;
  }

 private:
  std::map<Coord, std::vector<Coord>> cols_;
};

// Calls emit(lo, hi) for every maximal y-gap of `ys` (sorted) inside the frame.
template <typename Emit>
void for_each_gap(const std::vector<Coord>& ys, Coord frame_lo, Coord frame_hi, Emit&& emit) {
  Coord lo = frame_lo;
  for (Coord y : ys) {
    if (lo < y - 1) emit(lo, y - 1);
    lo = std::max(lo, y + 1);
  }
  if (lo < frame_hi) emit(lo, frame_hi);
}

// All inclusion-maximal boxes inside `frame` whose interior avoids every blocker.
inline std::vector<XBox> maximal_empty_boxes(std::vector<XY> blockers, const XBox& frame) {
  std::sort(blockers.begin(), blockers.end(), [](XY a, XY b) { return a.x < b.x; });
  const Columns columns(blockers);
  std::vector<Coord> lefts{frame.lo_x()};
  std::vector<Coord> rights{frame.hi_x()};
  for (const auto& b : blockers) {
    lefts.push_back(b.x + 1);
    rights.push_back(b.x - 1);
  }
  std::sort(lefts.begin(), lefts.end());
  lefts.erase(std::unique(lefts.begin(), lefts.end()), lefts.end());
  std::sort(rights.begin(), rights.end());
  rights.erase(std::unique(rights.begin(), rights.end()), rights.end());

  std::vector<XBox> out;
  for (Coord left : lefts) {
    std::vector<Coord> active;
    auto next = std::upper_bound(blockers.begin(), blockers.end(), left,
                                 [](Coord v, XY b) { return v < b.x; });
    for (Coord right : rights) {
      if (right <= left) continue;
      while (next != blockers.end() && next->x < right) {
        active.insert(std::upper_bound(active.begin(), active.end(), next->y), next->y);
        ++next;
      }
      for_each_gap(active, frame.lo_y(), frame.hi_y(), [&](Coord lo, Coord hi) {
        const bool left_max = left == frame.lo_x() || columns.blocks(left - 1, lo, hi);
        const bool right_max = right == frame.hi_x() || columns.blocks(right + 1, lo, hi);
        if (left_max && right_max) out.emplace_back(left, lo, right, hi);
      });
    }
  }
  return out;
}

// Maximal blocker-free half-strips open towards -x; finite sides clipped to the frame.
inline std::vector<XBox> maximal_empty_left_strips(std::vector<XY> blockers, const XBox& frame) {
  std::sort(blockers.begin(), blockers.end(), [](XY a, XY b) { return a.x < b.x; });
  const Columns columns(blockers);
  std::vector<Coord> rights{frame.hi_x()};
  for (const auto& b : blockers) rights.push_back(b.x - 1);
  std::sort(rights.begin(), rights.end());
  rights.erase(std::unique(rights.begin(), rights.end()), rights.end());

  std::vector<XBox> out;
  std::vector<Coord> active;
  auto next = blockers.begin();
  for (Coord right : rights) {
    while (next != blockers.end() && next->x < right) {
      active.insert(std::upper_bound(active.begin(), active.end(), next->y), next->y);
      ++next;
    }
    for_each_gap(active, frame.lo_y(), frame.hi_y(), [&](Coord lo, Coord hi) {
      if (right == frame.hi_x() || columns.blocks(right + 1, lo, hi))
        out.emplace_back(kNegInf, lo, right, hi);
    });
  }
  return out;
}

inline void sort_unique(std::vector<XBox>& boxes) {
  std::sort(boxes.begin(), boxes.end());
  boxes.erase(std::unique(boxes.begin(), boxes.end()), boxes.end());
}

}  // namespace detail

/// Every inclusion-maximal box (or half-strip) of the given color that covers
/// at least one point of that color and no point of the other color. Sides
/// sit one unit beside a blocking point or on the bounding frame; half-strips
/// keep exactly one infinite side. Distinct boxes covering the same subset are
/// all reported; see dedupe_by_subset().
inline std::vector<XBox> enumerate_maximal_mono_boxes(const BichromaticSet& s, Color color,
                                                      Shape shape) {
  if (s.count(color) == 0) return {};
  const XBox frame = bounding_frame(s);
  std::vector<detail::XY> blockers;
  for (const auto& p : s.points())
    if (p.color != color) blockers.push_back({p.x, p.y});

  std::vector<XBox> raw;
  if (shape == Shape::Box) {
    raw = detail::maximal_empty_boxes(blockers, frame);
  } else {
    using detail::Orientation;
    for (auto o : {Orientation::OpenLeft, Orientation::OpenRight, Orientation::OpenDown,
                   Orientation::OpenUp}) {
      std::vector<detail::XY> oriented;
      oriented.reserve(blockers.size());
      for (const auto& b : blockers) oriented.push_back(detail::orient(o, b));
      const XBox oframe = detail::orient(o, frame);
      for (const auto& strip : detail::maximal_empty_left_strips(std::move(oriented), oframe))
        raw.push_back(detail::unorient(o, strip));
    }
  }

  std::vector<XBox> out;
  for (const auto& box : raw) {
    const bool useful = std::any_of(s.points().begin(), s.points().end(), [&](const Point& p) {
      return p.color == color && box.covers(p);
    });
    if (useful) out.push_back(box);
  }
  detail::sort_unique(out);
  return out;
}

inline std::vector<Candidate> to_candidates(const std::vector<XBox>& boxes, Color color,
                                            const BichromaticSet& s) {
  std::vector<Candidate> out;
  out.reserve(boxes.size());
  for (const auto& b : boxes) out.push_back({b, color, covered_mask(b, s)});
  return out;
}

/// Keeps one candidate per (color, covered subset): the one with the
/// lexicographically smallest corner tuple.
inline std::vector<Candidate> dedupe_by_subset(std::vector<Candidate> cands) {
  std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.color, a.covered, a.box) < std::tie(b.color, b.covered, b.box);
  });
  std::vector<Candidate> out;
  for (auto& c : cands) {
    if (!out.empty() && out.back().color == c.color && out.back().covered == c.covered) continue;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const Candidate& a, const Candidate& b) { return a.box < b.box; });
  return out;
}

/// Monochromatic boxes shrunk to the bounding box of their covered points
/// (grown by half the scale). Any monochromatic box can be replaced by the
/// tight box of what it covers without losing points or gaining overlaps, so
/// this family is complete for SBCC search. One entry per covered subset.
inline std::vector<Candidate> tight_mono_boxes(const BichromaticSet& s) {
  std::vector<Candidate> out;
  if (s.empty()) return out;
  const Coord half = s.scale() / 2;

  std::vector<Coord> xs;
  std::vector<Coord> ys;
  for (const auto& p : s.points()) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  auto yindex = [&](Coord y) {
    return static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), y) - ys.begin());
  };

  std::vector<std::vector<std::size_t>> rows(ys.size());
  for (std::size_t x1 = 0; x1 < xs.size(); ++x1) {
    for (auto& r : rows) r.clear();
    for (std::size_t x2 = x1; x2 < xs.size(); ++x2) {
      for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i].x == xs[x2]) rows[yindex(s[i].y)].push_back(i);
      for (std::size_t y1 = 0; y1 < ys.size(); ++y1) {
        if (rows[y1].empty()) continue;
        Mask covered(s.size());
        bool red = false;
        bool blue = false;
        bool has_left = false;
        bool has_right = false;
        for (std::size_t y2 = y1; y2 < ys.size(); ++y2) {
          for (std::size_t i : rows[y2]) {
            covered.set(i);
            (s[i].color == Color::Red ? red : blue) = true;
            has_left |= s[i].x == xs[x1];
            has_right |= s[i].x == xs[x2];
          }
          if (red && blue) break;
          if (rows[y2].empty() || !has_left || !has_right) continue;
          out.push_back({XBox(xs[x1] - half, ys[y1] - half, xs[x2] + half, ys[y2] + half),
                         red ? Color::Red : Color::Blue, covered});
        }
      }
    }
  }
  return out;
}

namespace detail {

inline bool three_collinear(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const __int128 ax = pts[j].x - pts[i].x;
        const __int128 ay = pts[j].y - pts[i].y;
        const __int128 bx = pts[k].x - pts[i].x;
        const __int128 by = pts[k].y - pts[i].y;
        if (ax * by - ay * bx == 0) return true;
      }
  return false;
}

inline bool distinct_axes(const std::vector<Point>& pts) {
  std::set<Coord> xs;
  std::set<Coord> ys;
  for (const auto& p : pts)
    if (!xs.insert(p.x).second || !ys.insert(p.y).second) return false;
  return true;
}

}  // namespace detail

inline bool in_general_position(const BichromaticSet& s) {
  return detail::distinct_axes(s.points()) && !detail::three_collinear(s.points());
}

/// Moves every point by less than half the minimum coordinate gap (after
/// rescaling) so that no two points share an x or y coordinate and no three
/// are collinear. Strict order between distinct coordinates is kept, so every
/// box cover of the input maps to one of the output. When no red point shares
/// a coordinate with a blue point the BCC optimum is unchanged; ties between a
/// red and a blue coordinate can let the perturbed instance separate points
/// that no box could separate before. Deterministic in `seed`.
inline BichromaticSet perturb_general_position(const BichromaticSet& s, std::uint64_t seed) {
  if (in_general_position(s)) return s;
  const auto n = static_cast<Coord>(s.size());
  const Coord jitter = 2 * n * n + 2;     // offsets drawn from [-jitter, jitter]
  const Coord factor = 2 * jitter + 2;    // |2*offset| < factor = half the rescaled gap

  Coord max_abs = 0;
  for (const auto& p : s.points()) max_abs = std::max({max_abs, p.x < 0 ? -p.x : p.x, p.y < 0 ? -p.y : p.y});
  detail::require(max_abs < (Coord{1} << 60) / factor,
                  "coordinate range leaves no room for a sub-gap perturbation");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Coord> offset(-jitter, jitter);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> moved;
    moved.reserve(s.size());
    for (const auto& p : s.points())
      moved.push_back({p.x * factor + 2 * offset(rng), p.y * factor + 2 * offset(rng), p.color});
    if (detail::distinct_axes(moved) && !detail::three_collinear(moved))
      return BichromaticSet(std::move(moved), s.scale());
  }
  throw InternalError("perturbation failed to reach general position");
}

}  // namespace boxcover
