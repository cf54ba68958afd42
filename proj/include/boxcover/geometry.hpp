#pragma once

// Exact integer primitives for bichromatic box covers.
//
// Coordinates are stored scaled: a point read as (x, y) is kept as
// (scale*x, scale*y) with an even scale (2 by default). Boxes produced by the
// library put their sides at coordinates that are not multiples of the scale,
// so a point is always strictly inside or strictly outside a box and interior
// containment never needs an epsilon.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "boxcover/error.hpp"

namespace boxcover {

using Coord = std::int64_t;
using Mask = boost::dynamic_bitset<std::uint64_t>;

inline constexpr Coord kNegInf = std::numeric_limits<Coord>::min();
inline constexpr Coord kPosInf = std::numeric_limits<Coord>::max();
inline constexpr Coord kDefaultScale = 2;

enum class Color : std::uint8_t { Red, Blue };

constexpr Color opposite(Color c) noexcept {
  return c == Color::Red ? Color::Blue : Color::Red;
}

constexpr std::string_view to_string(Color c) noexcept {
  return c == Color::Red ? "RED" : "BLUE";
}

struct Point {
  Coord x = 0;
  Coord y = 0;
  Color color = Color::Red;

  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Floor division for possibly negative numerators.
constexpr Coord floor_div(Coord a, Coord b) noexcept {
  Coord q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Red/blue point set S = R u B with scaled integer coordinates.
class BichromaticSet {
 public:
  BichromaticSet() = default;

  /// Points are taken as already scaled by `scale`.
  explicit BichromaticSet(std::vector<Point> points, Coord scale = kDefaultScale)
      : points_(std::move(points)), scale_(scale) {
    detail::require(scale_ >= 2 && scale_ % 2 == 0, "scale must be a positive even integer");
    std::set<std::pair<Coord, Coord>> seen;
    for (const auto& p : points_) {
      detail::require(p.x % scale_ == 0 && p.y % scale_ == 0,
                      "point coordinates must be multiples of the scale");
      detail::require(seen.emplace(p.x, p.y).second, "two points share identical coordinates");
    }
    by_x_.resize(points_.size());
    std::iota(by_x_.begin(), by_x_.end(), std::size_t{0});
    by_y_ = by_x_;
    std::sort(by_x_.begin(), by_x_.end(), [&](std::size_t a, std::size_t b) {
      return std::tie(points_[a].x, points_[a].y) < std::tie(points_[b].x, points_[b].y);
    });
    std::sort(by_y_.begin(), by_y_.end(), [&](std::size_t a, std::size_t b) {
      return std::tie(points_[a].y, points_[a].x) < std::tie(points_[b].y, points_[b].x);
    });
  }

  /// Ingests raw integer coordinates, multiplying them by the default scale.
  static BichromaticSet from_unscaled(const std::vector<Point>& raw) {
    std::vector<Point> scaled;
    scaled.reserve(raw.size());
    for (const auto& p : raw) scaled.push_back({p.x * kDefaultScale, p.y * kDefaultScale, p.color});
    return BichromaticSet(std::move(scaled));
  }

  const std::vector<Point>& points() const noexcept { return points_; }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  Coord scale() const noexcept { return scale_; }
  const std::vector<std::size_t>& by_x() const noexcept { return by_x_; }
  const std::vector<std::size_t>& by_y() const noexcept { return by_y_; }

  std::size_t count(Color c) const {
    return static_cast<std::size_t>(
        std::count_if(points_.begin(), points_.end(), [c](const Point& p) { return p.color == c; }));
  }

  std::vector<std::size_t> indices_of(Color c) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (points_[i].color == c) out.push_back(i);
    return out;
  }

  Mask mask_of(Color c) const {
    Mask m(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i)
      if (points_[i].color == c) m.set(i);
    return m;
  }

  /// Same geometry with every coordinate (and the scale) multiplied by `factor`.
  BichromaticSet refined(Coord factor) const {
    std::vector<Point> pts = points_;
    for (auto& p : pts) {
      p.x *= factor;
      p.y *= factor;
    }
    return BichromaticSet(std::move(pts), scale_ * factor);
  }

  friend bool operator==(const BichromaticSet& a, const BichromaticSet& b) {
    return a.scale_ == b.scale_ && a.points_ == b.points_;
  }

 private:
  std::vector<Point> points_;
  Coord scale_ = kDefaultScale;
  std::vector<std::size_t> by_x_;
  std::vector<std::size_t> by_y_;
};

/// Closed axis-aligned box whose sides may be infinite (half-strips).
class XBox {
 public:
  XBox() = default;
  XBox(Coord lo_x, Coord lo_y, Coord hi_x, Coord hi_y)
      : lo_x_(lo_x), lo_y_(lo_y), hi_x_(hi_x), hi_y_(hi_y) {
    detail::require(lo_x_ < hi_x_ && lo_y_ < hi_y_, "box must have a non-empty interior");
    detail::require(lo_x_ != kPosInf && hi_x_ != kNegInf && lo_y_ != kPosInf && hi_y_ != kNegInf,
                    "box side has the wrong infinity sign");
    detail::require(unbounded_sides() <= 1, "at most one side of a box may be unbounded");
  }

  Coord lo_x() const noexcept { return lo_x_; }
  Coord lo_y() const noexcept { return lo_y_; }
  Coord hi_x() const noexcept { return hi_x_; }
  Coord hi_y() const noexcept { return hi_y_; }

  int unbounded_sides() const noexcept {
    return (lo_x_ == kNegInf) + (lo_y_ == kNegInf) + (hi_x_ == kPosInf) + (hi_y_ == kPosInf);
  }
  bool bounded() const noexcept { return unbounded_sides() == 0; }

  /// Strict interior containment.
  bool covers(Coord x, Coord y) const noexcept {
    return lo_x_ < x && x < hi_x_ && lo_y_ < y && y < hi_y_;
  }
  bool covers(const Point& p) const noexcept { return covers(p.x, p.y); }

  bool contains(const XBox& o) const noexcept {
    return lo_x_ <= o.lo_x_ && o.hi_x_ <= hi_x_ && lo_y_ <= o.lo_y_ && o.hi_y_ <= hi_y_;
  }

  bool interiors_intersect(const XBox& o) const noexcept {
    return lo_x_ < o.hi_x_ && o.lo_x_ < hi_x_ && lo_y_ < o.hi_y_ && o.lo_y_ < hi_y_;
  }

  /// Intersection of the closed boxes.
  bool closures_intersect(const XBox& o) const noexcept {
    return lo_x_ <= o.hi_x_ && o.lo_x_ <= hi_x_ && lo_y_ <= o.hi_y_ && o.lo_y_ <= hi_y_;
  }

  /// Replaces infinite sides by the frame's sides.
  XBox clipped(const XBox& frame) const {
    return XBox(std::max(lo_x_, frame.lo_x_), std::max(lo_y_, frame.lo_y_),
                std::min(hi_x_, frame.hi_x_), std::min(hi_y_, frame.hi_y_));
  }

  XBox expanded(Coord d) const {
    auto grow_lo = [d](Coord v) { return v == kNegInf ? v : v - d; };
    auto grow_hi = [d](Coord v) { return v == kPosInf ? v : v + d; };
    return XBox(grow_lo(lo_x_), grow_lo(lo_y_), grow_hi(hi_x_), grow_hi(hi_y_));
  }

  std::tuple<Coord, Coord, Coord, Coord> corners() const noexcept {
    return {lo_x_, lo_y_, hi_x_, hi_y_};
  }

  friend auto operator<=>(const XBox& a, const XBox& b) noexcept { return a.corners() <=> b.corners(); }
  friend bool operator==(const XBox& a, const XBox& b) noexcept { return a.corners() == b.corners(); }

 private:
  Coord lo_x_ = 0;
  Coord lo_y_ = 0;
  Coord hi_x_ = 1;
  Coord hi_y_ = 1;
};

struct LabeledBox {
  XBox box;
  Color color = Color::Red;

  friend auto operator<=>(const LabeledBox&, const LabeledBox&) = default;
};

/// Candidate BCC/SBCC solution. `scale` must match the point set it is checked against.
struct Cover {
  std::vector<LabeledBox> boxes;
  Coord scale = kDefaultScale;

  std::size_t size() const noexcept { return boxes.size(); }
  std::size_t count(Color c) const {
    return static_cast<std::size_t>(std::count_if(
        boxes.begin(), boxes.end(), [c](const LabeledBox& b) { return b.color == c; }));
  }
  friend bool operator==(const Cover&, const Cover&) = default;
};

enum class BoxClass { Red, Blue, Mixed, Empty };

constexpr std::string_view to_string(BoxClass c) noexcept {
  switch (c) {
    case BoxClass::Red: return "Red";
    case BoxClass::Blue: return "Blue";
    case BoxClass::Mixed: return "Mixed";
    case BoxClass::Empty: return "Empty";
  }
  return "?";
}

inline bool covers(const XBox& box, const Point& p) noexcept { return box.covers(p); }

inline Mask covered_mask(const XBox& box, const BichromaticSet& s) {
  Mask m(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (box.covers(s[i])) m.set(i);
  return m;
}

inline BoxClass classify_box(const XBox& box, const BichromaticSet& s) {
  bool red = false;
  bool blue = false;
  for (const auto& p : s.points()) {
    if (!box.covers(p)) continue;
    (p.color == Color::Red ? red : blue) = true;
  }
  if (red && blue) return BoxClass::Mixed;
  if (red) return BoxClass::Red;
  if (blue) return BoxClass::Blue;
  return BoxClass::Empty;
}

namespace detail {

inline void require_same_scale(const Cover& z, const BichromaticSet& s) {
  require(z.scale == s.scale(), "cover and point set use different coordinate scales");
}

inline bool label_matches(BoxClass cls, Color label) {
  return cls == BoxClass::Empty || (label == Color::Red ? cls == BoxClass::Red : cls == BoxClass::Blue);
}

}  // namespace detail

/// Every red point is covered and no box covers a blue point.
inline bool is_valid_bcc(const Cover& z, const BichromaticSet& s) {
  detail::require_same_scale(z, s);
  for (const auto& lb : z.boxes) {
    const auto cls = classify_box(lb.box, s);
    if (cls != BoxClass::Red && cls != BoxClass::Empty) return false;
  }
  for (const auto& p : s.points()) {
    if (p.color != Color::Red) continue;
    const bool hit = std::any_of(z.boxes.begin(), z.boxes.end(),
                                 [&](const LabeledBox& lb) { return lb.box.covers(p); });
    if (!hit) return false;
  }
  return true;
}

/// All points covered, boxes monochromatic matching their label, and no red box
/// interior meets a blue box interior. Boxes covering nothing are accepted.
inline bool is_valid_sbcc(const Cover& z, const BichromaticSet& s) {
  detail::require_same_scale(z, s);
  for (const auto& lb : z.boxes)
    if (!detail::label_matches(classify_box(lb.box, s), lb.color)) return false;
  for (const auto& p : s.points()) {
    const bool hit = std::any_of(z.boxes.begin(), z.boxes.end(),
                                 [&](const LabeledBox& lb) { return lb.box.covers(p); });
    if (!hit) return false;
  }
  for (std::size_t i = 0; i < z.boxes.size(); ++i)
    for (std::size_t j = i + 1; j < z.boxes.size(); ++j)
      if (z.boxes[i].color != z.boxes[j].color &&
          z.boxes[i].box.interiors_intersect(z.boxes[j].box))
        return false;
  return true;
}

inline bool interiors_pairwise_disjoint(const Cover& z) {
  for (std::size_t i = 0; i < z.boxes.size(); ++i)
    for (std::size_t j = i + 1; j < z.boxes.size(); ++j)
      if (z.boxes[i].box.interiors_intersect(z.boxes[j].box)) return false;
  return true;
}

/// Bounding box of the points, or nullopt for an empty set. Degenerate
/// extents are returned as given (lo may equal hi), so this is not an XBox.
struct Extent {
  Coord lo_x, lo_y, hi_x, hi_y;
};

inline std::optional<Extent> extent(const BichromaticSet& s) {
  if (s.empty()) return std::nullopt;
  Extent e{kPosInf, kPosInf, kNegInf, kNegInf};
  for (const auto& p : s.points()) {
    e.lo_x = std::min(e.lo_x, p.x);
    e.lo_y = std::min(e.lo_y, p.y);
    e.hi_x = std::max(e.hi_x, p.x);
    e.hi_y = std::max(e.hi_y, p.y);
  }
  return e;
}

/// Bounding frame used to clip unblocked candidate boxes: the point extent
/// grown by scale + 1, so its sides are never multiples of the scale.
inline XBox bounding_frame(const BichromaticSet& s) {
  const Coord m = s.scale() + 1;
  const auto e = extent(s);
  if (!e) return XBox(-m, -m, m, m);
  return XBox(e->lo_x - m, e->lo_y - m, e->hi_x + m, e->hi_y + m);
}

}  // namespace boxcover
