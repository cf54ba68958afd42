#pragma once

// Simultaneous class cover: every point covered by a box of its own color,
// and no red box overlaps a blue box. Exact search, the region-map/FILL
// pipeline that turns any such cover into an interior-disjoint one, and a
// heuristic built on top of both.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "boxcover/candidates.hpp"
#include "boxcover/geometry.hpp"
#include "boxcover/rect_poly.hpp"
#include "boxcover/set_cover.hpp"

namespace boxcover {

/// Counts describing the partition of the plane at one point of the FILL loop.
struct PartitionStats {
  std::size_t regions = 0;
  std::size_t holes = 0;
  std::size_t outer_complexity = 0;

  friend bool operator==(const PartitionStats&, const PartitionStats&) = default;
};

struct SbccSolution {
  Cover cover;
  bool interior_disjoint = false;
  bool optimal = false;
  std::size_t fill_steps = 0;
  std::size_t outer_complexity_before = 0;
  std::size_t outer_complexity_after = 0;
  std::size_t candidates_considered = 0;
  std::size_t nodes = 0;
  /// Stats before the first FILL and after each one (disjointify only).
  std::vector<PartitionStats> trace;
};

// ---------------------------------------------------------------------------
// Exact search

/// Minimum SBCC. The candidates are the tight monochromatic boxes; any valid
/// cover shrinks box-by-box onto them, so nothing is lost. Red and blue boxes
/// may not overlap; with `disjoint_required` no two boxes may overlap.
inline SbccSolution solve_sbcc_exact(const BichromaticSet& s, bool disjoint_required = false,
                                     std::size_t budget = kDefaultNodeBudget) {
  SbccSolution sol;
  sol.cover.scale = s.scale();
  if (s.empty()) {
    sol.optimal = true;
    sol.interior_disjoint = true;
    return sol;
  }
  const auto cands = tight_mono_boxes(s);
  sol.candidates_considered = cands.size();
  SetCoverInstance inst;
  inst.universe = s.size();
  for (const auto& c : cands) inst.sets.push_back(c.covered);
  inst.conflicts.assign(cands.size(), Mask(cands.size()));
  for (std::size_t a = 0; a < cands.size(); ++a)
    for (std::size_t b = a + 1; b < cands.size(); ++b) {
      if (!disjoint_required && cands[a].color == cands[b].color) continue;
      if (!cands[a].box.interiors_intersect(cands[b].box)) continue;
      inst.conflicts[a].set(b);
      inst.conflicts[b].set(a);
    }
  auto incumbent = greedy_set_cover(inst);
  detail::ensure(incumbent.has_value(), "greedy SBCC got stuck although singleton boxes never conflict");
  auto result = exact_set_cover(inst, *incumbent, budget);
  std::sort(result.chosen.begin(), result.chosen.end());
  for (std::size_t i : result.chosen) sol.cover.boxes.push_back({cands[i].box, cands[i].color});
  sol.optimal = result.optimal;
  sol.nodes = result.nodes;
  sol.interior_disjoint = interiors_pairwise_disjoint(sol.cover);
  return sol;
}

// ---------------------------------------------------------------------------
// Canonical form

struct CanonicalCover {
  Cover cover;           // at scale points.scale()
  BichromaticSet points; // the input set refined by `factor`
  Coord factor = 1;
};

namespace detail {

inline bool finite_box(const XBox& b) { return b.bounded(); }

// Distinct side coordinates per axis, no side on a point coordinate,
// red/blue closures disjoint, no empty boxes.
inline bool is_canonical(const Cover& z, const BichromaticSet& s) {
  std::set<Coord> xs;
  std::set<Coord> ys;
  for (const auto& lb : z.boxes) {
    const auto& b = lb.box;
    if (!finite_box(b) || classify_box(b, s) == BoxClass::Empty) return false;
    for (Coord v : {b.lo_x(), b.hi_x()})
      if (v % s.scale() == 0 || !xs.insert(v).second) return false;
    for (Coord v : {b.lo_y(), b.hi_y()})
      if (v % s.scale() == 0 || !ys.insert(v).second) return false;
  }
  for (std::size_t a = 0; a < z.boxes.size(); ++a)
    for (std::size_t b = a + 1; b < z.boxes.size(); ++b)
      if (z.boxes[a].color != z.boxes[b].color && z.boxes[a].box.closures_intersect(z.boxes[b].box))
        return false;
  return true;
}

}  // namespace detail

/// Rewrites a valid SBCC so that red and blue boxes are disjoint as closed
/// sets and no two boxes share a side coordinate (hence same-colored boxes
/// either overlap in area or are disjoint). Coordinates are refined by
/// k + 1; box i becomes the bounding box of its points grown by k + 1 - (i+1).
/// Boxes covering no point are dropped. Already canonical input comes back
/// with factor 1 and the boxes untouched.
inline CanonicalCover shrink_canonical(const Cover& z, const BichromaticSet& s) {
  detail::require(is_valid_sbcc(z, s), "shrink_canonical needs a valid SBCC");
  if (detail::is_canonical(z, s)) return {z, s, 1};

  std::vector<std::pair<LabeledBox, Mask>> live;
  for (const auto& lb : z.boxes) {
    Mask m = covered_mask(lb.box, s);
    if (m.any()) live.push_back({lb, std::move(m)});
  }
  const Coord factor = static_cast<Coord>(live.size()) + 1;
  CanonicalCover out{Cover{{}, s.scale() * factor}, s.refined(factor), factor};
  for (std::size_t i = 0; i < live.size(); ++i) {
    const Mask& m = live[i].second;
    Coord lx = kPosInf, ly = kPosInf, hx = kNegInf, hy = kNegInf;
    for (auto p = m.find_first(); p != Mask::npos; p = m.find_next(p)) {
      const auto& q = out.points[p];
      lx = std::min(lx, q.x);
      ly = std::min(ly, q.y);
      hx = std::max(hx, q.x);
      hy = std::max(hy, q.y);
    }
    const Coord g = factor - static_cast<Coord>(i + 1);
    out.cover.boxes.push_back({XBox(lx - g, ly - g, hx + g, hy + g), live[i].first.color});
  }
  detail::ensure(is_valid_sbcc(out.cover, out.points), "shrinking broke the cover");
  detail::ensure(detail::is_canonical(out.cover, out.points), "shrinking did not reach canonical form");
  return out;
}

// ---------------------------------------------------------------------------
// Region map

/// The partition of a frame induced by a canonical cover: colored regions
/// (connected unions of same-colored boxes, later grown by FILL) and
/// uncovered cells. A hole of the partition is a bounded uncovered component;
/// a hole of a region is a bounded component of that region's complement.
class RegionMap {
 public:
  RegionMap(std::vector<Coord> xs, std::vector<Coord> ys, std::vector<int> owner, std::vector<Color> colors)
      : xs_(std::move(xs)), ys_(std::move(ys)), owner_(std::move(owner)), colors_(std::move(colors)) {}

  std::size_t nx() const noexcept { return xs_.size() - 1; }
  std::size_t ny() const noexcept { return ys_.size() - 1; }
  const std::vector<Coord>& xs() const noexcept { return xs_; }
  const std::vector<Coord>& ys() const noexcept { return ys_; }
  /// Region id of each cell (row-major), -1 when uncovered.
  const std::vector<int>& owner() const noexcept { return owner_; }
  const std::vector<Color>& colors() const noexcept { return colors_; }
  std::size_t region_count() const noexcept { return colors_.size(); }

  RectPolygon region(int id) const {
    std::vector<std::uint8_t> cells(owner_.size(), 0);
    for (std::size_t c = 0; c < owner_.size(); ++c) cells[c] = owner_[c] == id;
    return RectPolygon(xs_, ys_, std::move(cells));
  }

  /// Bounded uncovered components, each as sorted cell indices.
  std::vector<std::vector<std::size_t>> holes_of_partition() const {
    int count = 0;
    const auto label = detail::label_components(nx(), ny(), [&](std::size_t c) { return owner_[c] < 0; }, count);
    std::vector<bool> bounded(static_cast<std::size_t>(count), true);
    for (std::size_t j = 0; j < ny(); ++j)
      for (std::size_t i = 0; i < nx(); ++i) {
        if (i != 0 && j != 0 && i + 1 != nx() && j + 1 != ny()) continue;
        const int l = label[j * nx() + i];
        if (l >= 0) bounded[static_cast<std::size_t>(l)] = false;
      }
    std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(count));
    for (std::size_t c = 0; c < label.size(); ++c)
      if (label[c] >= 0 && bounded[static_cast<std::size_t>(label[c])]) out[static_cast<std::size_t>(label[c])].push_back(c);
    std::erase_if(out, [](const auto& v) { return v.empty(); });
    return out;
  }

  /// `cells` together with everything it encloses.
  std::vector<std::size_t> filled_extent(const std::vector<std::size_t>& cells) const {
    std::vector<std::uint8_t> in(owner_.size(), 0);
    for (auto c : cells) in[c] = 1;
    int count = 0;
    const auto label = detail::label_components(nx(), ny(), [&](std::size_t c) { return !in[c]; }, count);
    // cell 0 lies on the frame border, which is never enclosed
    const int outside = label[0];
    detail::ensure(outside >= 0, "frame corner cell is part of an enclosed set");
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < label.size(); ++c)
      if (label[c] != outside) out.push_back(c);
    return out;
  }

  /// The colored region bordering the outer side of a hole of the partition.
  int surrounding_region(const std::vector<std::size_t>& hole) const {
    const auto ext = filled_extent(hole);
    std::vector<std::uint8_t> in(owner_.size(), 0);
    for (auto c : ext) in[c] = 1;
    int found = -1;
    for (auto c : ext) {
      const std::size_t i = c % nx();
      const std::size_t j = c / nx();
      const std::size_t nbrs[] = {i > 0 ? c - 1 : c, i + 1 < nx() ? c + 1 : c, j > 0 ? c - nx() : c,
                                  j + 1 < ny() ? c + nx() : c};
      for (auto n : nbrs) {
        if (in[n]) continue;
        detail::ensure(owner_[n] >= 0, "uncovered cell borders a hole of the partition from outside");
        detail::ensure(found < 0 || found == owner_[n], "hole of the partition borders two colored regions from outside");
        found = owner_[n];
      }
    }
    detail::ensure(found >= 0, "hole of the partition has no surrounding region");
    return found;
  }

  std::size_t outer_complexity() const {
    std::size_t total = 0;
    for (std::size_t r = 0; r < region_count(); ++r) total += region(static_cast<int>(r)).census().outer_complexity;
    return total;
  }

  PartitionStats stats() const { return {region_count(), holes_of_partition().size(), outer_complexity()}; }

  void paint(const std::vector<std::size_t>& cells, int id) {
    for (auto c : cells) owner_[c] = id;
  }

 private:
  std::vector<Coord> xs_;
  std::vector<Coord> ys_;
  std::vector<int> owner_;
  std::vector<Color> colors_;
};

/// Region map of a canonical cover over a frame that encloses every box and
/// point with a ring of uncovered cells.
inline RegionMap build_region_map(const Cover& z, const BichromaticSet& s) {
  Coord lx = kPosInf, ly = kPosInf, hx = kNegInf, hy = kNegInf;
  auto grow = [&](Coord x0, Coord y0, Coord x1, Coord y1) {
    lx = std::min(lx, x0);
    ly = std::min(ly, y0);
    hx = std::max(hx, x1);
    hy = std::max(hy, y1);
  };
  for (const auto& p : s.points()) grow(p.x, p.y, p.x, p.y);
  std::vector<Coord> xs, ys;
  for (const auto& lb : z.boxes) {
    detail::require(lb.box.bounded(), "region map needs bounded boxes");
    grow(lb.box.lo_x(), lb.box.lo_y(), lb.box.hi_x(), lb.box.hi_y());
    xs.insert(xs.end(), {lb.box.lo_x(), lb.box.hi_x()});
    ys.insert(ys.end(), {lb.box.lo_y(), lb.box.hi_y()});
  }
  if (lx > hx) lx = ly = hx = hy = 0;
  // two frame lines per side leave a ring of uncovered cells around everything
  xs.insert(xs.end(), {lx - 2, lx - 1, hx + 1, hx + 2});
  ys.insert(ys.end(), {ly - 2, ly - 1, hy + 1, hy + 2});
  xs = detail::sorted_unique(std::move(xs));
  ys = detail::sorted_unique(std::move(ys));
  const std::size_t nx = xs.size() - 1, ny = ys.size() - 1;

  std::vector<int> color_of(nx * ny, -1);  // 0 red, 1 blue
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i) {
      const XBox cell(xs[i], ys[j], xs[i + 1], ys[j + 1]);
      for (const auto& lb : z.boxes) {
        if (!lb.box.contains(cell)) continue;
        const int c = lb.color == Color::Red ? 0 : 1;
        detail::require(color_of[j * nx + i] < 0 || color_of[j * nx + i] == c,
                        "red and blue boxes overlap; the cover is not canonical");
        color_of[j * nx + i] = c;
      }
    }
  int count = 0;
  std::vector<int> owner(nx * ny, -1);
  std::vector<Color> colors;
  for (int c : {0, 1}) {
    int k = 0;
    const auto label = detail::label_components(nx, ny, [&](std::size_t idx) { return color_of[idx] == c; }, k);
    for (std::size_t idx = 0; idx < label.size(); ++idx)
      if (label[idx] >= 0) owner[idx] = count + label[idx];
    for (int r = 0; r < k; ++r) colors.push_back(c == 0 ? Color::Red : Color::Blue);
    count += k;
  }
  RegionMap map(std::move(xs), std::move(ys), std::move(owner), std::move(colors));
  // differently colored regions must not touch, not even at a corner
  for (std::size_t j = 0; j + 1 < map.ny(); ++j)
    for (std::size_t i = 0; i + 1 < map.nx(); ++i) {
      const int q[] = {map.owner()[j * map.nx() + i], map.owner()[j * map.nx() + i + 1],
                       map.owner()[(j + 1) * map.nx() + i], map.owner()[(j + 1) * map.nx() + i + 1]};
      for (int a : q)
        for (int b : q)
          if (a >= 0 && b >= 0 && a != b)
            detail::require(false, "distinct regions touch; the cover is not canonical");
    }
  return map;
}

/// Gives the innermost hole of the partition the color of its surrounding
/// region. Asserts that the region count does not grow, the hole count drops
/// by one and the summed outer complexity does not grow.
inline RegionMap fill(const RegionMap& pi) {
  auto holes = pi.holes_of_partition();
  detail::require(!holes.empty(), "fill needs a hole of the partition");
  const auto before = pi.stats();
  std::size_t best = 0;
  std::size_t best_size = 0;
  for (std::size_t h = 0; h < holes.size(); ++h) {
    const std::size_t sz = pi.filled_extent(holes[h]).size();
    if (h == 0 || sz < best_size) {
      best = h;
      best_size = sz;
    }
  }
  RegionMap next = pi;
  next.paint(holes[best], pi.surrounding_region(holes[best]));
  const auto after = next.stats();
  detail::ensure(after.regions <= before.regions, "FILL increased the number of colored regions");
  detail::ensure(after.holes + 1 == before.holes, "FILL did not remove exactly one hole");
  detail::ensure(after.outer_complexity <= before.outer_complexity, "FILL increased the outer complexity");
  return next;
}

/// Once no hole of the partition remains, every hole of a region is exactly
/// the filled extent of one other region, and no region fills two holes.
inline bool holes_match_regions(const RegionMap& pi) {
  std::vector<std::vector<std::size_t>> extents;
  for (std::size_t r = 0; r < pi.region_count(); ++r) {
    std::vector<std::size_t> cells;
    for (std::size_t c = 0; c < pi.owner().size(); ++c)
      if (pi.owner()[c] == static_cast<int>(r)) cells.push_back(c);
    extents.push_back(pi.filled_extent(cells));
  }
  std::vector<int> used(pi.region_count(), 0);
  for (std::size_t r = 0; r < pi.region_count(); ++r) {
    const auto poly = pi.region(static_cast<int>(r));
    for (auto hole : poly.hole_cells()) {
      std::sort(hole.begin(), hole.end());
      int matches = 0;
      for (std::size_t o = 0; o < extents.size(); ++o)
        if (o != r && extents[o] == hole) {
          ++matches;
          ++used[o];
        }
      if (matches != 1) return false;
    }
  }
  return std::all_of(used.begin(), used.end(), [](int u) { return u <= 1; });
}

// ---------------------------------------------------------------------------
// Disjointify

namespace detail {

// Monotone map from refined coordinates back to `scale`: points (multiples of
// scale*factor) go home, everything between lands on an odd multiple of scale/2.
inline Coord snap(Coord v, Coord scale, Coord factor) {
  return scale * floor_div(v, scale * factor) + scale / 2;
}

}  // namespace detail

/// Interior-disjoint SBCC of at most 9k boxes from a valid SBCC of k boxes:
/// shrink to canonical form, fill every hole of the partition with the color
/// around it, then cut each colored region into rectangles.
inline SbccSolution disjointify(const Cover& z, const BichromaticSet& s) {
  detail::require(is_valid_sbcc(z, s), "disjointify needs a valid SBCC");
  SbccSolution sol;
  sol.cover.scale = s.scale();
  sol.interior_disjoint = true;
  if (s.empty()) return sol;

  const auto canon = shrink_canonical(z, s);
  const std::size_t k = canon.cover.size();
  RegionMap pi = build_region_map(canon.cover, canon.points);
  sol.trace.push_back(pi.stats());
  sol.outer_complexity_before = sol.trace.back().outer_complexity;
  const std::size_t initial_holes = sol.trace.back().holes;
  while (sol.trace.back().holes > 0) {
    pi = fill(pi);
    sol.trace.push_back(pi.stats());
    ++sol.fill_steps;
  }
  detail::ensure(sol.fill_steps == initial_holes, "FILL loop length differs from the initial hole count");
  detail::ensure(holes_match_regions(pi), "a region hole does not coincide with exactly one other region");
  sol.outer_complexity_after = sol.trace.back().outer_complexity;

  for (std::size_t r = 0; r < pi.region_count(); ++r) {
    const auto poly = pi.region(static_cast<int>(r));
    for (const auto& b : partition_exact(poly)) {
      const Coord lx = detail::snap(b.lo_x(), s.scale(), canon.factor);
      const Coord ly = detail::snap(b.lo_y(), s.scale(), canon.factor);
      const Coord hx = detail::snap(b.hi_x(), s.scale(), canon.factor);
      const Coord hy = detail::snap(b.hi_y(), s.scale(), canon.factor);
      if (lx < hx && ly < hy) sol.cover.boxes.push_back({XBox(lx, ly, hx, hy), pi.colors()[r]});
    }
  }
  std::sort(sol.cover.boxes.begin(), sol.cover.boxes.end());
  detail::ensure(is_valid_sbcc(sol.cover, s), "disjointify produced an invalid cover");
  detail::ensure(interiors_pairwise_disjoint(sol.cover), "disjointify produced overlapping boxes");
  detail::ensure(sol.cover.size() <= 9 * std::max<std::size_t>(k, 1), "disjointify exceeded 9k boxes");
  return sol;
}

/// Greedy SBCC over the tight candidates, skipping boxes that overlap a chosen
/// box of the other color. Boxes may overlap boxes of their own color.
inline Cover greedy_sbcc_cover(const BichromaticSet& s, std::size_t* candidates = nullptr) {
  Cover greedy{{}, s.scale()};
  if (s.empty()) return greedy;
  const auto cands = tight_mono_boxes(s);
  if (candidates) *candidates = cands.size();
  SetCoverInstance inst;
  inst.universe = s.size();
  for (const auto& c : cands) inst.sets.push_back(c.covered);
  inst.conflicts.assign(cands.size(), Mask(cands.size()));
  for (std::size_t a = 0; a < cands.size(); ++a)
    for (std::size_t b = a + 1; b < cands.size(); ++b)
      if (cands[a].color != cands[b].color && cands[a].box.interiors_intersect(cands[b].box)) {
        inst.conflicts[a].set(b);
        inst.conflicts[b].set(a);
      }
  const auto chosen = greedy_set_cover(inst);
  detail::ensure(chosen.has_value(), "greedy SBCC got stuck although singleton boxes never conflict");
  for (std::size_t i : *chosen) greedy.boxes.push_back({cands[i].box, cands[i].color});
  return greedy;
}

/// greedy_sbcc_cover made interior-disjoint by disjointify.
inline SbccSolution solve_sbcc_approx(const BichromaticSet& s) {
  if (s.empty()) {
    SbccSolution sol;
    sol.cover.scale = s.scale();
    sol.interior_disjoint = true;
    return sol;
  }
  std::size_t cands = 0;
  auto out = disjointify(greedy_sbcc_cover(s, &cands), s);
  out.candidates_considered = cands;
  return out;
}

}  // namespace boxcover
