#pragma once

// Rectilinear polygons stored as cell sets on a compressed coordinate grid.
//
// A polygon is a 4-connected set of grid cells. Vertices are read off the
// 2x2 cell neighbourhood of each grid point: one filled cell is a convex
// vertex, three filled cells a reflex vertex. Two diagonally opposite filled
// cells (a pinch, where the polygon touches itself at a point) count as two
// reflex vertices, and complement components are taken 4-connected, which
// keeps r = c - 4 + 4h exact for every cell set.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <vector>

#include "boxcover/geometry.hpp"
#include "boxcover/set_cover.hpp"

namespace boxcover {

struct GridVertex {
  Coord x = 0;
  Coord y = 0;
  bool reflex = false;

  friend auto operator<=>(const GridVertex&, const GridVertex&) = default;
};

struct VertexCensus {
  std::size_t convex = 0;
  std::size_t reflex = 0;
  std::size_t holes = 0;
  std::size_t outer_complexity = 0;

  std::size_t vertices() const noexcept { return convex + reflex; }
  friend bool operator==(const VertexCensus&, const VertexCensus&) = default;
};

namespace detail {

inline std::vector<Coord> sorted_unique(std::vector<Coord> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// 4-connected component labels of cells where `member(idx)` holds; -1 elsewhere.
template <typename Member>
std::vector<int> label_components(std::size_t nx, std::size_t ny, Member&& member, int& count) {
  std::vector<int> label(nx * ny, -1);
  count = 0;
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < nx * ny; ++start) {
    if (label[start] != -1 || !member(start)) continue;
    label[start] = count;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t c = stack.back();
      stack.pop_back();
      const std::size_t i = c % nx;
      const std::size_t j = c / nx;
      auto visit = [&](std::size_t n) {
        if (label[n] == -1 && member(n)) {
          label[n] = count;
          stack.push_back(n);
        }
      };
      if (i > 0) visit(c - 1);
      if (i + 1 < nx) visit(c + 1);
      if (j > 0) visit(c - nx);
      if (j + 1 < ny) visit(c + nx);
    }
    ++count;
  }
  return label;
}

}  // namespace detail

class RectPolygon {
 public:
  /// `cells` is row-major over (xs.size()-1) x (ys.size()-1) cells; nonzero = inside.
  RectPolygon(std::vector<Coord> xs, std::vector<Coord> ys, std::vector<std::uint8_t> cells)
      : xs_(std::move(xs)), ys_(std::move(ys)), cells_(std::move(cells)) {
    detail::require(xs_.size() >= 2 && ys_.size() >= 2, "polygon grid needs at least one cell");
    detail::require(std::is_sorted(xs_.begin(), xs_.end()) &&
                        std::adjacent_find(xs_.begin(), xs_.end()) == xs_.end() &&
                        std::is_sorted(ys_.begin(), ys_.end()) &&
                        std::adjacent_find(ys_.begin(), ys_.end()) == ys_.end(),
                    "polygon grid lines must be strictly increasing");
    detail::require(cells_.size() == nx() * ny(), "cell mask does not match the grid");
    int comps = 0;
    detail::label_components(nx(), ny(), [&](std::size_t c) { return cells_[c] != 0; }, comps);
    detail::require(comps == 1, "polygon cells must form exactly one 4-connected component");
    analyze();
  }

  std::size_t nx() const noexcept { return xs_.size() - 1; }
  std::size_t ny() const noexcept { return ys_.size() - 1; }
  const std::vector<Coord>& xs() const noexcept { return xs_; }
  const std::vector<Coord>& ys() const noexcept { return ys_; }
  const std::vector<std::uint8_t>& cells() const noexcept { return cells_; }

  bool filled(std::ptrdiff_t i, std::ptrdiff_t j) const noexcept {
    if (i < 0 || j < 0 || i >= static_cast<std::ptrdiff_t>(nx()) ||
        j >= static_cast<std::ptrdiff_t>(ny()))
      return false;
    return cells_[static_cast<std::size_t>(j) * nx() + static_cast<std::size_t>(i)] != 0;
  }

  std::size_t cell_count() const {
    return static_cast<std::size_t>(std::count_if(cells_.begin(), cells_.end(), [](auto c) { return c != 0; }));
  }

  XBox cell_box(std::size_t i, std::size_t j) const { return XBox(xs_[i], ys_[j], xs_[i + 1], ys_[j + 1]); }

  const VertexCensus& census() const noexcept { return census_; }
  const std::vector<GridVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<GridVertex>& outer_hull() const noexcept { return outer_hull_; }
  const std::vector<std::vector<GridVertex>>& holes() const noexcept { return hole_vertices_; }
  /// Cell indices (row-major) of each hole.
  const std::vector<std::vector<std::size_t>>& hole_cells() const noexcept { return hole_cells_; }

  /// Tight bounding box of the filled cells.
  XBox bounds() const {
    std::size_t i0 = nx(), i1 = 0, j0 = ny(), j1 = 0;
    for (std::size_t j = 0; j < ny(); ++j)
      for (std::size_t i = 0; i < nx(); ++i)
        if (filled(static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(j))) {
          i0 = std::min(i0, i);
          i1 = std::max(i1, i);
          j0 = std::min(j0, j);
          j1 = std::max(j1, j);
        }
    return XBox(xs_[i0], ys_[j0], xs_[i1 + 1], ys_[j1 + 1]);
  }

  /// Is (x, y) in the closed polygon? Coordinates are in grid units.
  bool closure_contains(Coord x, Coord y) const {
    auto near = [](const std::vector<Coord>& lines, Coord v) {
      const auto k = static_cast<std::ptrdiff_t>(std::upper_bound(lines.begin(), lines.end(), v) - lines.begin()) - 1;
      return std::pair<std::ptrdiff_t, std::ptrdiff_t>{k - 1, k};
    };
    const auto [i0, i1] = near(xs_, x);
    const auto [j0, j1] = near(ys_, y);
    for (auto i = i0; i <= i1; ++i)
      for (auto j = j0; j <= j1; ++j) {
        if (!filled(i, j)) continue;
        const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
        if (xs_[ui] <= x && x <= xs_[ui + 1] && ys_[uj] <= y && y <= ys_[uj + 1]) return true;
      }
    return false;
  }

 private:
  void analyze() {
    // Complement labels on a grid padded by one empty cell on each side.
    const std::size_t px = nx() + 2;
    const std::size_t py = ny() + 2;
    auto padded_filled = [&](std::size_t c) {
      const auto i = static_cast<std::ptrdiff_t>(c % px) - 1;
      const auto j = static_cast<std::ptrdiff_t>(c / px) - 1;
      return filled(i, j);
    };
    int comps = 0;
    const auto label =
        detail::label_components(px, py, [&](std::size_t c) { return !padded_filled(c); }, comps);
    const int outer = label[0];
    auto comp_at = [&](std::ptrdiff_t i, std::ptrdiff_t j) {
      return label[static_cast<std::size_t>(j + 1) * px + static_cast<std::size_t>(i + 1)];
    };

    std::map<int, std::size_t> hole_slot;
    for (int c = 0; c < comps; ++c)
      if (c != outer) hole_slot.emplace(c, hole_slot.size());
    hole_vertices_.assign(hole_slot.size(), {});
    hole_cells_.assign(hole_slot.size(), {});
    for (std::size_t j = 0; j < ny(); ++j)
      for (std::size_t i = 0; i < nx(); ++i) {
        if (filled(static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(j))) continue;
        const int c = comp_at(static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(j));
        if (c != outer) hole_cells_[hole_slot.at(c)].push_back(j * nx() + i);
      }

    auto record = [&](Coord x, Coord y, bool reflex, int comp) {
      GridVertex v{x, y, reflex};
      vertices_.push_back(v);
      (reflex ? census_.reflex : census_.convex) += 1;
      if (comp == outer) {
        outer_hull_.push_back(v);
      } else {
        hole_vertices_[hole_slot.at(comp)].push_back(v);
      }
    };

    for (std::size_t gj = 0; gj <= ny(); ++gj) {
      for (std::size_t gi = 0; gi <= nx(); ++gi) {
        const auto i = static_cast<std::ptrdiff_t>(gi);
        const auto j = static_cast<std::ptrdiff_t>(gj);
        const bool bl = filled(i - 1, j - 1), br = filled(i, j - 1);
        const bool tl = filled(i - 1, j), tr = filled(i, j);
        const int n = bl + br + tl + tr;
        const Coord x = xs_[gi];
        const Coord y = ys_[gj];
        if (n == 1) {
          // the three empty cells are mutually 4-connected
          const int comp = !bl ? comp_at(i - 1, j - 1) : comp_at(i, j);
          record(x, y, false, comp);
        } else if (n == 3) {
          const int comp = !bl   ? comp_at(i - 1, j - 1)
                           : !br ? comp_at(i, j - 1)
                           : !tl ? comp_at(i - 1, j)
                                 : comp_at(i, j);
          record(x, y, true, comp);
        } else if (n == 2 && bl == tr) {
          if (bl) {
            record(x, y, true, comp_at(i, j - 1));
            record(x, y, true, comp_at(i - 1, j));
          } else {
            record(x, y, true, comp_at(i - 1, j - 1));
            record(x, y, true, comp_at(i, j));
          }
        }
      }
    }
    census_.holes = hole_slot.size();
    census_.outer_complexity = outer_hull_.size();

    const auto c = static_cast<long long>(census_.convex);
    const auto r = static_cast<long long>(census_.reflex);
    const auto h = static_cast<long long>(census_.holes);
    if (r != c - 4 + 4 * h) {
      std::string where = vertices_.empty() ? std::string("no vertices")
                                            : "first vertex at (" + std::to_string(vertices_.front().x) +
                                                  ", " + std::to_string(vertices_.front().y) + ")";
      throw InternalError("vertex census violates r = c - 4 + 4h: c=" + std::to_string(c) +
                          " r=" + std::to_string(r) + " h=" + std::to_string(h) + "; " + where);
    }
  }

  std::vector<Coord> xs_;
  std::vector<Coord> ys_;
  std::vector<std::uint8_t> cells_;
  VertexCensus census_;
  std::vector<GridVertex> vertices_;
  std::vector<GridVertex> outer_hull_;
  std::vector<std::vector<GridVertex>> hole_vertices_;
  std::vector<std::vector<std::size_t>> hole_cells_;
};

/// (convex, reflex, holes) of a polygon; the identity r = c - 4 + 4h is
/// checked at construction.
inline VertexCensus vertex_census(const RectPolygon& p) { return p.census(); }

/// Splits a cell mask on a grid into its 4-connected components.
inline std::vector<RectPolygon> components_of(const std::vector<Coord>& xs, const std::vector<Coord>& ys,
                                              const std::vector<std::uint8_t>& mask) {
  const std::size_t nx = xs.size() - 1;
  const std::size_t ny = ys.size() - 1;
  int count = 0;
  const auto label = detail::label_components(nx, ny, [&](std::size_t c) { return mask[c] != 0; }, count);
  std::vector<RectPolygon> out;
  for (int k = 0; k < count; ++k) {
    std::vector<std::uint8_t> cells(nx * ny, 0);
    for (std::size_t c = 0; c < nx * ny; ++c)
      if (label[c] == k) cells[c] = 1;
    out.emplace_back(xs, ys, std::move(cells));
  }
  return out;
}

/// Connected components of the union of boxes (clipped to the frame). Boxes
/// that meet in a single point land in different components.
inline std::vector<RectPolygon> from_boxes(const std::vector<XBox>& boxes, const XBox& frame) {
  if (boxes.empty()) return {};
  std::vector<XBox> clipped;
  std::vector<Coord> xs;
  std::vector<Coord> ys;
  for (const auto& b : boxes) {
    clipped.push_back(b.clipped(frame));
    xs.insert(xs.end(), {clipped.back().lo_x(), clipped.back().hi_x()});
    ys.insert(ys.end(), {clipped.back().lo_y(), clipped.back().hi_y()});
  }
  xs = detail::sorted_unique(std::move(xs));
  ys = detail::sorted_unique(std::move(ys));
  const std::size_t nx = xs.size() - 1;
  const std::size_t ny = ys.size() - 1;
  std::vector<std::uint8_t> mask(nx * ny, 0);
  for (const auto& b : clipped) {
    const auto i0 = static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), b.lo_x()) - xs.begin());
    const auto i1 = static_cast<std::size_t>(std::lower_bound(xs.begin(), xs.end(), b.hi_x()) - xs.begin());
    const auto j0 = static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), b.lo_y()) - ys.begin());
    const auto j1 = static_cast<std::size_t>(std::lower_bound(ys.begin(), ys.end(), b.hi_y()) - ys.begin());
    for (std::size_t j = j0; j < j1; ++j)
      for (std::size_t i = i0; i < i1; ++i) mask[j * nx + i] = 1;
  }
  return components_of(xs, ys, mask);
}

/// Interior-disjoint rectangles whose union is the closed polygon, at most
/// n/2 + h - 1 of them. Every reflex vertex sends a horizontal chord into the
/// polygon (collinear reflex pairs share one); the pieces left are rectangles.
inline std::vector<XBox> partition_exact(const RectPolygon& p) {
  const std::size_t nx = p.nx();
  const std::size_t ny = p.ny();
  auto in = [&](std::ptrdiff_t i, std::ptrdiff_t j) { return p.filled(i, j); };
  // cut[j * nx + i]: the edge between cell (i, j-1) and cell (i, j) is a chord.
  std::vector<std::uint8_t> cut((ny + 1) * nx, 0);
  for (std::size_t gj = 1; gj < ny; ++gj) {
    for (std::size_t gi = 0; gi <= nx; ++gi) {
      const auto i = static_cast<std::ptrdiff_t>(gi);
      const auto j = static_cast<std::ptrdiff_t>(gj);
      const bool bl = in(i - 1, j - 1), br = in(i, j - 1), tl = in(i - 1, j), tr = in(i, j);
      if (bl + br + tl + tr != 3) continue;
      if (!bl || !tl) {
        for (auto c = i; in(c, j - 1) && in(c, j); ++c) cut[gj * nx + static_cast<std::size_t>(c)] = 1;
      } else {
        for (auto c = i - 1; in(c, j - 1) && in(c, j); --c) cut[gj * nx + static_cast<std::size_t>(c)] = 1;
      }
    }
  }

  std::vector<std::size_t> parent(nx * ny);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](std::size_t a, std::size_t b) { parent[find(a)] = find(b); };
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i) {
      const auto si = static_cast<std::ptrdiff_t>(i), sj = static_cast<std::ptrdiff_t>(j);
      if (!in(si, sj)) continue;
      if (in(si + 1, sj)) unite(j * nx + i, j * nx + i + 1);
      if (in(si, sj + 1) && !cut[(j + 1) * nx + i]) unite(j * nx + i, (j + 1) * nx + i);
    }

  struct Span {
    std::size_t i0, i1, j0, j1, cells;
  };
  std::map<std::size_t, Span> pieces;
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i) {
      if (!in(static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(j))) continue;
      auto [it, fresh] = pieces.try_emplace(find(j * nx + i), Span{i, i, j, j, 0});
      auto& s = it->second;
      s.i0 = std::min(s.i0, i);
      s.i1 = std::max(s.i1, i);
      s.j0 = std::min(s.j0, j);
      s.j1 = std::max(s.j1, j);
      ++s.cells;
    }

  std::vector<XBox> out;
  for (const auto& [root, s] : pieces) {
    detail::ensure(s.cells == (s.i1 - s.i0 + 1) * (s.j1 - s.j0 + 1), "chord decomposition left a non-rectangular piece");
    out.emplace_back(p.xs()[s.i0], p.ys()[s.j0], p.xs()[s.i1 + 1], p.ys()[s.j1 + 1]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Do the boxes cover the closed polygon exactly (each box inside it, union
/// equal to it)? Checked cell by cell on the common refinement of all grids.
inline bool covers_exactly(const RectPolygon& p, const std::vector<XBox>& boxes) {
  std::vector<Coord> xs = p.xs();
  std::vector<Coord> ys = p.ys();
  for (const auto& b : boxes) {
    if (!b.bounded()) return false;
    if (b.lo_x() < p.xs().front() || b.hi_x() > p.xs().back() || b.lo_y() < p.ys().front() ||
        b.hi_y() > p.ys().back())
      return false;
    xs.insert(xs.end(), {b.lo_x(), b.hi_x()});
    ys.insert(ys.end(), {b.lo_y(), b.hi_y()});
  }
  xs = detail::sorted_unique(std::move(xs));
  ys = detail::sorted_unique(std::move(ys));
  for (std::size_t fj = 0; fj + 1 < ys.size(); ++fj) {
    const auto pj = std::upper_bound(p.ys().begin(), p.ys().end(), ys[fj]) - p.ys().begin() - 1;
    for (std::size_t fi = 0; fi + 1 < xs.size(); ++fi) {
      const auto pi = std::upper_bound(p.xs().begin(), p.xs().end(), xs[fi]) - p.xs().begin() - 1;
      const bool inside = p.filled(pi, pj);
      const bool hit = std::any_of(boxes.begin(), boxes.end(), [&](const XBox& b) {
        return b.lo_x() <= xs[fi] && xs[fi + 1] <= b.hi_x() && b.lo_y() <= ys[fj] && ys[fj + 1] <= b.hi_y();
      });
      if (inside != hit) return false;
    }
  }
  return true;
}

struct RectCandidate {
  XBox box;
  Mask cells;
};

/// Inclusion-maximal grid rectangles contained in the polygon.
inline std::vector<RectCandidate> maximal_rectangles(const RectPolygon& p) {
  const std::size_t nx = p.nx();
  const std::size_t ny = p.ny();
  // prefix[(j) * (nx + 1) + i] = filled cells in [0, i) x [0, j)
  std::vector<std::size_t> prefix((nx + 1) * (ny + 1), 0);
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i)
      prefix[(j + 1) * (nx + 1) + i + 1] = prefix[j * (nx + 1) + i + 1] + prefix[(j + 1) * (nx + 1) + i] -
                                           prefix[j * (nx + 1) + i] +
                                           p.filled(static_cast<std::ptrdiff_t>(i), static_cast<std::ptrdiff_t>(j));
  auto full = [&](std::size_t i0, std::size_t i1, std::size_t j0, std::size_t j1) {
    // half-open cell ranges
    const std::size_t area = (i1 - i0) * (j1 - j0);
    const std::size_t got = prefix[j1 * (nx + 1) + i1] - prefix[j0 * (nx + 1) + i1] -
                            prefix[j1 * (nx + 1) + i0] + prefix[j0 * (nx + 1) + i0];
    return got == area;
  };
  std::vector<RectCandidate> out;
  for (std::size_t i0 = 0; i0 < nx; ++i0)
    for (std::size_t i1 = i0 + 1; i1 <= nx; ++i1)
      for (std::size_t j0 = 0; j0 < ny; ++j0)
        for (std::size_t j1 = j0 + 1; j1 <= ny; ++j1) {
          if (!full(i0, i1, j0, j1)) break;
          if (j1 < ny && full(i0, i1, j1, j1 + 1)) continue;
          if (j0 > 0 && full(i0, i1, j0 - 1, j0)) continue;
          if (i0 > 0 && full(i0 - 1, i0, j0, j1)) continue;
          if (i1 < nx && full(i1, i1 + 1, j0, j1)) continue;
          Mask cells(nx * ny);
          for (std::size_t j = j0; j < j1; ++j)
            for (std::size_t i = i0; i < i1; ++i) cells.set(j * nx + i);
          out.push_back({XBox(p.xs()[i0], p.ys()[j0], p.xs()[i1], p.ys()[j1]), std::move(cells)});
        }
  return out;
}

struct RpcSolution {
  std::vector<XBox> boxes;
  /// false: the node budget ran out and `boxes` is only the best cover found.
  bool optimal = false;
  std::size_t nodes = 0;
};

/// Minimum number of boxes covering the polygon exactly (overlaps allowed),
/// by branch-and-bound over maximal rectangles with a greedy incumbent.
inline RpcSolution solve_rpc_exact(const RectPolygon& p, std::size_t budget = kDefaultNodeBudget) {
  const auto cands = maximal_rectangles(p);
  std::vector<std::size_t> cell_ids;
  std::vector<std::size_t> element_of(p.nx() * p.ny(), 0);
  for (std::size_t c = 0; c < p.cells().size(); ++c)
    if (p.cells()[c]) {
      element_of[c] = cell_ids.size();
      cell_ids.push_back(c);
    }
  SetCoverInstance inst;
  inst.universe = cell_ids.size();
  for (const auto& cand : cands) {
    Mask m(inst.universe);
    for (auto c = cand.cells.find_first(); c != Mask::npos; c = cand.cells.find_next(c)) m.set(element_of[c]);
    inst.sets.push_back(std::move(m));
  }
  auto incumbent = greedy_set_cover(inst);
  detail::ensure(incumbent.has_value(), "maximal rectangles fail to cover the polygon");
  auto result = exact_set_cover(inst, *incumbent, budget);
  RpcSolution sol;
  for (std::size_t i : result.chosen) sol.boxes.push_back(cands[i].box);
  std::sort(sol.boxes.begin(), sol.boxes.end());
  sol.optimal = result.optimal;
  sol.nodes = result.nodes;
  return sol;
}

/// Components of frame \ P, on P's grid extended by the frame lines.
/// The frame must contain P's bounds strictly inside.
inline std::vector<RectPolygon> complement_components(const RectPolygon& p, const XBox& frame) {
  const XBox b = p.bounds();
  detail::require(frame.bounded() && frame.lo_x() < b.lo_x() && b.hi_x() < frame.hi_x() &&
                      frame.lo_y() < b.lo_y() && b.hi_y() < frame.hi_y(),
                  "frame must contain the polygon in its interior");
  std::vector<Coord> xs{frame.lo_x(), frame.hi_x()};
  std::vector<Coord> ys{frame.lo_y(), frame.hi_y()};
  for (Coord x : p.xs())
    if (frame.lo_x() < x && x < frame.hi_x()) xs.push_back(x);
  for (Coord y : p.ys())
    if (frame.lo_y() < y && y < frame.hi_y()) ys.push_back(y);
  xs = detail::sorted_unique(std::move(xs));
  ys = detail::sorted_unique(std::move(ys));
  const std::size_t nx = xs.size() - 1;
  const std::size_t ny = ys.size() - 1;
  std::vector<std::uint8_t> mask(nx * ny, 0);
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i) {
      const auto pi = std::upper_bound(p.xs().begin(), p.xs().end(), xs[i]) - p.xs().begin() - 1;
      const auto pj = std::upper_bound(p.ys().begin(), p.ys().end(), ys[j]) - p.ys().begin() - 1;
      mask[j * nx + i] = !p.filled(pi, pj);
    }
  return components_of(xs, ys, mask);
}

struct SmallComplement {
  std::size_t polygon_cover = 0;     // minimum exact cover of P
  std::size_t complement_cover = 0;  // minimum exact cover of frame \ P
  bool optimal = false;

  double ratio() const { return static_cast<double>(complement_cover) / static_cast<double>(polygon_cover); }
};

/// Ratio of the minimum exact cover of frame \ P to that of P. Both sides are
/// exact only when `optimal` is set.
inline SmallComplement d_small_complement_ratio(const RectPolygon& p, const XBox& frame,
                                                std::size_t budget = kDefaultNodeBudget) {
  SmallComplement out;
  const auto inner = solve_rpc_exact(p, budget);
  out.polygon_cover = inner.boxes.size();
  out.optimal = inner.optimal;
  for (const auto& comp : complement_components(p, frame)) {
    const auto outer = solve_rpc_exact(comp, budget);
    out.complement_cover += outer.boxes.size();
    out.optimal = out.optimal && outer.optimal;
  }
  return out;
}

}  // namespace boxcover
