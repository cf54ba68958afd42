#pragma once

// Executable reductions: vertex cover -> BCC (edge gadgets on vertex lanes)
// with extraction of a vertex cover from any BCC, and rectilinear polygon
// cover -> SBCC (grid of lines through polygon vertices) with the way back.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "boxcover/candidates.hpp"
#include "boxcover/geometry.hpp"
#include "boxcover/rect_poly.hpp"

namespace boxcover {

// ---------------------------------------------------------------------------
// Graphs

class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) : n_(n) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [u, v] : edges) {
      detail::require(u < n && v < n, "edge endpoint out of range");
      detail::require(u != v, "self-loops are not allowed");
      if (u > v) std::swap(u, v);
      detail::require(seen.emplace(u, v).second, "duplicate edge: the graph must be simple");
      edges_.emplace_back(u, v);
    }
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }

  std::size_t max_degree() const {
    std::vector<std::size_t> deg(n_, 0);
    for (auto [u, v] : edges_) ++deg[u], ++deg[v];
    return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  }

  bool is_vertex_cover(const std::vector<std::size_t>& cover) const {
    std::vector<bool> in(n_, false);
    for (auto v : cover) {
      if (v >= n_) return false;
      in[v] = true;
    }
    return std::all_of(edges_.begin(), edges_.end(), [&](const auto& e) { return in[e.first] || in[e.second]; });
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// G(n, p) with a seeded generator.
inline Graph random_graph(std::uint64_t seed, std::size_t n, double p) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

// ---------------------------------------------------------------------------
// Vertex cover -> BCC

enum class PointRole { LeftRed, MiddleRed, RightRed, Blocker };

inline const char* to_string(PointRole r) {
  switch (r) {
    case PointRole::LeftRed: return "left";
    case PointRole::MiddleRed: return "middle";
    case PointRole::RightRed: return "right";
    case PointRole::Blocker: return "blocker";
  }
  return "?";
}

/// Layout of a generated instance, enough to extract a vertex cover later.
/// All coordinates are scaled.
struct VcGadgetCert {
  Graph graph;
  std::vector<std::pair<Coord, Coord>> lane_x;       // open x-interval of each vertex lane
  std::vector<std::pair<Coord, Coord>> edge_lane_x;  // open x-interval of each edge lane
  std::vector<XBox> gadget_bbox;                     // per edge, tight around its points
  std::vector<PointRole> roles;                      // per point index
  std::vector<std::size_t> owner_edge;               // per point index
  std::vector<std::array<std::size_t, 3>> reds;      // per edge: left, middle, right point indices

  friend bool operator==(const VcGadgetCert&, const VcGadgetCert&) = default;
};

struct VcInstance {
  BichromaticSet points;
  VcGadgetCert cert;
};

struct GadgetCheck {
  bool p1 = true;  // a box on a middle red reaches no red of another gadget
  bool p2 = true;  // a box on a left/right red takes the middle or other lane reds, not both
  bool p3 = true;  // each vertex lane fits in one red box
  bool p4 = true;  // no red box spans two vertex lanes
  bool disjoint_gadgets = true;
  std::string failure;

  bool ok() const { return p1 && p2 && p3 && p4 && disjoint_gadgets; }
};

namespace detail {

// Vertex lane of a red point, or n when it sits on an edge lane.
inline std::size_t lane_of(const VcGadgetCert& cert, std::size_t point) {
  const auto& e = cert.graph.edges()[cert.owner_edge[point]];
  switch (cert.roles[point]) {
    case PointRole::LeftRed: return e.first;
    case PointRole::RightRed: return e.second;
    default: return cert.graph.n();
  }
}

}  // namespace detail

/// Checks the four gadget properties by brute force over every maximal red box.
inline GadgetCheck check_gadget(const BichromaticSet& s, const VcGadgetCert& cert) {
  GadgetCheck out;
  auto fail = [&](bool& flag, std::string why) {
    if (flag) out.failure += why + "; ";
    flag = false;
  };
  for (std::size_t a = 0; a < cert.gadget_bbox.size(); ++a)
    for (std::size_t b = a + 1; b < cert.gadget_bbox.size(); ++b)
      if (cert.gadget_bbox[a].closures_intersect(cert.gadget_bbox[b]))
        fail(out.disjoint_gadgets, "gadget boxes " + std::to_string(a) + " and " + std::to_string(b) + " meet");

  const auto boxes = enumerate_maximal_mono_boxes(s, Color::Red, Shape::Box);
  const std::size_t n = cert.graph.n();
  std::vector<bool> lane_fits(n, false);
  for (const auto& box : boxes) {
    const Mask m = covered_mask(box, s);
    std::set<std::size_t> lanes, edges_touched;
    bool has_middle = false;
    std::size_t middle_edge = 0;
    for (auto p = m.find_first(); p != Mask::npos; p = m.find_next(p)) {
      const std::size_t lane = detail::lane_of(cert, p);
      if (lane < n) lanes.insert(lane);
      edges_touched.insert(cert.owner_edge[p]);
      if (cert.roles[p] == PointRole::MiddleRed) {
        has_middle = true;
        middle_edge = cert.owner_edge[p];
      }
    }
    if (lanes.size() > 1) fail(out.p4, "a red box spans two vertex lanes");
    if (has_middle && edges_touched.size() > 1)
      fail(out.p1, "a box on the middle red of edge " + std::to_string(middle_edge) + " reaches another gadget");
    if (has_middle) {
      // with the middle red, a left/right red must be the only lane red
      std::size_t lane_reds = 0;
      for (auto p = m.find_first(); p != Mask::npos; p = m.find_next(p)) lane_reds += detail::lane_of(cert, p) < n;
      if (lane_reds > 1) fail(out.p2, "a box takes the middle red and two lane reds");
    }
    if (lanes.size() == 1) {
      const std::size_t lane = *lanes.begin();
      bool all = true;
      for (std::size_t p = 0; p < s.size(); ++p)
        if (s[p].color == Color::Red && detail::lane_of(cert, p) == lane && !m.test(p)) all = false;
      if (all) lane_fits[lane] = true;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    bool has_reds = false;
    for (std::size_t p = 0; p < s.size(); ++p) has_reds |= s[p].color == Color::Red && detail::lane_of(cert, p) == v;
    if (has_reds && !lane_fits[v]) fail(out.p3, "lane " + std::to_string(v) + " needs more than one box");
  }
  return out;
}

/// One gadget per edge (u, v), u < v: a red on u's lane, a red on the edge's
/// own lane, a red on v's lane at increasing heights, each boxed in by four
/// blues. Gadgets are stacked in disjoint horizontal bands. Throws
/// InternalError if the generated instance violates a gadget property.
inline VcInstance vc_to_bcc(const Graph& g) {
  const auto m = static_cast<Coord>(g.m());
  const Coord lane_gap = 4 * (m + 1);
  std::vector<Point> raw;
  VcGadgetCert cert;
  cert.graph = g;
  for (std::size_t v = 0; v < g.n(); ++v) {
    const Coord x = 2 * lane_gap * static_cast<Coord>(v);
    cert.lane_x.emplace_back(x - 1, x + 1);
  }
  auto add = [&](Coord x, Coord y, Color c, PointRole role, std::size_t edge) {
    raw.push_back({x, y, c});
    cert.roles.push_back(role);
    cert.owner_edge.push_back(edge);
    return raw.size() - 1;
  };
  for (std::size_t k = 0; k < g.m(); ++k) {
    const auto [i, j] = g.edges()[k];
    const Coord xi = lane_gap * static_cast<Coord>(i);
    const Coord xj = lane_gap * static_cast<Coord>(j);
    const Coord xe = xi + 4 * static_cast<Coord>(k + 1);
    const Coord y = 10 * static_cast<Coord>(k);
    cert.edge_lane_x.emplace_back(2 * xe - 1, 2 * xe + 1);
    const auto l = add(xi, y + 2, Color::Red, PointRole::LeftRed, k);
    const auto mid = add(xe, y + 4, Color::Red, PointRole::MiddleRed, k);
    const auto r = add(xj, y + 6, Color::Red, PointRole::RightRed, k);
    cert.reds.push_back({l, mid, r});
    const std::array<std::pair<Coord, Coord>, 12> blues{{{xi - 1, y + 1},
                                                        {xi - 1, y + 3},
                                                        {xi + 1, y + 1},
                                                        {xi + 1, y + 5},
                                                        {xe - 1, y + 1},
                                                        {xe - 1, y + 5},
                                                        {xe + 1, y + 3},
                                                        {xe + 1, y + 7},
                                                        {xj - 1, y + 3},
                                                        {xj - 1, y + 7},
                                                        {xj + 1, y + 5},
                                                        {xj + 1, y + 7}}};
    for (auto [bx, by] : blues) add(bx, by, Color::Blue, PointRole::Blocker, k);
    cert.gadget_bbox.push_back(XBox(2 * (xi - 1), 2 * (y + 1), 2 * (xj + 1), 2 * (y + 7)));
  }
  VcInstance out{BichromaticSet::from_unscaled(raw), std::move(cert)};
  const auto check = check_gadget(out.points, out.cert);
  detail::ensure(check.ok(), "generated gadget instance violates: " + check.failure);
  return out;
}

/// A vertex cover of size at most |Z| - m read off any valid BCC Z of a
/// generated instance. Lane boxes count for their lane; an edge whose middle
/// red is covered twice hands its spare box to its right endpoint's lane.
inline std::vector<std::size_t> bcc_to_vc(const Cover& z, const BichromaticSet& s, const VcGadgetCert& cert) {
  detail::require(cert.roles.size() == s.size(), "certificate does not match the point set");
  detail::require(is_valid_bcc(z, s), "not a valid BCC of the generated instance");
  const Graph& g = cert.graph;

  std::set<std::vector<std::size_t>> subsets;
  for (const auto& lb : z.boxes) {
    const Mask m = covered_mask(lb.box, s);
    std::vector<std::size_t> reds;
    for (auto p = m.find_first(); p != Mask::npos; p = m.find_next(p)) reds.push_back(p);
    if (!reds.empty()) subsets.insert(std::move(reds));
  }

  std::set<std::size_t> cover;
  std::vector<std::size_t> middle_boxes(g.m(), 0);
  for (const auto& reds : subsets) {
    std::set<std::size_t> lanes;
    std::size_t middles = 0;
    for (auto p : reds) {
      if (cert.roles[p] == PointRole::MiddleRed) {
        ++middles;
        ++middle_boxes[cert.owner_edge[p]];
      } else {
        lanes.insert(detail::lane_of(cert, p));
      }
    }
    detail::ensure(lanes.size() <= 1, "a red box covers two vertex lanes");
    detail::ensure(middles <= 1, "a red box covers two middle reds");
    if (middles == 0) cover.insert(*lanes.begin());
  }
  for (std::size_t k = 0; k < g.m(); ++k) {
    detail::ensure(middle_boxes[k] >= 1, "middle red left uncovered");
    if (middle_boxes[k] >= 2) cover.insert(g.edges()[k].second);
  }
  std::vector<std::size_t> out(cover.begin(), cover.end());
  detail::ensure(g.is_vertex_cover(out), "extracted vertex set misses an edge");
  detail::ensure(out.size() + g.m() <= z.size(), "extracted vertex cover larger than |Z| - m");
  return out;
}

// ---------------------------------------------------------------------------
// Rectilinear polygon cover -> SBCC

/// Grid lines of the reduction in polygon units times two: L1 through every
/// vertex of P and every side of K, L2 halfway between consecutive L1 lines.
struct SrpcGridCert {
  std::vector<Coord> l1_x, l1_y;
  std::vector<Coord> l2_x, l2_y;
  std::vector<Coord> poly_xs, poly_ys;  // grid of P in polygon units
  std::vector<std::uint8_t> poly_cells;
  XBox frame;  // K in polygon units

  RectPolygon polygon() const { return RectPolygon(poly_xs, poly_ys, poly_cells); }
  friend bool operator==(const SrpcGridCert&, const SrpcGridCert&) = default;
};

struct SrpcInstance {
  BichromaticSet points;
  SrpcGridCert cert;
};

namespace detail {

inline RectPolygon doubled(const RectPolygon& p) {
  auto xs = p.xs();
  auto ys = p.ys();
  for (auto& v : xs) v *= 2;
  for (auto& v : ys) v *= 2;
  return RectPolygon(std::move(xs), std::move(ys), p.cells());
}

inline std::vector<Coord> midpoints(const std::vector<Coord>& l1) {
  std::vector<Coord> out;
  for (std::size_t i = 0; i + 1 < l1.size(); ++i) out.push_back((l1[i] + l1[i + 1]) / 2);
  return out;
}

}  // namespace detail

/// Red points at grid crossings in closed P, blue ones elsewhere in K. Point
/// coordinates are twice the polygon coordinates before the usual scaling.
inline SrpcInstance srpc_to_sbcc(const RectPolygon& p, const XBox& k) {
  const XBox b = p.bounds();
  detail::require(k.bounded() && k.lo_x() < b.lo_x() && b.hi_x() < k.hi_x() && k.lo_y() < b.lo_y() &&
                      b.hi_y() < k.hi_y(),
                  "the frame must contain the polygon in its interior");
  SrpcGridCert cert;
  cert.poly_xs = p.xs();
  cert.poly_ys = p.ys();
  cert.poly_cells = p.cells();
  cert.frame = k;
  std::vector<Coord> xs{2 * k.lo_x(), 2 * k.hi_x()};
  std::vector<Coord> ys{2 * k.lo_y(), 2 * k.hi_y()};
  for (const auto& v : p.vertices()) {
    xs.push_back(2 * v.x);
    ys.push_back(2 * v.y);
  }
  cert.l1_x = detail::sorted_unique(std::move(xs));
  cert.l1_y = detail::sorted_unique(std::move(ys));
  cert.l2_x = detail::midpoints(cert.l1_x);
  cert.l2_y = detail::midpoints(cert.l1_y);
  std::vector<Coord> all_x = cert.l1_x, all_y = cert.l1_y;
  all_x.insert(all_x.end(), cert.l2_x.begin(), cert.l2_x.end());
  all_y.insert(all_y.end(), cert.l2_y.begin(), cert.l2_y.end());
  all_x = detail::sorted_unique(std::move(all_x));
  all_y = detail::sorted_unique(std::move(all_y));
  const auto p2 = detail::doubled(p);
  std::vector<Point> raw;
  for (Coord y : all_y)
    for (Coord x : all_x) raw.push_back({x, y, p2.closure_contains(x, y) ? Color::Red : Color::Blue});
  return {BichromaticSet::from_unscaled(raw), std::move(cert)};
}

struct SrpcSolution {
  std::vector<XBox> red;   // covers P exactly (polygon units)
  std::vector<XBox> blue;  // covers K \ P exactly
  std::size_t size() const { return red.size() + blue.size(); }
};

namespace detail {

// Does the union of `boxes` equal {cells c : inside(c)} on the grid refined by
// the boxes' sides? `inside` receives a cell's lower-left and upper-right corner.
template <typename Inside>
bool union_is_exactly(std::vector<Coord> xs, std::vector<Coord> ys, const std::vector<XBox>& boxes, Inside&& inside) {
  for (const auto& b : boxes) {
    xs.insert(xs.end(), {b.lo_x(), b.hi_x()});
    ys.insert(ys.end(), {b.lo_y(), b.hi_y()});
  }
  xs = sorted_unique(std::move(xs));
  ys = sorted_unique(std::move(ys));
  for (std::size_t j = 0; j + 1 < ys.size(); ++j)
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      const XBox cell(xs[i], ys[j], xs[i + 1], ys[j + 1]);
      const bool covered = std::any_of(boxes.begin(), boxes.end(), [&](const XBox& b) { return b.contains(cell); });
      if (covered != inside(cell)) return false;
    }
  return true;
}

// Polygon cell lookup: is the cell (given in polygon units) inside P?
inline bool cell_in(const RectPolygon& p, const XBox& cell) {
  const auto i = std::upper_bound(p.xs().begin(), p.xs().end(), cell.lo_x()) - p.xs().begin() - 1;
  const auto j = std::upper_bound(p.ys().begin(), p.ys().end(), cell.lo_y()) - p.ys().begin() - 1;
  return p.filled(i, j);
}

}  // namespace detail

/// Exact covers of P (red) and K \ P (blue) with as many boxes as the
/// nonempty boxes of a valid SBCC of a generated instance. The L1 lines cut K
/// into cells whose center points carry the cell's color; a box becomes the
/// union of the cells whose centers it covers, which is a rectangle inside
/// its own region. A box covering no center becomes a cell of its color next
/// to one of its points, so the count is kept.
inline SrpcSolution sbcc_to_srpc(const Cover& z, const BichromaticSet& s, const SrpcGridCert& cert) {
  detail::require(is_valid_sbcc(z, s), "not a valid SBCC of the generated instance");
  const RectPolygon p = cert.polygon();
  const XBox& k = cert.frame;
  const auto& lx = cert.l1_x;
  const auto& ly = cert.l1_y;
  // L1 values are doubled polygon units; scaled point coordinates double them again
  const Coord f = s.scale();
  auto cell = [&](std::size_t i, std::size_t j) { return XBox(lx[i] / 2, ly[j] / 2, lx[i + 1] / 2, ly[j + 1] / 2); };
  auto cell_color = [&](std::size_t i, std::size_t j) {
    return detail::cell_in(p, cell(i, j)) ? Color::Red : Color::Blue;
  };

  SrpcSolution out;
  for (const auto& lb : z.boxes) {
    const Mask covered = covered_mask(lb.box, s);
    if (!covered.any()) continue;
    std::size_t i0 = lx.size(), i1 = 0, j0 = ly.size(), j1 = 0;
    for (std::size_t i = 0; i + 1 < lx.size(); ++i) {
      const Coord c = f * (lx[i] + lx[i + 1]) / 2;
      if (lb.box.lo_x() < c && c < lb.box.hi_x()) i0 = std::min(i0, i), i1 = std::max(i1, i);
    }
    for (std::size_t j = 0; j + 1 < ly.size(); ++j) {
      const Coord c = f * (ly[j] + ly[j + 1]) / 2;
      if (lb.box.lo_y() < c && c < lb.box.hi_y()) j0 = std::min(j0, j), j1 = std::max(j1, j);
    }
    XBox mapped;
    if (i0 <= i1 && j0 <= j1) {
      for (std::size_t j = j0; j <= j1; ++j)
        for (std::size_t i = i0; i <= i1; ++i)
          detail::ensure(cell_color(i, j) == lb.color, "a box covers a cell center of the other color");
      mapped = XBox(lx[i0] / 2, ly[j0] / 2, lx[i1 + 1] / 2, ly[j1 + 1] / 2);
    } else {
      const auto& q = s[covered.find_first()];
      bool found = false;
      for (std::size_t j = 0; j + 1 < ly.size() && !found; ++j)
        for (std::size_t i = 0; i + 1 < lx.size() && !found; ++i) {
          const bool touches = f * lx[i] <= q.x && q.x <= f * lx[i + 1] && f * ly[j] <= q.y && q.y <= f * ly[j + 1];
          if (touches && cell_color(i, j) == lb.color) {
            mapped = cell(i, j);
            found = true;
          }
        }
      detail::ensure(found, "a covered point has no adjacent cell of its color");
    }
    (lb.color == Color::Red ? out.red : out.blue).push_back(mapped);
  }
  detail::ensure(covers_exactly(p, out.red), "red boxes do not cover P exactly");
  std::vector<Coord> fx{k.lo_x(), k.hi_x()}, fy{k.lo_y(), k.hi_y()};
  const bool blue_ok = detail::union_is_exactly(fx, fy, out.blue, [&](const XBox& c) {
    return k.contains(c) && !detail::cell_in(p, c);
  });
  detail::ensure(blue_ok, "blue boxes do not cover K \\ P exactly");
  return out;
}

/// Minimum exact cover of P plus minimum exact cover of K \ P.
struct SrpcOptimum {
  std::size_t polygon = 0;
  std::size_t complement = 0;
  bool optimal = false;
  std::size_t total() const { return polygon + complement; }
};

inline SrpcOptimum solve_srpc_exact(const RectPolygon& p, const XBox& k, std::size_t budget = kDefaultNodeBudget) {
  const auto r = d_small_complement_ratio(p, k, budget);
  return {r.polygon_cover, r.complement_cover, r.optimal};
}

}  // namespace boxcover
