#pragma once

// Deterministic SVG rendering of point sets, covers and polygons. Output
// depends only on the inputs, so files can be diffed.

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "boxcover/geometry.hpp"
#include "boxcover/rect_poly.hpp"

namespace boxcover::svg {

struct Scene {
  const BichromaticSet* points = nullptr;
  const Cover* cover = nullptr;
  const RectPolygon* polygon = nullptr;  // drawn in the same coordinates as the points
  std::vector<Coord> lanes;              // vertical guide lines
  double pixels_per_unit = 12.0;
};

namespace detail {

struct View {
  Coord lo_x, lo_y, hi_x, hi_y;
  double ppu;

  double px(Coord x) const { return static_cast<double>(x - lo_x) * ppu; }
  double py(Coord y) const { return static_cast<double>(hi_y - y) * ppu; }
  Coord clamp_x(Coord x) const { return std::clamp(x, lo_x, hi_x); }
  Coord clamp_y(Coord y) const { return std::clamp(y, lo_y, hi_y); }
};

inline void grow(std::optional<View>& v, Coord lx, Coord ly, Coord hx, Coord hy) {
  if (!v) {
    v = View{lx, ly, hx, hy, 0};
    return;
  }
  v->lo_x = std::min(v->lo_x, lx);
  v->lo_y = std::min(v->lo_y, ly);
  v->hi_x = std::max(v->hi_x, hx);
  v->hi_y = std::max(v->hi_y, hy);
}

inline View view_of(const Scene& s) {
  std::optional<View> v;
  if (s.points && !s.points->empty()) {
    const auto f = bounding_frame(*s.points);
    grow(v, f.lo_x(), f.lo_y(), f.hi_x(), f.hi_y());
  }
  if (s.polygon) {
    const auto b = s.polygon->bounds();
    grow(v, b.lo_x() - 1, b.lo_y() - 1, b.hi_x() + 1, b.hi_y() + 1);
  }
  if (s.cover) {
    for (const auto& lb : s.cover->boxes) {
      const auto& b = lb.box;
      auto fin = [](Coord c, Coord fallback) { return c == kNegInf || c == kPosInf ? fallback : c; };
      const Coord any_x = fin(b.lo_x(), b.hi_x()), any_y = fin(b.lo_y(), b.hi_y());
      grow(v, fin(b.lo_x(), any_x), fin(b.lo_y(), any_y), fin(b.hi_x(), any_x), fin(b.hi_y(), any_y));
    }
  }
  for (Coord x : s.lanes) grow(v, x, v ? v->lo_y : 0, x, v ? v->hi_y : 0);
  if (!v) v = View{-1, -1, 1, 1, 0};
  // leave room for the arrows of unbounded sides
  v->lo_x -= 2;
  v->lo_y -= 2;
  v->hi_x += 2;
  v->hi_y += 2;
  v->ppu = s.pixels_per_unit;
  return *v;
}

inline const char* fill_of(Color c) { return c == Color::Red ? "#d62728" : "#1f77b4"; }

}  // namespace detail

inline void render(std::ostream& out, const Scene& scene) {
  const auto v = detail::view_of(scene);
  std::ostringstream o;
  o.setf(std::ios::fixed);
  o.precision(1);
  const double w = v.px(v.hi_x), h = v.py(v.lo_y);
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
    << ' ' << h << "\">\n";
  o << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" markerWidth=\"6\" markerHeight=\"6\" "
       "orient=\"auto-start-reverse\"><path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (scene.polygon) {
    const auto& p = *scene.polygon;
    o << "<g fill=\"#cccccc\" stroke=\"none\">\n";
    for (std::size_t j = 0; j < p.ny(); ++j)
      for (std::size_t i = 0; i < p.nx(); ++i) {
        if (!p.cells()[j * p.nx() + i]) continue;
        const auto c = p.cell_box(i, j);
        o << "<rect x=\"" << v.px(c.lo_x()) << "\" y=\"" << v.py(c.hi_y()) << "\" width=\"" << v.px(c.hi_x()) - v.px(c.lo_x())
          << "\" height=\"" << v.py(c.lo_y()) - v.py(c.hi_y()) << "\"/>\n";
      }
    o << "</g>\n";
  }

  for (Coord x : scene.lanes)
    o << "<line x1=\"" << v.px(x) << "\" y1=\"0\" x2=\"" << v.px(x) << "\" y2=\"" << h
      << "\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n";

  if (scene.cover) {
    for (const auto& lb : scene.cover->boxes) {
      const auto& b = lb.box;
      const Coord lx = v.clamp_x(b.lo_x()), hx = v.clamp_x(b.hi_x());
      const Coord ly = v.clamp_y(b.lo_y()), hy = v.clamp_y(b.hi_y());
      o << "<rect x=\"" << v.px(lx) << "\" y=\"" << v.py(hy) << "\" width=\"" << v.px(hx) - v.px(lx) << "\" height=\""
        << v.py(ly) - v.py(hy) << "\" fill=\"" << detail::fill_of(lb.color) << "\" fill-opacity=\"0.15\" stroke=\""
        << detail::fill_of(lb.color) << "\"/>\n";
      if (b.bounded()) continue;
      // arrow from the box centre line toward the open side
      const double cx = (v.px(lx) + v.px(hx)) / 2, cy = (v.py(ly) + v.py(hy)) / 2;
      double tx = cx, ty = cy;
      if (b.lo_x() == kNegInf) tx = v.px(lx);
      if (b.hi_x() == kPosInf) tx = v.px(hx);
      if (b.lo_y() == kNegInf) ty = v.py(ly);
      if (b.hi_y() == kPosInf) ty = v.py(hy);
      o << "<line x1=\"" << cx << "\" y1=\"" << cy << "\" x2=\"" << tx << "\" y2=\"" << ty << "\" stroke=\""
        << detail::fill_of(lb.color) << "\" marker-end=\"url(#arrow)\"/>\n";
    }
  }

  if (scene.points) {
    const double r = std::max(2.0, scene.pixels_per_unit * 0.3);
    for (const auto& p : scene.points->points())
      o << "<circle cx=\"" << v.px(p.x) << "\" cy=\"" << v.py(p.y) << "\" r=\"" << r << "\" fill=\""
        << detail::fill_of(p.color) << "\"/>\n";
  }
  o << "</svg>\n";
  out << o.str();
}

inline std::string render(const Scene& scene) {
  std::ostringstream out;
  render(out, scene);
  return out.str();
}

}  // namespace boxcover::svg
