#pragma once

// Seeded instance generators shared by the tests, the acceptance suite and
// the bench harness.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "boxcover/geometry.hpp"
#include "boxcover/rect_poly.hpp"

namespace boxcover {

/// Random boxes with corners on [0, 2k+4), each overlapping an earlier one
/// in area, so their union is connected.
inline std::vector<XBox> generate_random_boxes(std::uint64_t seed, std::size_t k) {
  detail::require(k >= 1, "need at least one box");
  std::mt19937_64 rng(seed);
  const Coord span = 2 * static_cast<Coord>(k) + 4;
  std::uniform_int_distribution<Coord> coord(0, span - 1);
  auto draw = [&] {
    Coord a = coord(rng), b = coord(rng), c = coord(rng), d = coord(rng);
    while (a == b) b = coord(rng);
    while (c == d) d = coord(rng);
    return XBox(std::min(a, b), std::min(c, d), std::max(a, b), std::max(c, d));
  };
  std::vector<XBox> boxes{draw()};
  while (boxes.size() < k) {
    XBox next = draw();
    const bool touches = std::any_of(boxes.begin(), boxes.end(),
                                     [&](const XBox& b) { return b.interiors_intersect(next); });
    if (touches) boxes.push_back(next);
  }
  return boxes;
}

/// The union of generate_random_boxes(seed, k) as a single polygon.
inline RectPolygon generate_random_polygon(std::uint64_t seed, std::size_t k) {
  const auto boxes = generate_random_boxes(seed, k);
  auto comps = from_boxes(boxes, XBox(-1, -1, 2 * static_cast<Coord>(k) + 5, 2 * static_cast<Coord>(k) + 5));
  detail::ensure(comps.size() == 1, "overlapping boxes produced a disconnected union");
  return std::move(comps.front());
}

struct RandomPointOptions {
  /// Let points share x or y coordinates (a small grid instead of distinct axes).
  bool shared_coordinates = false;
};

/// n points with distinct coordinates in each axis (unless shared coordinates
/// are requested), round(n * red_fraction) of them red. Returned scaled.
inline BichromaticSet generate_random_bichromatic(std::uint64_t seed, std::size_t n, double red_fraction,
                                                  RandomPointOptions opts = {}) {
  std::mt19937_64 rng(seed);
  std::vector<Point> pts;
  if (n == 0) return BichromaticSet{};
  const auto reds = static_cast<std::size_t>(std::llround(static_cast<double>(n) * red_fraction));
  std::vector<Color> colors(n, Color::Blue);
  std::fill_n(colors.begin(), std::min(reds, n), Color::Red);
  std::shuffle(colors.begin(), colors.end(), rng);

  if (opts.shared_coordinates) {
    const auto side = static_cast<Coord>(std::ceil(std::sqrt(static_cast<double>(n) * 2.0)));
    std::vector<Coord> cells(static_cast<std::size_t>(side * side));
    std::iota(cells.begin(), cells.end(), Coord{0});
    std::shuffle(cells.begin(), cells.end(), rng);
    for (std::size_t i = 0; i < n; ++i) pts.push_back({cells[i] % side, cells[i] / side, colors[i]});
  } else {
    const auto range = static_cast<Coord>(3 * n);
    std::vector<Coord> pool(static_cast<std::size_t>(range));
    std::iota(pool.begin(), pool.end(), Coord{0});
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Coord> xs(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<Coord> ys(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t i = 0; i < n; ++i) pts.push_back({xs[i], ys[i], colors[i]});
  }
  return BichromaticSet::from_unscaled(pts);
}

}  // namespace boxcover
