#include <gtest/gtest.h>

#include <cstdint>
#include <queue>

#include "boxcover/corpus.hpp"
#include "boxcover/rect_poly.hpp"
#include "oracles.hpp"

using namespace boxcover;

namespace {

const XBox kFrame(-10, -10, 40, 40);

RectPolygon one(std::vector<XBox> boxes) {
  auto comps = from_boxes(boxes, kFrame);
  EXPECT_EQ(comps.size(), 1u);
  return comps.front();
}

RectPolygon unit_square() { return one({XBox(0, 0, 1, 1)}); }
RectPolygon l_shape() { return one({XBox(0, 0, 2, 1), XBox(0, 0, 1, 2)}); }
RectPolygon annulus() {
  return one({XBox(0, 0, 3, 1), XBox(0, 2, 3, 3), XBox(0, 0, 1, 3), XBox(2, 0, 3, 3)});
}
RectPolygon plus_shape() { return one({XBox(0, 1, 3, 2), XBox(1, 0, 2, 3)}); }

// Bounded components of the uncovered cells, found on a padded copy of the grid.
std::size_t brute_holes(const RectPolygon& p) {
  const auto w = static_cast<std::ptrdiff_t>(p.nx()) + 2;
  const auto h = static_cast<std::ptrdiff_t>(p.ny()) + 2;
  std::vector<int> seen(static_cast<std::size_t>(w * h), 0);
  auto empty = [&](std::ptrdiff_t x, std::ptrdiff_t y) { return !p.filled(x - 1, y - 1); };
  std::size_t comps = 0;
  for (std::ptrdiff_t sy = 0; sy < h; ++sy)
    for (std::ptrdiff_t sx = 0; sx < w; ++sx) {
      if (!empty(sx, sy) || seen[static_cast<std::size_t>(sy * w + sx)]) continue;
      ++comps;
      std::queue<std::pair<std::ptrdiff_t, std::ptrdiff_t>> q;
      q.emplace(sx, sy);
      seen[static_cast<std::size_t>(sy * w + sx)] = 1;
      while (!q.empty()) {
        auto [x, y] = q.front();
        q.pop();
        const std::pair<std::ptrdiff_t, std::ptrdiff_t> nb[] = {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
        for (auto [a, b] : nb) {
          if (a < 0 || b < 0 || a >= w || b >= h || !empty(a, b)) continue;
          auto& s = seen[static_cast<std::size_t>(b * w + a)];
          if (!s) {
            s = 1;
            q.emplace(a, b);
          }
        }
      }
    }
  return comps - 1;  // the padded ring is the unbounded one
}

// Minimum exact cover over every filled grid rectangle (not just maximal ones).
std::size_t brute_rpc(const RectPolygon& p) {
  const std::size_t nx = p.nx(), ny = p.ny();
  std::vector<std::size_t> id(nx * ny, 64);
  std::size_t k = 0;
  for (std::size_t c = 0; c < nx * ny; ++c)
    if (p.cells()[c]) id[c] = k++;
  EXPECT_LE(k, 64u);
  std::set<std::uint64_t> family;
  for (std::size_t i0 = 0; i0 < nx; ++i0)
    for (std::size_t i1 = i0 + 1; i1 <= nx; ++i1)
      for (std::size_t j0 = 0; j0 < ny; ++j0)
        for (std::size_t j1 = j0 + 1; j1 <= ny; ++j1) {
          std::uint64_t m = 0;
          bool ok = true;
          for (std::size_t j = j0; j < j1 && ok; ++j)
            for (std::size_t i = i0; i < i1 && ok; ++i) {
              if (!p.cells()[j * nx + i]) ok = false;
              else m |= std::uint64_t{1} << id[j * nx + i];
            }
          if (ok) family.insert(m);
        }
  const std::uint64_t all = k == 64 ? ~0ULL : (std::uint64_t{1} << k) - 1;
  return oracle::min_union_cover(family, all);
}

void expect_identity(const RectPolygon& p) {
  const auto& c = p.census();
  EXPECT_EQ(static_cast<long>(c.reflex), static_cast<long>(c.convex) - 4 + 4 * static_cast<long>(c.holes));
}

}  // namespace

TEST(FromBoxes, Examples) {
  EXPECT_EQ(unit_square().census(), (VertexCensus{4, 0, 0, 4}));
  const auto l = l_shape();
  EXPECT_EQ(l.census().convex, 5u);
  EXPECT_EQ(l.census().reflex, 1u);
  const auto a = annulus();
  EXPECT_EQ(a.census().convex, 4u);
  EXPECT_EQ(a.census().reflex, 4u);
  EXPECT_EQ(a.census().holes, 1u);
  EXPECT_EQ(brute_holes(a), 1u);
  EXPECT_EQ(a.census().outer_complexity, 4u);
}

TEST(FromBoxes, EmptyInputAndSplitting) {
  EXPECT_TRUE(from_boxes({}, kFrame).empty());
  EXPECT_EQ(from_boxes({XBox(0, 0, 1, 1), XBox(3, 3, 4, 4)}, kFrame).size(), 2u);
  // corner contact only: two components
  EXPECT_EQ(from_boxes({XBox(0, 0, 1, 1), XBox(1, 1, 2, 2)}, kFrame).size(), 2u);
}

TEST(Census, RandomUnionsSatisfyIdentityAndOuterBound) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t k = 1 + seed % 8;
    const auto p = generate_random_polygon(seed, k);
    expect_identity(p);
    EXPECT_EQ(p.census().holes, brute_holes(p)) << "seed " << seed;
    EXPECT_LT(p.census().outer_complexity, 8 * k) << "seed " << seed;
  }
}

TEST(Partition, Examples) {
  EXPECT_EQ(partition_exact(unit_square()).size(), 1u);
  EXPECT_EQ(partition_exact(l_shape()).size(), 2u);
  EXPECT_LE(partition_exact(annulus()).size(), 4u);
  EXPECT_EQ(brute_rpc(l_shape()), 2u);
}

TEST(Partition, RandomUnionsMeetBound) {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto p = generate_random_polygon(seed, 1 + seed % 8);
    const auto parts = partition_exact(p);
    Cover z{{}, kDefaultScale};
    for (const auto& b : parts) z.boxes.push_back({b, Color::Red});
    EXPECT_TRUE(interiors_pairwise_disjoint(z));
    EXPECT_TRUE(covers_exactly(p, parts));
    const auto& c = p.census();
    EXPECT_LE(parts.size(), c.vertices() / 2 + c.holes - 1) << "seed " << seed;
  }
}

TEST(RpcExact, Examples) {
  EXPECT_EQ(solve_rpc_exact(unit_square()).boxes.size(), 1u);
  EXPECT_EQ(solve_rpc_exact(l_shape()).boxes.size(), 2u);
  const auto plus = plus_shape();
  EXPECT_EQ(plus.census().vertices(), 12u);
  EXPECT_EQ(solve_rpc_exact(plus).boxes.size(), 2u);
  EXPECT_EQ(brute_rpc(plus), 2u);
  EXPECT_EQ(brute_rpc(annulus()), 4u);
}

TEST(RpcExact, AgreesWithBruteForceAndBounds) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto p = generate_random_polygon(seed, 1 + seed % 4);
    const auto sol = solve_rpc_exact(p);
    ASSERT_TRUE(sol.optimal);
    EXPECT_TRUE(covers_exactly(p, sol.boxes));
    EXPECT_LE(sol.boxes.size(), partition_exact(p).size());
    EXPECT_GE(4 * sol.boxes.size(), p.census().convex);
    if (p.cell_count() <= 18) {
      EXPECT_EQ(sol.boxes.size(), brute_rpc(p)) << "seed " << seed;
    }
  }
}

TEST(SmallComplement, Examples) {
  const auto sq = one({XBox(1, 1, 2, 2)});
  const auto r = d_small_complement_ratio(sq, XBox(0, 0, 3, 3));
  EXPECT_EQ(r.polygon_cover, 1u);
  EXPECT_EQ(r.complement_cover, 4u);
  EXPECT_DOUBLE_EQ(r.ratio(), 4.0);

  const auto l = one({XBox(1, 1, 3, 2), XBox(1, 1, 2, 3)});
  EXPECT_LE(d_small_complement_ratio(l, XBox(0, 0, 4, 4)).ratio(), 4.0);

  const auto ring = one({XBox(1, 1, 4, 2), XBox(1, 3, 4, 4), XBox(1, 1, 2, 4), XBox(3, 1, 4, 4)});
  EXPECT_LE(d_small_complement_ratio(ring, XBox(0, 0, 5, 5)).ratio(), 12.0);
}

TEST(ClosureContains, BoundaryAndInterior) {
  const auto l = l_shape();
  EXPECT_TRUE(l.closure_contains(0, 0));
  EXPECT_TRUE(l.closure_contains(2, 1));
  EXPECT_TRUE(l.closure_contains(1, 1));
  EXPECT_FALSE(l.closure_contains(2, 2));
  EXPECT_FALSE(l.closure_contains(3, 0));
}
