#include <gtest/gtest.h>

#include <chrono>

#include "boxcover/bcc.hpp"
#include "boxcover/corpus.hpp"
#include "boxcover/reductions.hpp"
#include "boxcover/sbcc.hpp"
#include "oracles.hpp"

using namespace boxcover;

namespace {

std::size_t vc_opt(const Graph& g) { return oracle::vertex_cover_optimum(g.n(), g.edges()); }

RectPolygon poly(std::vector<XBox> boxes) {
  auto comps = from_boxes(boxes, XBox(-50, -50, 50, 50));
  EXPECT_EQ(comps.size(), 1u);
  return comps.front();
}

}  // namespace

TEST(GraphTest, Validation) {
  EXPECT_THROW(Graph(2, {{0, 0}}), InputError);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Graph(2, {{0, 2}}), InputError);
  Graph g(3, {{2, 0}, {1, 2}});
  EXPECT_EQ(g.edges()[0], (std::pair<std::size_t, std::size_t>{0, 2}));
  EXPECT_EQ(g.max_degree(), 2u);
  EXPECT_TRUE(g.is_vertex_cover({2}));
  EXPECT_FALSE(g.is_vertex_cover({0}));
}

TEST(VcToBcc, EmptyGraph) {
  auto inst = vc_to_bcc(Graph(3, {}));
  EXPECT_EQ(inst.points.count(Color::Red), 0u);
  EXPECT_EQ(solve_bcc_exact(inst.points).cover.size(), 0u);
}

TEST(VcToBcc, SingleEdge) {
  Graph g(2, {{0, 1}});
  auto inst = vc_to_bcc(g);
  auto sol = solve_bcc_exact(inst.points);
  ASSERT_TRUE(sol.optimal);
  EXPECT_EQ(sol.cover.size(), vc_opt(g) + g.m());
  EXPECT_EQ(sol.cover.size(), 2u);
  auto vc = bcc_to_vc(sol.cover, inst.points, inst.cert);
  EXPECT_LE(vc.size(), 1u);
  EXPECT_TRUE(g.is_vertex_cover(vc));
}

TEST(VcToBcc, Triangle) {
  Graph g(3, {{0, 1}, {1, 2}, {0, 2}});
  auto inst = vc_to_bcc(g);
  EXPECT_EQ(inst.points.count(Color::Red), 9u);
  auto sol = solve_bcc_exact(inst.points);
  ASSERT_TRUE(sol.optimal);
  EXPECT_EQ(sol.cover.size(), 5u);

  // two boxes per gadget: left+middle and the right red alone
  Cover z{{}, inst.points.scale()};
  for (const auto& r : inst.cert.reds) {
    const auto& l = inst.points[r[0]];
    const auto& m = inst.points[r[1]];
    const auto& rr = inst.points[r[2]];
    z.boxes.push_back({XBox(l.x - 1, l.y - 1, m.x + 1, m.y + 1), Color::Red});
    z.boxes.push_back({XBox(rr.x - 1, rr.y - 1, rr.x + 1, rr.y + 1), Color::Red});
  }
  ASSERT_TRUE(is_valid_bcc(z, inst.points));
  auto vc = bcc_to_vc(z, inst.points, inst.cert);
  EXPECT_LE(vc.size(), 3u);
  EXPECT_TRUE(g.is_vertex_cover(vc));
}

TEST(VcToBcc, RandomGraphsRoundTrip) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_graph(seed, 2 + seed % 5, 0.4);
    auto inst = vc_to_bcc(g);
    EXPECT_TRUE(check_gadget(inst.points, inst.cert).ok());
    auto exact = solve_bcc_exact(inst.points);
    ASSERT_TRUE(exact.optimal);
    EXPECT_EQ(exact.cover.size(), vc_opt(g) + g.m()) << "seed " << seed;
    const auto greedy = solve_bcc_greedy(inst.points);
    for (const Cover* z : std::array<const Cover*, 2>{&exact.cover, &greedy.cover}) {
      auto vc = bcc_to_vc(*z, inst.points, inst.cert);
      EXPECT_TRUE(g.is_vertex_cover(vc));
      EXPECT_LE(vc.size() + g.m(), z->size());
    }
  }
}

TEST(VcToBcc, RejectsInvalidCover) {
  auto inst = vc_to_bcc(Graph(2, {{0, 1}}));
  EXPECT_THROW(bcc_to_vc(Cover{{}, 2}, inst.points, inst.cert), InputError);
}

TEST(SrpcToSbcc, UnitBoxInFrame) {
  auto p = poly({XBox(1, 1, 2, 2)});
  const XBox k(0, 0, 3, 3);
  auto inst = srpc_to_sbcc(p, k);
  EXPECT_EQ(inst.cert.l1_x.size(), 4u);
  EXPECT_EQ(inst.cert.l2_x.size(), 3u);
  EXPECT_EQ(inst.points.size(), 49u);
  EXPECT_EQ(inst.points.count(Color::Red), 9u);
  auto sbcc = solve_sbcc_exact(inst.points);
  ASSERT_TRUE(sbcc.optimal);
  EXPECT_EQ(sbcc.cover.size(), 5u);
  EXPECT_EQ(solve_srpc_exact(p, k).total(), 5u);
  auto back = sbcc_to_srpc(sbcc.cover, inst.points, inst.cert);
  EXPECT_EQ(back.size(), 5u);
}

TEST(SrpcToSbcc, LShape) {
  auto p = poly({XBox(1, 1, 3, 2), XBox(1, 1, 2, 3)});
  const XBox k(0, 0, 4, 4);
  auto inst = srpc_to_sbcc(p, k);
  auto sbcc = solve_sbcc_exact(inst.points);
  ASSERT_TRUE(sbcc.optimal);
  const auto srpc = solve_srpc_exact(p, k);
  EXPECT_EQ(srpc.polygon, 2u);
  EXPECT_EQ(sbcc.cover.size(), srpc.total());
  auto back = sbcc_to_srpc(sbcc.cover, inst.points, inst.cert);
  EXPECT_EQ(back.size(), sbcc.cover.size());
  auto approx = solve_sbcc_approx(inst.points);
  EXPECT_EQ(sbcc_to_srpc(approx.cover, inst.points, inst.cert).size(), approx.cover.size());
}

TEST(SrpcToSbcc, RejectsTouchingFrame) {
  auto p = poly({XBox(0, 0, 1, 1)});
  EXPECT_THROW(srpc_to_sbcc(p, XBox(0, 0, 3, 3)), InputError);
}
