#include <gtest/gtest.h>

#include <sstream>

#include "boxcover/corpus.hpp"
#include "boxcover/boxcover.hpp"

using namespace boxcover;

namespace {

template <typename F>
std::string error_of(F&& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(PointsIo, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto s = generate_random_bichromatic(seed, 10, 0.4);
    std::stringstream ss;
    io::write_points(ss, s);
    EXPECT_EQ(io::read_points(ss).points(), s.points());
  }
}

TEST(PointsIo, CommentsAndBlankLines) {
  std::istringstream in("# header\n\nR 0 0  # origin\nB 3 -1\n");
  auto s = io::read_points(in);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.points()[1].color, Color::Blue);
  EXPECT_EQ(s.points()[1].y, -2);
}

TEST(PointsIo, Diagnostics) {
  EXPECT_EQ(error_of([] {
              std::istringstream in("R 0 0\nG 1 1\n");
              io::read_points(in, "pts");
            }),
            "pts:2: color must be R or B, got 'G'");
  EXPECT_EQ(error_of([] {
              std::istringstream in("R 0 x\n");
              io::read_points(in, "pts");
            }),
            "pts:1: expected an integer, got 'x'");
  EXPECT_NE(error_of([] {
              std::istringstream in("R 0 0\nB 0 0\n");
              io::read_points(in, "pts");
            }).find("pts:2:"),
            std::string::npos);
}

TEST(CoverIo, RoundTripWithInfiniteSides) {
  Cover z{{{XBox(kNegInf, -1, 1, 1), Color::Red}, {XBox(3, -3, 5, kPosInf), Color::Blue}}, 2};
  std::stringstream ss;
  io::write_cover(ss, z);
  EXPECT_NE(ss.str().find("-INF"), std::string::npos);
  EXPECT_EQ(io::read_cover(ss), z);
}

TEST(CoverIo, Diagnostics) {
  EXPECT_EQ(error_of([] {
              std::istringstream in("RED 0 0 1 1\n");
              io::read_cover(in, "c");
            }),
            "c:1: cover must start with a SCALE line");
  EXPECT_EQ(error_of([] {
              std::istringstream in("SCALE 3\n");
              io::read_cover(in, "c");
            }),
            "c:1: scale must be a positive even integer");
  EXPECT_EQ(error_of([] {
              std::istringstream in("SCALE 2\nRED 0 0 1\n");
              io::read_cover(in, "c");
            }),
            "c:2: expected 5 fields, got 4");
}

TEST(PolygonIo, RoundTrip) {
  io::PolygonFile f{XBox(0, 0, 10, 10), {XBox(1, 1, 4, 2), XBox(1, 1, 2, 4)}};
  std::stringstream ss;
  io::write_polygon(ss, f);
  auto g = io::read_polygon(ss);
  EXPECT_EQ(g.frame, f.frame);
  EXPECT_EQ(g.boxes, f.boxes);
  EXPECT_EQ(g.polygon().census().convex, 5u);
}

TEST(PolygonIo, Diagnostics) {
  EXPECT_EQ(error_of([] {
              std::istringstream in("FRAME 0 0 5 5\nBOX 1 1 6 2\n");
              io::read_polygon(in, "p");
            }),
            "p:2: box leaves the frame");
  EXPECT_NE(error_of([] {
              std::istringstream in("FRAME 0 0 9 9\nBOX 1 1 2 2\nBOX 4 4 5 5\n");
              io::read_polygon(in, "p").polygon();
            }).find("connected"),
            std::string::npos);
}

TEST(GraphIo, RoundTripAndDiagnostics) {
  Graph g(4, {{0, 1}, {2, 3}, {1, 2}});
  std::stringstream ss;
  io::write_graph(ss, g);
  EXPECT_EQ(io::read_graph(ss), g);
  EXPECT_EQ(error_of([] {
              std::istringstream in("3 1\n0 3\n");
              io::read_graph(in, "g");
            }),
            "g:2: vertex index out of range");
  EXPECT_EQ(error_of([] {
              std::istringstream in("3 2\n0 1\n1 0\n");
              io::read_graph(in, "g");
            }),
            "g:3: duplicate edge");
  EXPECT_EQ(error_of([] {
              std::istringstream in("3 2\n0 1\n");
              io::read_graph(in, "g");
            }),
            "g:1: header announces 2 edges, file has 1");
}

TEST(CertificateIo, VcRoundTrip) {
  auto inst = vc_to_bcc(Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
  std::stringstream ss;
  ss << io::to_json(inst.cert).dump(2);
  EXPECT_EQ(io::vc_cert_from_json(io::read_json(ss)), inst.cert);
}

TEST(CertificateIo, SrpcRoundTrip) {
  auto comps = from_boxes({XBox(1, 1, 3, 2), XBox(1, 1, 2, 3)}, XBox(0, 0, 4, 4));
  auto inst = srpc_to_sbcc(comps.front(), XBox(0, 0, 4, 4));
  auto j = io::to_json(inst.cert);
  EXPECT_EQ(io::srpc_cert_from_json(j), inst.cert);
  j.erase("frame");
  EXPECT_THROW(io::srpc_cert_from_json(j), InputError);
  EXPECT_THROW(io::vc_cert_from_json(io::to_json(inst.cert)), InputError);
}

TEST(BenchIo, RowFormat) {
  io::BenchRecord r{"t0", 10, 6, 4, 3, 4, 1.5, 0.25, false};
  std::ostringstream out;
  io::write_bench_row(out, r);
  EXPECT_EQ(out.str(), "t0,10,6,4,3,4,1.3333,1.500,0.250,0\n");
}

TEST(Svg, DeterministicAndComplete) {
  BichromaticSet s({{0, 0, Color::Red}, {4, 0, Color::Blue}});
  Cover z{{{XBox(kNegInf, -1, 1, 1), Color::Red}, {XBox(3, -1, 5, 1), Color::Blue}}, 2};
  svg::Scene scene{&s, &z, nullptr, {2}};
  const auto a = svg::render(scene);
  EXPECT_EQ(a, svg::render(scene));
  EXPECT_EQ(a.rfind("<svg", 0), 0u);
  EXPECT_NE(a.find("marker-end"), std::string::npos);
  std::size_t circles = 0;
  for (auto p = a.find("<circle"); p != std::string::npos; p = a.find("<circle", p + 1)) ++circles;
  EXPECT_EQ(circles, 2u);
}
