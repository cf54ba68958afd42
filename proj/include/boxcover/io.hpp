#pragma once

// Plain-text formats for point sets, covers, polygons and graphs, JSON for
// reduction certificates, CSV for bench records. Readers report problems as
// InputError with "<source>:<line>: ..." prefixes.

#include <charconv>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "boxcover/geometry.hpp"
#include "boxcover/rect_poly.hpp"
#include "boxcover/reductions.hpp"
#include "json.hpp"

namespace boxcover::io {

namespace detail {

using boxcover::detail::require;

// Non-empty, comment-stripped lines split into whitespace tokens.
struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  for (std::size_t n = 1; std::getline(in, raw); ++n) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ss(raw);
    std::vector<std::string> toks{std::istream_iterator<std::string>(ss), std::istream_iterator<std::string>()};
    if (!toks.empty()) out.push_back({n, std::move(toks)});
  }
  return out;
}

[[noreturn]] inline void fail(std::string_view source, std::size_t line, const std::string& msg) {
  throw InputError(std::string(source) + ":" + std::to_string(line) + ": " + msg);
}

inline Coord parse_int(std::string_view source, std::size_t line, const std::string& tok) {
  Coord v = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end) fail(source, line, "expected an integer, got '" + tok + "'");
  return v;
}

inline Coord parse_coord(std::string_view source, std::size_t line, const std::string& tok) {
  if (tok == "INF" || tok == "+INF") return kPosInf;
  if (tok == "-INF") return kNegInf;
  return parse_int(source, line, tok);
}

inline std::string coord_str(Coord v) {
  if (v == kPosInf) return "INF";
  if (v == kNegInf) return "-INF";
  return std::to_string(v);
}

inline void expect_arity(std::string_view source, const Line& l, std::size_t n) {
  if (l.tokens.size() != n)
    fail(source, l.number, "expected " + std::to_string(n) + " fields, got " + std::to_string(l.tokens.size()));
}

template <typename F>
auto at_line(std::string_view source, std::size_t line, F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    fail(source, line, e.what());
  }
}

inline std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open '" + path + "'");
  return in;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Points: "R x y" / "B x y", unscaled

inline BichromaticSet read_points(std::istream& in, std::string_view source = "<points>") {
  std::vector<Point> raw;
  std::size_t last = 0;
  for (const auto& l : detail::tokenize(in)) {
    detail::expect_arity(source, l, 3);
    const auto& tag = l.tokens[0];
    Color c;
    if (tag == "R") c = Color::Red;
    else if (tag == "B") c = Color::Blue;
    else detail::fail(source, l.number, "color must be R or B, got '" + tag + "'");
    raw.push_back({detail::parse_int(source, l.number, l.tokens[1]), detail::parse_int(source, l.number, l.tokens[2]), c});
    last = l.number;
  }
  return detail::at_line(source, last, [&] { return BichromaticSet::from_unscaled(raw); });
}

inline void write_points(std::ostream& out, const BichromaticSet& s) {
  detail::require(s.scale() == kDefaultScale, "only sets at the default scale have an unscaled form");
  for (const auto& p : s.points())
    out << (p.color == Color::Red ? 'R' : 'B') << ' ' << p.x / kDefaultScale << ' ' << p.y / kDefaultScale << '\n';
}

// ---------------------------------------------------------------------------
// Covers: "SCALE s" then "RED|BLUE lox loy hix hiy"

inline Cover read_cover(std::istream& in, std::string_view source = "<cover>") {
  Cover z;
  bool have_scale = false;
  for (const auto& l : detail::tokenize(in)) {
    if (l.tokens[0] == "SCALE") {
      detail::expect_arity(source, l, 2);
      if (have_scale) detail::fail(source, l.number, "duplicate SCALE line");
      z.scale = detail::parse_int(source, l.number, l.tokens[1]);
      if (z.scale < 2 || z.scale % 2 != 0) detail::fail(source, l.number, "scale must be a positive even integer");
      have_scale = true;
      continue;
    }
    if (!have_scale) detail::fail(source, l.number, "cover must start with a SCALE line");
    detail::expect_arity(source, l, 5);
    Color c;
    if (l.tokens[0] == "RED") c = Color::Red;
    else if (l.tokens[0] == "BLUE") c = Color::Blue;
    else detail::fail(source, l.number, "label must be RED or BLUE, got '" + l.tokens[0] + "'");
    Coord v[4];
    for (int i = 0; i < 4; ++i) v[i] = detail::parse_coord(source, l.number, l.tokens[static_cast<std::size_t>(i) + 1]);
    z.boxes.push_back({detail::at_line(source, l.number, [&] { return XBox(v[0], v[1], v[2], v[3]); }), c});
  }
  if (!have_scale) detail::fail(source, 0, "missing SCALE line");
  return z;
}

inline void write_cover(std::ostream& out, const Cover& z) {
  out << "SCALE " << z.scale << '\n';
  for (const auto& lb : z.boxes) {
    out << (lb.color == Color::Red ? "RED" : "BLUE");
    for (Coord v : {lb.box.lo_x(), lb.box.lo_y(), lb.box.hi_x(), lb.box.hi_y()}) out << ' ' << detail::coord_str(v);
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// Polygons: "FRAME lox loy hix hiy" then "BOX lox loy hix hiy" lines

struct PolygonFile {
  XBox frame;
  std::vector<XBox> boxes;

  /// The union of the boxes; it must be a single component.
  RectPolygon polygon() const {
    auto comps = from_boxes(boxes, frame);
    detail::require(comps.size() == 1, "polygon boxes must form exactly one connected region, found " +
                                            std::to_string(comps.size()));
    return std::move(comps.front());
  }
};

inline PolygonFile read_polygon(std::istream& in, std::string_view source = "<polygon>") {
  PolygonFile f;
  bool have_frame = false;
  for (const auto& l : detail::tokenize(in)) {
    detail::expect_arity(source, l, 5);
    Coord v[4];
    for (int i = 0; i < 4; ++i) v[i] = detail::parse_int(source, l.number, l.tokens[static_cast<std::size_t>(i) + 1]);
    const XBox b = detail::at_line(source, l.number, [&] { return XBox(v[0], v[1], v[2], v[3]); });
    if (l.tokens[0] == "FRAME") {
      if (have_frame) detail::fail(source, l.number, "duplicate FRAME line");
      f.frame = b;
      have_frame = true;
    } else if (l.tokens[0] == "BOX") {
      if (!have_frame) detail::fail(source, l.number, "FRAME must come before BOX lines");
      if (!f.frame.contains(b)) detail::fail(source, l.number, "box leaves the frame");
      f.boxes.push_back(b);
    } else {
      detail::fail(source, l.number, "expected FRAME or BOX, got '" + l.tokens[0] + "'");
    }
  }
  if (!have_frame) detail::fail(source, 0, "missing FRAME line");
  if (f.boxes.empty()) detail::fail(source, 0, "polygon has no boxes");
  return f;
}

inline void write_polygon(std::ostream& out, const PolygonFile& f) {
  auto line = [&](const char* tag, const XBox& b) {
    out << tag << ' ' << b.lo_x() << ' ' << b.lo_y() << ' ' << b.hi_x() << ' ' << b.hi_y() << '\n';
  };
  line("FRAME", f.frame);
  for (const auto& b : f.boxes) line("BOX", b);
}

// ---------------------------------------------------------------------------
// Graphs: "n m" then m lines "u v"

inline Graph read_graph(std::istream& in, std::string_view source = "<graph>") {
  const auto lines = detail::tokenize(in);
  if (lines.empty()) detail::fail(source, 0, "empty graph file");
  detail::expect_arity(source, lines[0], 2);
  const Coord n = detail::parse_int(source, lines[0].number, lines[0].tokens[0]);
  const Coord m = detail::parse_int(source, lines[0].number, lines[0].tokens[1]);
  if (n < 0 || m < 0) detail::fail(source, lines[0].number, "counts must be non-negative");
  if (static_cast<Coord>(lines.size()) - 1 != m)
    detail::fail(source, lines[0].number,
                 "header announces " + std::to_string(m) + " edges, file has " + std::to_string(lines.size() - 1));
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    detail::expect_arity(source, lines[i], 2);
    const Coord u = detail::parse_int(source, lines[i].number, lines[i].tokens[0]);
    const Coord v = detail::parse_int(source, lines[i].number, lines[i].tokens[1]);
    if (u < 0 || v < 0 || u >= n || v >= n) detail::fail(source, lines[i].number, "vertex index out of range");
    if (u == v) detail::fail(source, lines[i].number, "self-loop");
    for (const auto& e : edges)
      if (e == std::pair<std::size_t, std::size_t>(std::min(u, v), std::max(u, v)))
        detail::fail(source, lines[i].number, "duplicate edge");
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

inline void write_graph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

// ---------------------------------------------------------------------------
// Certificates (JSON)

inline nlohmann::json box_json(const XBox& b) { return {b.lo_x(), b.lo_y(), b.hi_x(), b.hi_y()}; }

inline XBox box_from_json(const nlohmann::json& j) {
  return XBox(j.at(0).get<Coord>(), j.at(1).get<Coord>(), j.at(2).get<Coord>(), j.at(3).get<Coord>());
}

inline nlohmann::json to_json(const VcGadgetCert& c) {
  nlohmann::json j;
  j["kind"] = "vc-bcc";
  j["n"] = c.graph.n();
  j["edges"] = c.graph.edges();
  j["lane_x"] = c.lane_x;
  j["edge_lane_x"] = c.edge_lane_x;
  j["gadget_bbox"] = nlohmann::json::array();
  for (const auto& b : c.gadget_bbox) j["gadget_bbox"].push_back(box_json(b));
  j["roles"] = nlohmann::json::array();
  for (auto r : c.roles) j["roles"].push_back(to_string(r));
  j["owner_edge"] = c.owner_edge;
  j["reds"] = c.reds;
  return j;
}

inline VcGadgetCert vc_cert_from_json(const nlohmann::json& j) {
  try {
    detail::require(j.at("kind") == "vc-bcc", "certificate kind is not vc-bcc");
    VcGadgetCert c;
    c.graph = Graph(j.at("n").get<std::size_t>(), j.at("edges").get<std::vector<std::pair<std::size_t, std::size_t>>>());
    c.lane_x = j.at("lane_x").get<std::vector<std::pair<Coord, Coord>>>();
    c.edge_lane_x = j.at("edge_lane_x").get<std::vector<std::pair<Coord, Coord>>>();
    for (const auto& b : j.at("gadget_bbox")) c.gadget_bbox.push_back(box_from_json(b));
    for (const auto& r : j.at("roles")) {
      const auto s = r.get<std::string>();
      if (s == "left") c.roles.push_back(PointRole::LeftRed);
      else if (s == "middle") c.roles.push_back(PointRole::MiddleRed);
      else if (s == "right") c.roles.push_back(PointRole::RightRed);
      else if (s == "blocker") c.roles.push_back(PointRole::Blocker);
      else throw InputError("unknown point role '" + s + "'");
    }
    c.owner_edge = j.at("owner_edge").get<std::vector<std::size_t>>();
    c.reds = j.at("reds").get<std::vector<std::array<std::size_t, 3>>>();
    detail::require(c.owner_edge.size() == c.roles.size(), "certificate arrays disagree in length");
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
}

inline nlohmann::json to_json(const SrpcGridCert& c) {
  nlohmann::json j;
  j["kind"] = "srpc-sbcc";
  j["l1_x"] = c.l1_x;
  j["l1_y"] = c.l1_y;
  j["l2_x"] = c.l2_x;
  j["l2_y"] = c.l2_y;
  j["poly_xs"] = c.poly_xs;
  j["poly_ys"] = c.poly_ys;
  j["poly_cells"] = c.poly_cells;
  j["frame"] = box_json(c.frame);
  return j;
}

inline SrpcGridCert srpc_cert_from_json(const nlohmann::json& j) {
  try {
    detail::require(j.at("kind") == "srpc-sbcc", "certificate kind is not srpc-sbcc");
    SrpcGridCert c;
    c.l1_x = j.at("l1_x").get<std::vector<Coord>>();
    c.l1_y = j.at("l1_y").get<std::vector<Coord>>();
    c.l2_x = j.at("l2_x").get<std::vector<Coord>>();
    c.l2_y = j.at("l2_y").get<std::vector<Coord>>();
    c.poly_xs = j.at("poly_xs").get<std::vector<Coord>>();
    c.poly_ys = j.at("poly_ys").get<std::vector<Coord>>();
    c.poly_cells = j.at("poly_cells").get<std::vector<std::uint8_t>>();
    c.frame = box_from_json(j.at("frame"));
    (void)c.polygon();  // validates the grid
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
}

inline nlohmann::json read_json(std::istream& in, std::string_view source = "<json>") {
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string(source) + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Bench CSV

struct BenchRecord {
  std::string id;
  std::size_t n = 0, reds = 0, blues = 0;
  std::size_t exact = 0;
  std::size_t heuristic = 0;
  double exact_ms = 0, heur_ms = 0;
  bool truncated = false;

  double ratio() const { return exact == 0 ? 1.0 : static_cast<double>(heuristic) / static_cast<double>(exact); }
};

inline constexpr const char* kBenchHeader = "id,n,reds,blues,exact,heuristic,ratio,exact_ms,heur_ms,truncated";

inline void write_bench_row(std::ostream& out, const BenchRecord& r) {
  std::ostringstream line;
  line << r.id << ',' << r.n << ',' << r.reds << ',' << r.blues << ',' << r.exact << ',' << r.heuristic << ','
       << std::fixed << std::setprecision(4) << r.ratio() << ',' << std::setprecision(3) << r.exact_ms << ','
       << r.heur_ms << ',' << (r.truncated ? 1 : 0);
  out << line.str() << '\n';
}

// ---------------------------------------------------------------------------
// File helpers

inline BichromaticSet load_points(const std::string& path) {
  auto in = detail::open_in(path);
  return read_points(in, path);
}
inline Cover load_cover(const std::string& path) {
  auto in = detail::open_in(path);
  return read_cover(in, path);
}
inline PolygonFile load_polygon(const std::string& path) {
  auto in = detail::open_in(path);
  return read_polygon(in, path);
}
inline Graph load_graph(const std::string& path) {
  auto in = detail::open_in(path);
  return read_graph(in, path);
}
inline nlohmann::json load_json(const std::string& path) {
  auto in = detail::open_in(path);
  return read_json(in, path);
}

}  // namespace boxcover::io
