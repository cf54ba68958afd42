// boxcover: command-line front end for the solver library.
//
// Exit status: 0 success, 1 invalid input, 2 an exact search hit its budget,
// 3 a failed internal consistency check.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "boxcover/boxcover.hpp"

using namespace boxcover;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitTruncated = 2;
constexpr int kExitInternal = 3;

std::size_t default_budget() {
  if (const char* env = std::getenv("BOXCOVER_BUDGET")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) throw InputError("BOXCOVER_BUDGET must be a positive integer");
    return static_cast<std::size_t>(v);
  }
  return kDefaultNodeBudget;
}

// Writes to `path`, or stdout when it is empty or "-".
void emit(const std::string& path, const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  body(out);
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

struct Options {
  std::string input, output, points, cover, polygon, cert;
  std::string shape = "box";
  bool exact = false, greedy = false, approx = false, disjoint = false, trace = false;
  std::size_t budget = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 20, n = 10, vertices = 6, boxes = 4;
  double red_fraction = 0.5, edge_probability = 0.4;
  std::string kind = "points";
};

int solve_bcc(const Options& o) {
  const auto s = io::load_points(o.input);
  const Shape shape = o.shape == "halfstrip" ? Shape::HalfStrip : Shape::Box;
  const auto sol = o.exact ? solve_bcc_exact(s, shape, o.budget) : solve_bcc_greedy(s, shape);
  emit(o.output, [&](std::ostream& out) { io::write_cover(out, sol.cover); });
  std::cerr << "boxes " << sol.cover.size() << (o.exact ? (sol.optimal ? " optimal" : " truncated") : "") << '\n';
  return o.exact && !sol.optimal ? kExitTruncated : kExitOk;
}

int solve_sbcc(const Options& o) {
  const auto s = io::load_points(o.input);
  const auto sol = o.approx ? solve_sbcc_approx(s) : solve_sbcc_exact(s, o.disjoint, o.budget);
  emit(o.output, [&](std::ostream& out) { io::write_cover(out, sol.cover); });
  std::cerr << "boxes " << sol.cover.size();
  if (!o.approx) std::cerr << (sol.optimal ? " optimal" : " truncated");
  std::cerr << '\n';
  return !o.approx && !sol.optimal ? kExitTruncated : kExitOk;
}

void write_cert(const std::string& path, const nlohmann::json& j) {
  if (path.empty()) return;
  emit(path, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
}

int gen_vc(const Options& o) {
  const auto inst = vc_to_bcc(io::load_graph(o.input));
  emit(o.output, [&](std::ostream& out) { io::write_points(out, inst.points); });
  write_cert(o.cert, io::to_json(inst.cert));
  return kExitOk;
}

int gen_srpc(const Options& o) {
  const auto f = io::load_polygon(o.input);
  const auto inst = srpc_to_sbcc(f.polygon(), f.frame);
  emit(o.output, [&](std::ostream& out) { io::write_points(out, inst.points); });
  write_cert(o.cert, io::to_json(inst.cert));
  return kExitOk;
}

int gen_random(const Options& o) {
  if (o.kind == "points") {
    const auto s = generate_random_bichromatic(o.seed, o.n, o.red_fraction);
    emit(o.output, [&](std::ostream& out) { io::write_points(out, s); });
  } else if (o.kind == "graph") {
    const auto g = random_graph(o.seed, o.vertices, o.edge_probability);
    emit(o.output, [&](std::ostream& out) { io::write_graph(out, g); });
  } else if (o.kind == "polygon") {
    const auto p = generate_random_polygon(o.seed, o.boxes);
    io::PolygonFile f;
    const auto b = p.bounds();
    f.frame = XBox(b.lo_x() - 1, b.lo_y() - 1, b.hi_x() + 1, b.hi_y() + 1);
    f.boxes = partition_exact(p);
    emit(o.output, [&](std::ostream& out) { io::write_polygon(out, f); });
  } else {
    throw InputError("unknown kind '" + o.kind + "'");
  }
  return kExitOk;
}

int transform_disjointify(const Options& o) {
  const auto s = io::load_points(o.points);
  const auto z = io::load_cover(o.input);
  if (!is_valid_sbcc(z, s)) throw InputError(o.input + ": not a valid simultaneous cover of " + o.points);
  const auto sol = disjointify(z, s);
  emit(o.output, [&](std::ostream& out) { io::write_cover(out, sol.cover); });
  std::cerr << "boxes " << z.size() << " -> " << sol.cover.size() << ", fill steps " << sol.fill_steps << '\n';
  if (o.trace)
    for (const auto& t : sol.trace)
      std::cerr << "regions " << t.regions << " holes " << t.holes << " outer " << t.outer_complexity << '\n';
  return kExitOk;
}

int transform_extract_vc(const Options& o) {
  const auto s = io::load_points(o.points);
  const auto z = io::load_cover(o.input);
  const auto cert = io::vc_cert_from_json(io::load_json(o.cert));
  const auto vc = bcc_to_vc(z, s, cert);
  emit(o.output, [&](std::ostream& out) {
    out << vc.size() << '\n';
    for (std::size_t i = 0; i < vc.size(); ++i) out << (i ? " " : "") << vc[i];
    out << '\n';
  });
  return kExitOk;
}

int transform_extract_srpc(const Options& o) {
  const auto s = io::load_points(o.points);
  const auto z = io::load_cover(o.input);
  const auto cert = io::srpc_cert_from_json(io::load_json(o.cert));
  const auto sol = sbcc_to_srpc(z, s, cert);
  emit(o.output, [&](std::ostream& out) {
    // rectangles in polygon units; RED covers P, BLUE covers the frame minus P
    auto line = [&](const char* tag, const XBox& b) {
      out << tag << ' ' << b.lo_x() << ' ' << b.lo_y() << ' ' << b.hi_x() << ' ' << b.hi_y() << '\n';
    };
    for (const auto& b : sol.red) line("RED", b);
    for (const auto& b : sol.blue) line("BLUE", b);
  });
  std::cerr << "rectangles " << sol.red.size() << " + " << sol.blue.size() << '\n';
  return kExitOk;
}

int transform_perturb(const Options& o) {
  const auto s = perturb_general_position(io::load_points(o.input), o.seed);
  emit(o.output, [&](std::ostream& out) { io::write_points(out, s); });
  return kExitOk;
}

int analyze_polygon(const Options& o) {
  const auto p = io::load_polygon(o.input).polygon();
  const auto& c = p.census();
  const auto rpc = solve_rpc_exact(p, o.budget);
  emit(o.output, [&](std::ostream& out) {
    out << "vertices " << c.vertices() << "\nconvex " << c.convex << "\nreflex " << c.reflex << "\nholes " << c.holes
        << "\nouter_complexity " << c.outer_complexity << "\npartition " << partition_exact(p).size() << "\ncover "
        << rpc.boxes.size() << (rpc.optimal ? "" : " truncated") << '\n';
  });
  return rpc.optimal ? kExitOk : kExitTruncated;
}

int analyze_small_complement(const Options& o) {
  const auto f = io::load_polygon(o.input);
  const auto r = d_small_complement_ratio(f.polygon(), f.frame, o.budget);
  emit(o.output, [&](std::ostream& out) {
    out << "polygon_cover " << r.polygon_cover << "\ncomplement_cover " << r.complement_cover << "\nratio " << r.ratio()
        << (r.optimal ? "" : " truncated") << '\n';
  });
  return r.optimal ? kExitOk : kExitTruncated;
}

int render(const Options& o) {
  std::optional<BichromaticSet> s;
  std::optional<Cover> z;
  std::optional<RectPolygon> p;
  svg::Scene scene;
  if (!o.points.empty()) scene.points = &s.emplace(io::load_points(o.points));
  if (!o.cover.empty()) scene.cover = &z.emplace(io::load_cover(o.cover));
  if (!o.polygon.empty()) scene.polygon = &p.emplace(io::load_polygon(o.polygon).polygon());
  if (!o.cert.empty()) {
    const auto j = io::load_json(o.cert);
    if (j.value("kind", "") == "vc-bcc")
      for (const auto& [lo, hi] : io::vc_cert_from_json(j).lane_x) scene.lanes.push_back((lo + hi) / 2);
  }
  if (!scene.points && !scene.cover && !scene.polygon) throw InputError("render needs --points, --cover or --polygon");
  emit(o.output, [&](std::ostream& out) { svg::render(out, scene); });
  return kExitOk;
}

int bench(const Options& o, bool sbcc) {
  bool any_truncated = false;
  emit(o.output, [&](std::ostream& out) {
    out << io::kBenchHeader << '\n';
    for (std::size_t t = 0; t < o.trials; ++t) {
      const std::uint64_t seed = o.seed * 1'000'003 + t;
      const auto s = generate_random_bichromatic(seed, o.n, o.red_fraction);
      io::BenchRecord r;
      r.id = (sbcc ? "sbcc-" : "bcc-") + std::to_string(seed);
      r.n = s.size();
      r.reds = s.count(Color::Red);
      r.blues = s.size() - r.reds;
      auto t0 = std::chrono::steady_clock::now();
      if (sbcc) {
        const auto ex = solve_sbcc_exact(s, false, o.budget);
        r.exact_ms = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        r.heuristic = solve_sbcc_approx(s).cover.size();
        r.heur_ms = ms_since(t0);
        r.exact = ex.cover.size();
        r.truncated = !ex.optimal;
      } else {
        const auto ex = solve_bcc_exact(s, Shape::Box, o.budget);
        r.exact_ms = ms_since(t0);
        t0 = std::chrono::steady_clock::now();
        r.heuristic = solve_bcc_greedy(s).cover.size();
        r.heur_ms = ms_since(t0);
        r.exact = ex.cover.size();
        r.truncated = !ex.optimal;
      }
      any_truncated |= r.truncated;
      io::write_bench_row(out, r);
    }
  });
  return any_truncated ? kExitTruncated : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bichromatic box class-cover solvers, reductions and tools"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto out_opt = [&](CLI::App* c) { c->add_option("-o,--output", o.output, "Output file (default stdout)"); };
  auto budget_opt = [&](CLI::App* c) {
    c->add_option("--budget", o.budget, "Node budget for exact search (default BOXCOVER_BUDGET or 1000000)")
        ->check(CLI::PositiveNumber);
  };
  auto seed_opt = [&](CLI::App* c) { c->add_option("--seed", o.seed, "Random seed"); };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<int()> fn) {
    auto* c = parent->add_subcommand(name, help);
    c->callback([&action, fn] { action = fn; });
    out_opt(c);
    return c;
  };

  auto* solve = app.add_subcommand("solve", "Solve a cover problem")->require_subcommand(1);
  {
    auto* c = leaf(solve, "bcc", "Box class cover of the red points", [&] { return solve_bcc(o); });
    c->add_option("points", o.input, "Point file")->required()->check(CLI::ExistingFile);
    c->add_option("--shape", o.shape, "box or halfstrip")->check(CLI::IsMember({"box", "halfstrip"}));
    auto* ex = c->add_flag("--exact", o.exact, "Branch and bound");
    c->add_flag("--greedy", o.greedy, "Greedy set cover (default)")->excludes(ex);
    budget_opt(c);
  }
  {
    auto* c = leaf(solve, "sbcc", "Simultaneous cover of both colors", [&] { return solve_sbcc(o); });
    c->add_option("points", o.input, "Point file")->required()->check(CLI::ExistingFile);
    auto* ex = c->add_flag("--exact", o.exact, "Branch and bound (default)");
    auto* ap = c->add_flag("--approx", o.approx, "Greedy followed by disjointification")->excludes(ex);
    c->add_flag("--disjoint", o.disjoint, "Require interior-disjoint boxes (exact only)")->excludes(ap);
    budget_opt(c);
  }

  auto* gen = app.add_subcommand("gen", "Generate instances")->require_subcommand(1);
  {
    auto* c = leaf(gen, "vc-bcc", "Box cover instance from a graph", [&] { return gen_vc(o); });
    c->add_option("graph", o.input, "Graph file")->required()->check(CLI::ExistingFile);
    c->add_option("--cert", o.cert, "Certificate output (JSON)");
  }
  {
    auto* c = leaf(gen, "srpc-sbcc", "Simultaneous cover instance from a polygon", [&] { return gen_srpc(o); });
    c->add_option("polygon", o.input, "Polygon file; its FRAME is the outer rectangle")->required()->check(CLI::ExistingFile);
    c->add_option("--cert", o.cert, "Certificate output (JSON)");
  }
  {
    auto* c = leaf(gen, "random", "Random points, graph or polygon", [&] { return gen_random(o); });
    c->add_option("--kind", o.kind, "points, graph or polygon")->check(CLI::IsMember({"points", "graph", "polygon"}));
    c->add_option("--points", o.n, "Number of points");
    c->add_option("--red-fraction", o.red_fraction, "Share of red points")->check(CLI::Range(0.0, 1.0));
    c->add_option("--vertices", o.vertices, "Graph vertices");
    c->add_option("--edge-probability", o.edge_probability, "Graph edge probability")->check(CLI::Range(0.0, 1.0));
    c->add_option("--boxes", o.boxes, "Boxes in the polygon union")->check(CLI::PositiveNumber);
    seed_opt(c);
  }

  auto* tr = app.add_subcommand("transform", "Transform covers and instances")->require_subcommand(1);
  {
    auto* c = leaf(tr, "disjointify", "Make a simultaneous cover interior-disjoint",
                   [&] { return transform_disjointify(o); });
    c->add_option("--in", o.input, "Cover file")->required()->check(CLI::ExistingFile);
    c->add_option("--points", o.points, "Point file")->required()->check(CLI::ExistingFile);
    c->add_flag("--trace", o.trace, "Print region statistics after each fill to stderr");
  }
  {
    auto* c = leaf(tr, "extract-vc", "Vertex cover from a box cover of a gadget instance",
                   [&] { return transform_extract_vc(o); });
    c->add_option("--in", o.input, "Cover file")->required()->check(CLI::ExistingFile);
    c->add_option("--points", o.points, "Point file")->required()->check(CLI::ExistingFile);
    c->add_option("--cert", o.cert, "Certificate")->required()->check(CLI::ExistingFile);
  }
  {
    auto* c = leaf(tr, "extract-srpc", "Rectangle covers of a polygon and its complement",
                   [&] { return transform_extract_srpc(o); });
    c->add_option("--in", o.input, "Cover file")->required()->check(CLI::ExistingFile);
    c->add_option("--points", o.points, "Point file")->required()->check(CLI::ExistingFile);
    c->add_option("--cert", o.cert, "Certificate")->required()->check(CLI::ExistingFile);
  }
  {
    auto* c = leaf(tr, "perturb", "Move points into general position", [&] { return transform_perturb(o); });
    c->add_option("points", o.input, "Point file")->required()->check(CLI::ExistingFile);
    seed_opt(c);
  }

  auto* an = app.add_subcommand("analyze", "Polygon statistics")->require_subcommand(1);
  {
    auto* c = leaf(an, "polygon", "Vertex census, partition and cover sizes", [&] { return analyze_polygon(o); });
    c->add_option("polygon", o.input, "Polygon file")->required()->check(CLI::ExistingFile);
    budget_opt(c);
  }
  {
    auto* c = leaf(an, "small-complement", "Complement-to-polygon cover ratio inside the frame",
                   [&] { return analyze_small_complement(o); });
    c->add_option("polygon", o.input, "Polygon file")->required()->check(CLI::ExistingFile);
    budget_opt(c);
  }

  {
    auto* c = leaf(&app, "render", "Draw points, a cover and a polygon as SVG", [&] { return render(o); });
    c->add_option("--points", o.points, "Point file")->check(CLI::ExistingFile);
    c->add_option("--cover", o.cover, "Cover file")->check(CLI::ExistingFile);
    c->add_option("--polygon", o.polygon, "Polygon file")->check(CLI::ExistingFile);
    c->add_option("--cert", o.cert, "Gadget certificate; its lanes are drawn as guides")->check(CLI::ExistingFile);
  }

  auto* be = app.add_subcommand("bench", "Exact versus heuristic on random instances")->require_subcommand(1);
  for (const bool sbcc : {false, true}) {
    auto* c = leaf(be, sbcc ? "sbcc" : "bcc", sbcc ? "Simultaneous cover" : "Box cover",
                   [&o, sbcc] { return bench(o, sbcc); });
    c->add_option("--trials", o.trials, "Number of instances")->check(CLI::PositiveNumber);
    c->add_option("--points", o.n, "Points per instance");
    c->add_option("--red-fraction", o.red_fraction, "Share of red points")->check(CLI::Range(0.0, 1.0));
    seed_opt(c);
    budget_opt(c);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (o.budget == 0) o.budget = default_budget();
    return action();
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}
