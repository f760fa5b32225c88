#include "sos/cli.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "sos/geom.hpp"
#include "sos/input_file.hpp"
#include "sos/predicates.hpp"
#include "sos/sos_sign.hpp"
#include "sos/term_table_io.hpp"

namespace sos {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  bool depths = false;
  std::string mode = "cartesian";
  bool no_pretest = false;
  bool merge_collinear = false;
  std::string format = "text";
  std::string style = "case";
  std::string file;
  std::vector<std::string> values;  // extra positional arguments
  std::string kind;
  std::size_t dim = 0;
};

CoordMode coord_mode(const Settings& s) {
  return s.mode == "homogeneous" ? CoordMode::homogeneous : CoordMode::cartesian;
}

MatrixKind matrix_kind(const std::string& name) {
  if (name == "lambda") return MatrixKind::lambda;
  if (name == "delta") return MatrixKind::delta;
  throw UsageError("kind must be lambda or delta");
}

void check_table_dim(std::size_t dim) {
  if (dim < 2 || dim > max_table_size)
    throw UsageError("dim must be between 2 and " + std::to_string(max_table_size));
}

PointSet load_points(const InputFile& in, std::size_t dim, CoordMode mode) {
  PointSet ps(dim, mode);
  for (const auto& row : in.rows) ps.add(row);
  return ps;
}

std::vector<Hyperplane> load_planes(const InputFile& in) {
  std::vector<Hyperplane> planes;
  for (std::size_t i = 0; i < in.size(); ++i) planes.push_back({static_cast<std::int64_t>(i), in.rows[i]});
  return planes;
}

std::vector<std::int64_t> all_indices(std::size_t n) {
  std::vector<std::int64_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = static_cast<std::int64_t>(i);
  return idx;
}

void expect_count(const InputFile& in, std::size_t want, const std::string& what) {
  if (in.size() != want)
    throw UsageError(what + ": expected " + std::to_string(want) + " objects of arity " + std::to_string(in.arity()) +
                     ", found " + std::to_string(in.size()));
}

void print_bool(std::ostream& out, bool b) { out << (b ? "true" : "false") << '\n'; }

int cmd_orient(const Settings& s, std::ostream& out, DepthRecorder& rec) {
  const InputFile in = read_input_file(s.file);
  const CoordMode mode = coord_mode(s);
  if (in.arity() == 0) throw UsageError("orient: empty input");
  const std::size_t d = mode == CoordMode::homogeneous ? in.arity() - 1 : in.arity();
  if (d == 0) throw UsageError("orient: homogeneous points need at least 2 values");
  expect_count(in, d + 1, "orient");
  const PointSet ps = load_points(in, d, mode);
  DepthRecorder local;
  PredicateOptions opts{.recorder = &local};
  const auto idx = all_indices(ps.size());
  const bool pos = positive(ps.refs(idx), mode, opts);
  out << (pos ? "positive" : "negative") << '\n' << "depth " << local.max_depth() << '\n';
  rec.merge(local);
  return 0;
}

int cmd_pip(const Settings& s, std::ostream& out, DepthRecorder& rec) {
  const InputFile in = read_input_file(s.file);
  if (in.arity() != 2) throw UsageError("pip: polygon vertices need 2 coordinates");
  if (in.size() < 3) throw UsageError("pip: polygon needs at least 3 vertices");
  if (s.values.size() != 2) throw UsageError("pip: expected the query point as two integers");
  Point2 p;
  try {
    p = {parse_int64(s.values[0]), parse_int64(s.values[1])};
  } catch (const InputError& e) {
    throw UsageError(std::string("pip: ") + e.what());
  }
  Polygon poly;
  for (const auto& row : in.rows) poly.vertices.push_back({row[0], row[1]});
  const PipResult res = point_in_polygon(p, poly, !s.no_pretest, {.recorder = &rec});
  if (res.classification == PipClass::boundary) {
    out << "boundary\n";
  } else {
    out << to_string(res.classification) << ' ' << res.crossings << '\n' << "max_depth " << res.max_depth << '\n';
  }
  return 0;
}

int cmd_hull2d(const Settings& s, std::ostream& out, DepthRecorder& rec) {
  const InputFile in = read_input_file(s.file);
  if (in.arity() != 2) throw UsageError("hull2d: points need 2 coordinates");
  if (in.size() < 3) throw UsageError("hull2d: at least 3 points required");
  const PointSet ps = load_points(in, 2, CoordMode::cartesian);
  const auto cycle = convex_hull_2d(ps, {.merge_collinear = s.merge_collinear}, {.recorder = &rec});
  for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? " " : "") << cycle[i];
  out << '\n';
  return 0;
}

int cmd_delaunay2d(const Settings& s, std::ostream& out, DepthRecorder& rec) {
  const InputFile in = read_input_file(s.file);
  if (in.arity() != 2) throw UsageError("delaunay2d: points need 2 coordinates");
  if (in.size() < 3) throw UsageError("delaunay2d: at least 3 points required");
  const PointSet ps = load_points(in, 2, CoordMode::cartesian);
  const Triangulation tri = delaunay_2d(ps, {.recorder = &rec});
  for (const auto& t : tri.triangles) out << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
  if (!tri.redundant.empty()) {
    out << "redundant";
    for (auto i : tri.redundant) out << ' ' << i;
    out << '\n';
  }
  return 0;
}

int cmd_insphere(const Settings& s, std::ostream& out, DepthRecorder& rec) {
  const InputFile in = read_input_file(s.file);
  if (in.arity() == 0) throw UsageError("insphere: empty input");
  expect_count(in, in.arity() + 2, "insphere");
  const PointSet ps = load_points(in, in.arity(), CoordMode::cartesian);
  print_bool(out, in_sphere(ps.refs(all_indices(ps.size())), {.recorder = &rec}));
  return 0;
}

int cmd_above(const Settings& s, std::ostream& out, DepthRecorder& rec) {
  const InputFile in = read_input_file(s.file);
  if (in.arity() == 0) throw UsageError("above: empty input");
  expect_count(in, in.arity() + 1, "above");
  print_bool(out, above(load_planes(in), {.recorder = &rec}));
  return 0;
}

int cmd_side(const Settings& s, std::ostream& out, DepthRecorder& rec) {
  const InputFile in = read_input_file(s.file);
  if (in.arity() < 2) throw UsageError("side: hyperplanes need at least 2 coefficients");
  expect_count(in, in.arity(), "side");
  print_bool(out, on_positive_side(load_planes(in), {.recorder = &rec}));
  return 0;
}

int cmd_smaller(const Settings& s, std::ostream& out, DepthRecorder& rec) {
  const InputFile in = read_input_file(s.file);
  if (s.values.size() != 4) throw UsageError("smaller: expected I J K L");
  std::int64_t v[4];
  try {
    for (int a = 0; a < 4; ++a) v[a] = parse_int64(s.values[static_cast<std::size_t>(a)]);
  } catch (const InputError& e) {
    throw UsageError(std::string("smaller: ") + e.what());
  }
  auto coord = [&](std::int64_t i, std::int64_t j) {
    if (i < 0 || static_cast<std::size_t>(i) >= in.size()) throw UsageError("smaller: index out of range");
    if (j < 1 || static_cast<std::size_t>(j) > in.arity()) throw UsageError("smaller: coordinate out of range");
    return CoordRef{i, static_cast<int>(j), in.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)]};
  };
  const CoordRef a = coord(v[0], v[1]);
  const CoordRef b = coord(v[2], v[3]);
  if (a.index == b.index && a.coord == b.coord) throw UsageError("smaller: both sides name the same coordinate");
  print_bool(out, smaller(a, b));
  rec.record("smaller", a.value == b.value ? 1 : 0);
  return 0;
}

int cmd_gentable(const Settings& s, std::ostream& out) {
  const MatrixKind kind = matrix_kind(s.kind);
  check_table_dim(s.dim);
  const auto table = generate_term_table(kind, s.dim);
  out << (s.format == "csv" ? format_term_table_csv(table) : format_term_table_text(kind, table));
  return 0;
}

int cmd_gencode(const Settings& s, std::ostream& out) {
  const MatrixKind kind = matrix_kind(s.kind);
  check_table_dim(s.dim);
  out << emit_straightline_code(kind, s.dim, s.style == "unrolled" ? CodeStyle::unrolled : CodeStyle::case_table);
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact geometric predicates under Simulation of Simplicity", "sos"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_flag("--depths", s.depths, "Append a degeneracy report");
  app.add_option("--mode", s.mode, "Coordinate mode for orient")
      ->check(CLI::IsMember({"cartesian", "homogeneous"}));

  auto file_arg = [&](CLI::App* sub, const char* help) { sub->add_option("file", s.file, help)->required(); };

  auto* orient = app.add_subcommand("orient", "Orientation of d+1 points");
  file_arg(orient, "Input file with d+1 points");

  auto* pip = app.add_subcommand("pip", "Point in polygon by the parity algorithm");
  file_arg(pip, "Polygon vertices in order");
  pip->add_option("point", s.values, "Query point: x y")->expected(2)->required();
  pip->add_flag("--no-pretest", s.no_pretest, "Skip the exact boundary test");

  auto* hull = app.add_subcommand("hull2d", "Convex hull of planar points");
  file_arg(hull, "Planar points");
  hull->add_flag("--merge-collinear", s.merge_collinear, "Drop vertices collinear with their neighbours");

  auto* del = app.add_subcommand("delaunay2d", "Delaunay triangulation of planar points");
  file_arg(del, "Planar points");

  auto* insphere = app.add_subcommand("insphere", "Whether the last of d+2 points is inside the sphere");
  file_arg(insphere, "d+2 points");

  auto* abv = app.add_subcommand("above", "Whether the meet of d nonvertical hyperplanes is above the last");
  file_arg(abv, "d+1 hyperplanes with d coefficients");

  auto* side = app.add_subcommand("side", "Whether the meet of d hyperplanes is on the positive side of the last");
  file_arg(side, "d+1 hyperplanes with d+1 coefficients");

  auto* sm = app.add_subcommand("smaller", "Compare perturbed coordinates pi(I,J) < pi(K,L)");
  file_arg(sm, "Points");
  sm->add_option("refs", s.values, "I J K L (coordinates from 1)")->expected(4)->required();

  auto* gentable = app.add_subcommand("gentable", "Print the relevant terms of a perturbed determinant");
  gentable->add_option("kind", s.kind, "lambda or delta")->required();
  gentable->add_option("dim", s.dim, "Matrix size")->required();
  gentable->add_option("--format", s.format, "csv or text")->check(CLI::IsMember({"csv", "text"}));

  auto* gencode = app.add_subcommand("gencode", "Print straight-line evaluation code");
  gencode->add_option("kind", s.kind, "lambda or delta")->required();
  gencode->add_option("dim", s.dim, "Matrix size")->required();
  gencode->add_option("--style", s.style, "case or unrolled")->check(CLI::IsMember({"case", "unrolled"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  DepthRecorder rec;
  try {
    int code = 0;
    if (orient->parsed()) code = cmd_orient(s, out, rec);
    else if (pip->parsed()) code = cmd_pip(s, out, rec);
    else if (hull->parsed()) code = cmd_hull2d(s, out, rec);
    else if (del->parsed()) code = cmd_delaunay2d(s, out, rec);
    else if (insphere->parsed()) code = cmd_insphere(s, out, rec);
    else if (abv->parsed()) code = cmd_above(s, out, rec);
    else if (side->parsed()) code = cmd_side(s, out, rec);
    else if (sm->parsed()) code = cmd_smaller(s, out, rec);
    else if (gentable->parsed()) code = cmd_gentable(s, out);
    else if (gencode->parsed()) code = cmd_gencode(s, out);
    if (s.depths) out << rec.report().to_text();
    return code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  }
  return 2;
}

}  // namespace sos
