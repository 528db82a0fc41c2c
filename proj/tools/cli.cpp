#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ammann/delzant.hpp"
#include "ammann/io.hpp"
#include "ammann/quasilattice.hpp"
#include "ammann/symmetry.hpp"
#include "ammann/tiling.hpp"

namespace ammann::cli {
namespace {

// Raised for bad flag values and unreadable inputs; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string approx(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

// Recognizes +-phi^k for small k so reports read like "1 - φ = -1/φ".
std::string power_form(const Golden& x) {
  if (x.is_zero() || x == Golden(1) || x == Golden(-1)) return {};
  const Golden ax = abs(x);
  const std::string sign = x.sign() < 0 ? "-" : "";
  Golden p = 1;
  for (int k = 1; k <= 8; ++k) {
    p *= Golden::phi();
    if (ax == p) return sign + (k == 1 ? "φ" : "φ^" + std::to_string(k));
    if (ax * p == Golden(1)) return sign + (k == 1 ? "1/φ" : "1/φ^" + std::to_string(k));
  }
  return {};
}

std::string show(const Golden& x) {
  std::string s = x.str();
  if (const auto pf = power_form(x); !pf.empty() && pf != s) s += " = " + pf;
  if (!x.is_rational() || x.a().get_den() != 1) s += " ≈ " + approx(x.to_double());
  return s;
}

template <std::size_t N>
std::string show(const GVec<N>& v) {
  std::string s = to_string(v);
  if constexpr (N == 3) {
    bool exact_int = true;
    for (const auto& c : v) exact_int = exact_int && c.is_rational() && c.a().get_den() == 1;
    if (!exact_int)
      s += " ≈ (" + approx(v[0].to_double()) + ", " + approx(v[1].to_double()) + ", " + approx(v[2].to_double()) + ")";
  }
  return s;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << text;
}

Patch load_patch(const std::string& path) {
  try {
    return patch_from_json(read_input(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

Rational rational_flag(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("--" + name + ": '" + text + "' is not a rational number (use n or n/d)");
  }
}

Rhombohedron select_tile(const std::string& selector, const std::string& patch_path) {
  if (selector == "oblate-canonical") return canonical_tile(TileType::Oblate);
  if (selector == "prolate-canonical") return canonical_tile(TileType::Prolate);
  std::size_t pos = 0;
  unsigned long index = 0;
  try {
    index = std::stoul(selector, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != selector.size())
    throw UsageError("tile selector must be oblate-canonical, prolate-canonical or a patch index");
  if (patch_path.empty()) throw UsageError("a patch index needs --patch");
  const Patch p = load_patch(patch_path);
  if (index >= p.tiles.size())
    throw UsageError("tile index " + selector + " out of range (patch has " + std::to_string(p.tiles.size()) + " tiles)");
  return p.tiles[index];
}

void print_tile(std::ostream& out, const Rhombohedron& t) {
  out << "anchor: " << show(t.anchor) << "\n";
  for (int i = 0; i < 3; ++i) out << "edge " << i + 1 << ": " << show(t.edges[i]) << "\n";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---- subcommands -----------------------------------------------------------

struct GenArgs {
  std::string radius = "8";
  std::vector<std::string> shift{"1/70", "1/110", "1/130"};
  std::string output;
};

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  const Rational radius = rational_flag("radius", a.radius);
  GVec3 shift;
  for (int i = 0; i < 3; ++i) shift[i] = Golden(rational_flag("shift", a.shift[i]));
  PatchConfig cfg;
  try {
    cfg = PatchConfig::make(radius, shift);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Patch p = generate_patch(cfg);
  write_output(a.output, patch_to_json(p), out);
  if (!a.output.empty() && a.output != "-") {
    const auto s = stats(p);
    err << "wrote " << p.tiles.size() << " tiles (" << s.n_oblate << " oblate, " << s.n_prolate << " prolate) to "
        << a.output << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& input, std::ostream& out) {
  const Patch p = load_patch(input);
  const VerifyReport r = verify_patch(p);
  out << "tiles checked: " << r.tiles_checked << "\n";
  out << "vertices checked: " << r.vertices_checked << "\n";
  out << "tile pairs sharing vertices: " << r.tile_pairs_checked << "\n";
  static const char* const kNames[4] = {"(a) vertices in R", "(b) edges in star", "(c) canonicalizable",
                                        "(d) face-to-face"};
  for (char c = 'a'; c <= 'd'; ++c) {
    const std::size_t n = r.count(c);
    out << kNames[c - 'a'] << ": " << (n == 0 ? "ok" : std::to_string(n) + " violation(s)") << "\n";
  }
  for (const auto& v : r.violations) {
    out << "  [" << v.check << "] tiles";
    for (auto t : v.tiles) out << " " << t;
    out << ": " << v.detail << "\n";
  }
  out << (r.clean() ? "verdict: clean" : "verdict: FAILED") << "\n";
  return r.clean() ? 0 : 1;
}

int cmd_stats(const std::string& input, std::ostream& out) {
  const Patch p = load_patch(input);
  const PatchStats s = stats(p);
  out << "oblate: " << s.n_oblate << "\n";
  out << "prolate: " << s.n_prolate << "\n";
  out << "ratio prolate/oblate: " << (std::isinf(s.ratio) ? std::string("inf") : approx(s.ratio)) << "\n";
  return 0;
}

int cmd_export_obj(const std::string& input, const std::string& output, std::ostream& out) {
  const Patch p = load_patch(input);
  std::ostringstream ss;
  write_obj(ss, p);
  write_output(output, ss.str(), out);
  return 0;
}

void print_delzant(std::ostream& out, const DelzantResult& d) {
  out << "type: " << to_string(d.invariants.type) << "\n";
  out << "facets (inward normal X_j, offset λ_j):\n";
  for (int j = 0; j < 6; ++j) {
    const auto q = q30_index(d.rep.normals[j]);
    out << "  X" << j + 1 << " = " << to_string(d.rep.normals[j]);
    if (q) out << " [Q30 #" << *q + 1 << "]";
    out << "\n  λ" << j + 1 << " = " << show(d.rep.offsets[j]) << "\n";
  }
  out << "opposite pairs:";
  for (const auto& [a, b] : d.rep.pairing) out << " (" << a + 1 << "," << b + 1 << ")";
  out << "\n";
  out << "kernel of π:\n";
  for (const auto& k : d.ndesc.kernel_basis) out << "  " << to_string(k) << "\n";
  out << "Γ generators (rank " << d.ndesc.gamma_rank() << "):\n";
  for (const auto& g : d.ndesc.gamma_generators) out << "  " << to_string(g) << "\n";
  out << "torsion: ";
  if (d.ndesc.torsion_generators.empty()) out << "none\n";
  else {
    out << "\n";
    for (const auto& g : d.ndesc.torsion_generators) out << "  " << to_string(g) << "\n";
  }
  out << "level-set radii squared:\n";
  for (int p = 0; p < 3; ++p) out << "  b" << p + 1 << "² = " << show(d.radii_sq[p]) << "\n";
  out << "vertex chart groups:\n";
  for (int k = 0; k < 8; ++k) {
    const auto& c = d.chart_groups[k];
    out << "  vertex " << k << " facets {" << c.facets[0] + 1 << "," << c.facets[1] + 1 << "," << c.facets[2] + 1
        << "}:";
    for (const auto& g : c.generators) out << " " << to_string(g);
    if (!c.torsion.empty()) out << " torsion " << c.torsion.size();
    out << "\n";
  }
  out << "polytope volume: " << show(d.invariants.polytope_volume) << "\n";
  out << "cover volume: " << show(d.invariants.cover_volume) << "\n";
}

int cmd_delzant(const std::string& selector, const std::string& patch, const std::string& json_out,
                std::ostream& out) {
  const Rhombohedron t = select_tile(selector, patch);
  const DelzantResult d = delzant(t);
  if (json_out == "-") {
    out << delzant_to_json(d);
    return 0;
  }
  print_tile(out, t);
  print_delzant(out, d);
  if (!json_out.empty()) write_output(json_out, delzant_to_json(d), out);
  return 0;
}

int cmd_canon(const std::string& selector, const std::string& patch, std::ostream& out) {
  const Rhombohedron t = select_tile(selector, patch);
  print_tile(out, t);
  const Canonicalization c = canonicalize(t);
  out << "type: " << to_string(c.type) << "\n";
  out << "group element #" << c.group_index << " (det " << c.motion.g.det().str() << ", trace "
      << show(c.motion.g.trace()) << "):\n";
  std::istringstream rows(c.motion.g.matrix().str());
  for (std::string line; std::getline(rows, line);) out << "  " << line << "\n";
  out << "translation: " << show(c.motion.t) << "\n";
  if (const auto m = Quasilattice::R().member(c.motion.t)) {
    out << "translation in R:";
    for (long x : *m) out << " " << x;
    out << "\n";
  }
  out << "proper rotation suffices: " << yes_no(c.rotation_suffices) << "\n";
  out << "image equals canonical tile: " << yes_no(same_point_set(c.motion.apply(t), canonical_tile(c.type)))
      << "\n";
  return 0;
}

int cmd_group(std::ostream& out) {
  const IcosahedralGroup& g = icosahedral_group();
  std::size_t rotations = 0;
  bool orthogonal = true, dets = true, star_ok = true, q30_ok = true;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Isometry& e = g.elements[i];
    orthogonal = orthogonal && e.is_orthogonal();
    const Golden d = e.det();
    dets = dets && (d == Golden(1) || d == Golden(-1));
    if (d == Golden(1)) ++rotations;
    for (const auto& v : star12()) star_ok = star_ok && star12_index(e.apply(v)).has_value();
    for (const auto& q : star().Q30) q30_ok = q30_ok && q30_index(e.apply(q)).has_value();
  }
  out << "order: " << g.size() << "\n";
  out << "rotations (det +1): " << rotations << "\n";
  out << "all orthogonal: " << yes_no(orthogonal) << "\n";
  out << "all det ±1: " << yes_no(dets) << "\n";
  out << "permutes ±V1..±V6: " << yes_no(star_ok) << "\n";
  out << "permutes the 30 unit vectors of Q: " << yes_no(q30_ok) << "\n";
  const OrbitCount oc = orbit_classes();
  out << "edge triples: " << oc.oblate << " oblate, " << oc.prolate << " prolate\n";
  const bool ok = g.size() == 120 && rotations == 60 && orthogonal && dets && star_ok && q30_ok;
  return ok ? 0 : 1;
}

int cmd_compare(const std::string& sel_a, const std::string& sel_b, const std::string& patch, std::ostream& out) {
  const Rhombohedron a = select_tile(sel_a, patch);
  const Rhombohedron b = select_tile(sel_b, patch);
  const InvariantRecord ia = invariants(a);
  const InvariantRecord ib = invariants(b);
  const Verdict v = compare(a, b);
  out << "A: " << to_string(ia.type) << ", polytope volume " << show(ia.polytope_volume) << ", cover volume "
      << show(ia.cover_volume) << "\n";
  out << "B: " << to_string(ib.type) << ", polytope volume " << show(ib.polytope_volume) << ", cover volume "
      << show(ib.cover_volume) << "\n";
  out << "polytope volume ratio B/A: " << show(v.polytope_volume_ratio) << "\n";
  out << "cover volume ratio B/A: " << show(v.cover_volume_ratio) << "\n";
  out << "same reduction data: " << yes_no(v.same_reduction_data) << "\n";
  out << "diffeomorphic: " << yes_no(v.same_diffeotype) << "; symplectomorphic: " << yes_no(v.same_symplectotype)
      << "\n";
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Golden rhombohedra: cut-and-project patches and Delzant data"};
  app.name("ammann");
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a cut-and-project patch as JSON");
  gen_cmd->add_option("--radius", gen.radius, "Anchor cutoff in units of the edge length (rational)")
      ->capture_default_str();
  gen_cmd->add_option("--shift", gen.shift, "Internal-space shift x y z (rationals)")
      ->expected(3)
      ->capture_default_str();
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  std::string input;
  auto* verify_cmd = app.add_subcommand("verify", "Check a patch; exit 0 iff clean");
  verify_cmd->add_option("patch", input, "Patch JSON ('-' for stdin)")->required();

  auto* stats_cmd = app.add_subcommand("stats", "Count tiles by type");
  stats_cmd->add_option("patch", input, "Patch JSON ('-' for stdin)")->required();

  std::string output;
  auto* obj_cmd = app.add_subcommand("export-obj", "Write the patch as a Wavefront OBJ mesh");
  obj_cmd->add_option("patch", input, "Patch JSON ('-' for stdin)")->required();
  obj_cmd->add_option("-o,--output", output, "Output file (default stdout)");

  std::string tile, patch, json_out;
  auto* delzant_cmd = app.add_subcommand("delzant", "Half-space data, group N, radii and chart groups of a tile");
  delzant_cmd->add_option("--tile", tile, "oblate-canonical, prolate-canonical or a patch index")->required();
  delzant_cmd->add_option("--patch", patch, "Patch JSON for index selectors");
  delzant_cmd->add_option("--json", json_out, "Also write the result as JSON ('-' prints only JSON)");

  auto* canon_cmd = app.add_subcommand("canon", "Rigid motion taking a tile onto its canonical representative");
  canon_cmd->add_option("--tile", tile, "oblate-canonical, prolate-canonical or a patch index")->required();
  canon_cmd->add_option("--patch", patch, "Patch JSON for index selectors");

  auto* group_cmd = app.add_subcommand("group", "Generate the icosahedral group and check its invariance");

  std::string sel_a, sel_b;
  auto* compare_cmd = app.add_subcommand("compare", "Compare the invariants of two tiles");
  compare_cmd->add_option("--a", sel_a, "First tile selector")->required();
  compare_cmd->add_option("--b", sel_b, "Second tile selector")->required();
  compare_cmd->add_option("--patch", patch, "Patch JSON for index selectors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return 2;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out, err);
    if (*verify_cmd) return cmd_verify(input, out);
    if (*stats_cmd) return cmd_stats(input, out);
    if (*obj_cmd) return cmd_export_obj(input, output, out);
    if (*delzant_cmd) return cmd_delzant(tile, patch, json_out, out);
    if (*canon_cmd) return cmd_canon(tile, patch, out);
    if (*group_cmd) return cmd_group(out);
    if (*compare_cmd) return cmd_compare(sel_a, sel_b, patch, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const NonGenericShift& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace ammann::cli
