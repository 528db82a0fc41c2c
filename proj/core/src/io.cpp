#include "ammann/io.hpp"

#include <cstdio>

#include "json.hpp"

namespace ammann {

using nlohmann::json;

namespace {

json int_json(const mpz_class& z) {
  if (z.fits_slong_p()) return json(z.get_si());
  return json(z.get_str());
}

mpz_class int_from(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer string");
    return z;
  }
  throw ParseError("expected an integer, got " + j.dump());
}

json to_j(const Golden& x) {
  return json::array({int_json(x.a().get_num()), int_json(x.a().get_den()), int_json(x.b().get_num()),
                      int_json(x.b().get_den())});
}

Golden golden_from(const json& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("golden number must be [a_num, a_den, b_num, b_den]");
  const mpz_class ad = int_from(j[1]);
  const mpz_class bd = int_from(j[3]);
  if (ad <= 0 || bd <= 0) throw ParseError("golden number denominators must be positive");
  return Golden(Rational(int_from(j[0]), ad), Rational(int_from(j[2]), bd));
}

template <std::size_t N>
json to_j(const GVec<N>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_j(x));
  return a;
}

template <std::size_t N>
GVec<N> vec_from(const json& j) {
  if (!j.is_array() || j.size() != N) throw ParseError("expected a vector of " + std::to_string(N) + " golden numbers");
  GVec<N> v;
  for (std::size_t i = 0; i < N; ++i) v[i] = golden_from(j[i]);
  return v;
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

json tile_to_j(const Rhombohedron& t) {
  json edges = json::array();
  for (const auto& e : t.edges) edges.push_back(to_j(e));
  std::string type;
  try {
    type = std::string(to_string(classify(t.edges)));
  } catch (const InvalidTile&) {
    type = "invalid";
  }
  return json{{"lattice_origin", t.lattice_origin},
              {"axis_triple", t.axis_triple},
              {"anchor", to_j(t.anchor)},
              {"edges", edges},
              {"type", type}};
}

Rhombohedron tile_from(const json& j) {
  Rhombohedron t;
  try {
    t.lattice_origin = field(j, "lattice_origin").get<std::array<long, 6>>();
    t.axis_triple = field(j, "axis_triple").get<std::array<int, 3>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("tile lattice data: ") + e.what());
  }
  t.anchor = vec_from<3>(field(j, "anchor"));
  const json& edges = field(j, "edges");
  if (!edges.is_array() || edges.size() != 3) throw ParseError("tile must have three edges");
  for (int i = 0; i < 3; ++i) t.edges[i] = vec_from<3>(edges[i]);
  const json& type = field(j, "type");
  if (!type.is_string()) throw ParseError("tile type must be a string");
  return t;
}

json gvec6_list(const std::vector<GVec6>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_j(v));
  return a;
}

template <std::size_t N>
json gvec6_list(const std::array<GVec6, N>& vs) {
  return gvec6_list(std::vector<GVec6>(vs.begin(), vs.end()));
}

}  // namespace

std::string golden_to_json(const Golden& x) { return to_j(x).dump(); }

Golden golden_from_json(std::string_view text) {
  try {
    return golden_from(json::parse(text));
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
}

std::string patch_to_json(const Patch& patch) {
  json window = json::array();
  for (const auto& hs : patch.config.window) window.push_back(json{{"normal", to_j(hs.normal)}, {"offset", to_j(hs.offset)}});
  json tiles = json::array();
  for (const auto& t : patch.tiles) tiles.push_back(tile_to_j(t));
  json doc{{"format", kPatchFormat},
           {"provenance", patch.provenance},
           {"config", {{"radius", to_j(Golden(patch.config.radius))}, {"shift", to_j(patch.config.shift)}, {"window", window}}},
           {"tiles", tiles}};
  return doc.dump(2) + "\n";
}

Patch patch_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const json& fmt = field(doc, "format");
  if (!fmt.is_string() || fmt.get<std::string>() != kPatchFormat) throw ParseError("unsupported patch format");

  Patch p;
  const json& prov = field(doc, "provenance");
  if (!prov.is_string()) throw ParseError("provenance must be a string");
  p.provenance = prov.get<std::string>();

  const json& cfg = field(doc, "config");
  const Golden radius = golden_from(field(cfg, "radius"));
  if (!radius.is_rational() || radius.sign() < 0) throw ParseError("radius must be a non-negative rational");
  p.config.radius = radius.a();
  p.config.shift = vec_from<3>(field(cfg, "shift"));
  const json& window = field(cfg, "window");
  if (!window.is_array() || window.size() != 30) throw ParseError("window must list 30 half-spaces");
  for (const auto& hs : window) p.config.window.push_back({vec_from<3>(field(hs, "normal")), golden_from(field(hs, "offset"))});

  const json& tiles = field(doc, "tiles");
  if (!tiles.is_array()) throw ParseError("tiles must be an array");
  for (const auto& t : tiles) p.tiles.push_back(tile_from(t));
  return p;
}

std::string delzant_to_json(const DelzantResult& d) {
  json normals = json::array();
  for (const auto& x : d.rep.normals) normals.push_back(to_j(x));
  json offsets = json::array();
  for (const auto& x : d.rep.offsets) offsets.push_back(to_j(x));
  json pairing = json::array();
  for (const auto& [a, b] : d.rep.pairing) pairing.push_back({a + 1, b + 1});
  json radii = json::array();
  for (const auto& r : d.radii_sq) radii.push_back(to_j(r));
  json charts = json::array();
  for (const auto& c : d.chart_groups) {
    charts.push_back(json{{"facets", {c.facets[0] + 1, c.facets[1] + 1, c.facets[2] + 1}},
                          {"generators", gvec6_list(c.generators)},
                          {"torsion", gvec6_list(c.torsion)}});
  }
  json cover = json::array();
  for (const auto& r : d.invariants.cover_radii_sq) cover.push_back(to_j(r));
  json doc{{"type", to_string(d.invariants.type)},
           {"normals", normals},
           {"offsets", offsets},
           {"pairing", pairing},
           {"kernel_basis", gvec6_list(d.ndesc.kernel_basis)},
           {"continuous_basis", gvec6_list(d.ndesc.continuous_basis)},
           {"gamma_generators", gvec6_list(d.ndesc.gamma_generators)},
           {"torsion_generators", gvec6_list(d.ndesc.torsion_generators)},
           {"radii_sq", radii},
           {"chart_groups", charts},
           {"invariants",
            {{"polytope_volume", to_j(d.invariants.polytope_volume)},
             {"cover_radii_sq", cover},
             {"cover_volume", to_j(d.invariants.cover_volume)},
             {"gamma_rank", d.invariants.gamma_rank},
             {"type", to_string(d.invariants.type)}}}};
  return doc.dump(2) + "\n";
}

void write_obj(std::ostream& out, const Patch& patch) {
  out << "# " << patch.tiles.size() << " golden rhombohedra (" << patch.provenance << ")\n";
  // Quads as (base, base+b, base+b+c, base+c) for each axis a and side.
  static constexpr int kFaces[6][4] = {{0, 2, 6, 4}, {1, 5, 7, 3}, {0, 4, 5, 1},
                                       {2, 3, 7, 6}, {0, 1, 3, 2}, {4, 6, 7, 5}};
  std::size_t base = 1;
  char buf[128];
  for (std::size_t i = 0; i < patch.tiles.size(); ++i) {
    const auto& t = patch.tiles[i];
    std::string type;
    try {
      type = std::string(to_string(classify(t.edges)));
    } catch (const InvalidTile&) {
      type = "invalid";
    }
    out << "o " << type << "_" << i << "\n";
    for (const auto& v : t.vertices()) {
      std::snprintf(buf, sizeof buf, "v %.9f %.9f %.9f\n", v[0].to_double(), v[1].to_double(), v[2].to_double());
      out << buf;
    }
    for (const auto& f : kFaces) {
      out << "f " << base + f[0] << " " << base + f[1] << " " << base + f[2] << " " << base + f[3] << "\n";
    }
    base += 8;
  }
}

}  // namespace ammann
