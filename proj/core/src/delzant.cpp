#include "ammann/delzant.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "ammann/quasilattice.hpp"
#include "ammann/symmetry.hpp"

namespace ammann {

GMat HalfSpaceRep::pi() const { return GMat::from_columns<3>(normals); }

GVec3 HalfSpaceRep::pi(const GVec6& x) const {
  GVec3 out;
  for (int j = 0; j < 6; ++j)
    if (!x[j].is_zero()) out += normals[j] * x[j];
  return out;
}

bool HalfSpaceRep::contains(const GVec3& mu) const {
  for (int j = 0; j < 6; ++j)
    if (dot(mu, normals[j]) < offsets[j]) return false;
  return true;
}

int HalfSpaceRep::active_count(const GVec3& mu) const {
  int n = 0;
  for (int j = 0; j < 6; ++j)
    if (dot(mu, normals[j]) == offsets[j]) ++n;
  return n;
}

HalfSpaceRep halfspace_rep(const Rhombohedron& tile) {
  const auto& q30 = star().Q30;
  std::vector<std::pair<int, GVec3>> facets;  // (Q30 index, inward normal at anchor)
  for (int c = 0; c < 3; ++c) {
    const GVec3& ea = tile.edges[(c + 1) % 3];
    const GVec3& eb = tile.edges[(c + 2) % 3];
    std::optional<int> found;
    for (int q = 0; q < 30; ++q) {
      if (!dot(q30[q], ea).is_zero() || !dot(q30[q], eb).is_zero()) continue;
      if (dot(q30[q], tile.edges[c]).sign() <= 0) continue;
      if (found) throw NotQuasirational("facet normal is not unique among the unit vectors of Q");
      found = q;
    }
    if (!found) throw NotQuasirational("facet spanned by " + to_string(ea) + ", " + to_string(eb) +
                                       " has no unit normal in Q");
    facets.emplace_back(*found, q30[*found]);
  }
  std::sort(facets.begin(), facets.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

  HalfSpaceRep rep;
  for (int p = 0; p < 3; ++p) {
    rep.normals[p] = facets[p].second;
    rep.normals[p + 3] = -facets[p].second;
  }
  const auto verts = tile.vertices();
  for (int j = 0; j < 6; ++j) {
    Golden lo = dot(verts[0], rep.normals[j]);
    for (int k = 1; k < 8; ++k) lo = std::min(lo, dot(verts[k], rep.normals[j]));
    rep.offsets[j] = lo;
  }
  return rep;
}

namespace {

std::array<int, 3> vertex_facets(const HalfSpaceRep& rep, int k) {
  std::array<int, 3> f;
  for (int p = 0; p < 3; ++p) f[p] = (k >> p) & 1 ? rep.pairing[p].second : rep.pairing[p].first;
  return f;
}

struct DiscretePart {
  std::vector<GVec6> free;
  std::vector<GVec6> torsion;
};

// Exponent vectors supported on `cols` whose image under pi lies in Q, modulo
// the integer vectors: a Z-module M containing Z^3, given by its Hermite basis.
DiscretePart discrete_part(const HalfSpaceRep& rep, const std::array<int, 3>& cols) {
  const std::array<GVec3, 3> sub = {rep.normals[cols[0]], rep.normals[cols[1]], rep.normals[cols[2]]};
  const auto inv = inverse(GMat::from_columns<3>(sub));
  if (!inv) throw MalformedRep("facet normals at a vertex are linearly dependent");

  auto row_of = [](const GVec3& y) {
    return std::vector<Rational>{y[0].b(), y[1].b(), y[2].b(), y[0].a(), y[1].a(), y[2].a()};
  };
  std::vector<std::vector<Rational>> gens;
  for (const auto& u : star().U) gens.push_back(row_of(inv->apply<3, 3>(u)));
  for (const auto& x : rep.normals) {
    const GVec3 y = inv->apply<3, 3>(x);
    for (const auto& c : y)
      if (!c.is_rational() || c.a().get_den() != 1)
        throw MalformedRep("facet normals do not come in opposite pairs");
    gens.push_back(row_of(y));
  }

  DiscretePart out;
  for (const auto& row : hermite_basis(gens)) {
    GVec6 v;
    for (int i = 0; i < 3; ++i) v[cols[i]] = Golden(row[3 + i], row[i]);
    const bool has_phi = sgn(row[0]) != 0 || sgn(row[1]) != 0 || sgn(row[2]) != 0;
    if (has_phi) {
      out.free.push_back(v);
    } else {
      int ones = 0, nonzero = 0;
      for (int i = 3; i < 6; ++i) {
        if (sgn(row[i]) != 0) ++nonzero;
        if (row[i] == 1) ++ones;
      }
      if (!(nonzero == 1 && ones == 1)) out.torsion.push_back(v);
    }
  }
  return out;
}

GVec6 to_vec6(const std::vector<Golden>& v) {
  GVec6 out;
  for (int i = 0; i < 6; ++i) out[i] = v[i];
  return out;
}

void require_quasirational(const HalfSpaceRep& rep) {
  for (const auto& x : rep.normals)
    if (!Quasilattice::Q().contains(x)) throw NotQuasirational("normal " + to_string(x) + " is not in Q");
}

}  // namespace

std::array<GVec3, 8> reconstruct_polytope(const HalfSpaceRep& rep) {
  std::array<GVec3, 8> out;
  for (int k = 0; k < 8; ++k) {
    const auto f = vertex_facets(rep, k);
    GMat a(3, 3);
    std::array<Golden, 3> b;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) a(r, c) = rep.normals[f[r]][c];
      b[r] = rep.offsets[f[r]];
    }
    const auto sol = solve(a, b);
    if (!sol || !sol->unique()) throw MalformedRep("singular facet triple at a vertex");
    out[k] = GVec3{{sol->particular[0], sol->particular[1], sol->particular[2]}};
  }
  return out;
}

std::array<GVec6, 3> kernel_basis(const HalfSpaceRep& rep) {
  const auto k = kernel(rep.pi());
  if (k.size() != 3) throw MalformedRep("pi has kernel of dimension " + std::to_string(k.size()) + ", expected 3");
  return {to_vec6(k[0]), to_vec6(k[1]), to_vec6(k[2])};
}

NDescriptor group_N(const HalfSpaceRep& rep) {
  require_quasirational(rep);
  const EchelonForm e = rref(rep.pi());
  if (e.rank() != 3) throw MalformedRep("pi is not onto R^3");
  NDescriptor n;
  n.kernel_basis = kernel_basis(rep);
  n.continuous_basis = n.kernel_basis;
  const std::array<int, 3> pivots = {static_cast<int>(e.pivots[0]), static_cast<int>(e.pivots[1]),
                                     static_cast<int>(e.pivots[2])};
  auto part = discrete_part(rep, pivots);
  n.gamma_generators = std::move(part.free);
  n.torsion_generators = std::move(part.torsion);
  return n;
}

bool in_group_N(const HalfSpaceRep& rep, const GVec6& x) { return Quasilattice::Q().contains(rep.pi(x)); }

bool same_group_N(const HalfSpaceRep& a, const NDescriptor& na, const HalfSpaceRep& b, const NDescriptor& nb) {
  auto contained = [](const HalfSpaceRep& rep, const NDescriptor& other) {
    for (const auto& k : other.kernel_basis)
      if (!rep.pi(k).is_zero()) return false;
    for (const auto& g : other.gamma_generators)
      if (!in_group_N(rep, g)) return false;
    for (const auto& g : other.torsion_generators)
      if (!in_group_N(rep, g)) return false;
    for (int j = 0; j < 6; ++j) {
      GVec6 e;
      e[j] = 1;
      if (!in_group_N(rep, e)) return false;
    }
    return true;
  };
  return contained(a, nb) && contained(b, na);
}

std::array<Golden, 3> level_radii(const HalfSpaceRep& rep) {
  std::array<Golden, 3> r;
  for (int p = 0; p < 3; ++p) {
    r[p] = -(rep.offsets[rep.pairing[p].first] + rep.offsets[rep.pairing[p].second]);
    if (r[p].sign() <= 0) throw EmptyInterior("facet pair " + std::to_string(p + 1) + " bounds an empty slab");
  }
  return r;
}

std::array<ChartGroup, 8> chart_groups(const HalfSpaceRep& rep) {
  require_quasirational(rep);
  std::array<ChartGroup, 8> out;
  for (int k = 0; k < 8; ++k) {
    out[k].facets = vertex_facets(rep, k);
    auto part = discrete_part(rep, out[k].facets);
    out[k].generators = std::move(part.free);
    out[k].torsion = std::move(part.torsion);
  }
  return out;
}

namespace {

InvariantRecord invariants_from(const Rhombohedron& tile, const NDescriptor& n, const std::array<Golden, 3>& radii) {
  InvariantRecord rec;
  rec.polytope_volume = abs(tile.signed_volume());
  rec.cover_radii_sq = radii;
  rec.cover_volume = radii[0] * radii[1] * radii[2];
  rec.gamma_rank = n.gamma_rank();
  rec.type = classify(tile.edges);
  return rec;
}

}  // namespace

InvariantRecord invariants(const Rhombohedron& tile) {
  const HalfSpaceRep rep = halfspace_rep(tile);
  return invariants_from(tile, group_N(rep), level_radii(rep));
}

DelzantResult delzant(const Rhombohedron& tile) {
  DelzantResult d;
  d.rep = halfspace_rep(tile);
  d.ndesc = group_N(d.rep);
  d.radii_sq = level_radii(d.rep);
  d.chart_groups = chart_groups(d.rep);
  d.invariants = invariants_from(tile, d.ndesc, d.radii_sq);
  return d;
}

Verdict compare(const Rhombohedron& a, const Rhombohedron& b) {
  const DelzantResult da = delzant(a);
  const DelzantResult db = delzant(b);
  Verdict v;
  v.same_reduction_data = same_group_N(da.rep, da.ndesc, db.rep, db.ndesc);
  // Both quotients are (S^2)^3 / Gamma; they share a diffeotype when N and
  // hence the Gamma-action agree.
  v.same_diffeotype = v.same_reduction_data && da.ndesc.gamma_rank() == db.ndesc.gamma_rank() &&
                      da.ndesc.torsion_generators == db.ndesc.torsion_generators;
  auto ra = da.invariants.cover_radii_sq;
  auto rb = db.invariants.cover_radii_sq;
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  v.same_symplectotype = da.invariants.polytope_volume == db.invariants.polytope_volume && ra == rb &&
                         da.invariants.cover_volume == db.invariants.cover_volume;
  v.polytope_volume_ratio = db.invariants.polytope_volume / da.invariants.polytope_volume;
  v.cover_volume_ratio = db.invariants.cover_volume / da.invariants.cover_volume;
  return v;
}

TransportCheck transport_check(const Rhombohedron& tile) {
  const Canonicalization canon = canonicalize(tile);
  static const std::array<DelzantResult, 2> canonical{delzant(canonical_tile(TileType::Oblate)),
                                                      delzant(canonical_tile(TileType::Prolate))};
  const DelzantResult& ref = canonical[canon.type == TileType::Oblate ? 0 : 1];
  const DelzantResult mine = delzant(tile);

  TransportCheck out;
  out.type = canon.type;
  // g(tile) + t = reference, so the tile's normals are g^{-1} of the reference normals.
  const Isometry back = canon.motion.g.inverse();
  auto moved = ref.rep.normals;
  for (auto& x : moved) x = back.apply(x);
  auto have = mine.rep.normals;
  std::sort(moved.begin(), moved.end());
  std::sort(have.begin(), have.end());
  out.normals_match = moved == have;
  out.ndesc_equal = mine.ndesc == ref.ndesc && same_group_N(mine.rep, mine.ndesc, ref.rep, ref.ndesc);
  out.radii_equal = mine.radii_sq == ref.radii_sq;
  out.chart_groups_match = mine.chart_groups == ref.chart_groups;
  return out;
}

}  // namespace ammann
