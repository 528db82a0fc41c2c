#include "ammann/symmetry.hpp"

#include <algorithm>
#include <map>

#include "ammann/quasilattice.hpp"

namespace ammann {

Isometry::Isometry(GMat m) : m_(std::move(m)) {
  if (m_.rows() != 3 || m_.cols() != 3) throw std::invalid_argument("Isometry: matrix must be 3x3");
}

Golden Isometry::det() const {
  const GMat& m = m_;
  return det3(GVec3{{m(0, 0), m(0, 1), m(0, 2)}}, GVec3{{m(1, 0), m(1, 1), m(1, 2)}},
              GVec3{{m(2, 0), m(2, 1), m(2, 2)}});
}

std::optional<std::size_t> IcosahedralGroup::index_of(const Isometry& g) const {
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i] == g) return i;
  return std::nullopt;
}

namespace {

std::optional<std::array<int, 12>> star_permutation(const Isometry& g) {
  std::array<int, 12> perm;
  std::array<bool, 12> hit{};
  for (int i = 0; i < 12; ++i) {
    auto j = star12_index(g.apply(star12()[i]));
    if (!j || hit[*j]) return std::nullopt;
    hit[*j] = true;
    perm[i] = *j;
  }
  return perm;
}

}  // namespace

std::vector<Isometry> generate_group() {
  const auto& s = star12();
  const GVec3& v1 = s[0];
  const GVec3& v2 = s[1];
  const Golden gram12 = dot(v1, v2);
  const std::array<GVec3, 3> frame = {v1, v2, cross(v1, v2)};
  const auto frame_inv = inverse(GMat::from_columns<3>(frame));
  if (!frame_inv) throw std::logic_error("star data corrupt: V1, V2 are parallel");

  std::vector<Isometry> out;
  for (const auto& a : s)
    for (const auto& b : s) {
      if (dot(a, b) != gram12) continue;
      for (int sgn : {1, -1}) {
        const std::array<GVec3, 3> image = {a, b, cross(a, b) * Golden(sgn)};
        Isometry g(GMat::from_columns<3>(image) * *frame_inv);
        if (!g.is_orthogonal() || !star_permutation(g)) continue;
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(std::move(g));
      }
    }
  if (out.empty()) throw std::logic_error("star data corrupt: no icosahedral symmetries found");
  return out;
}

const IcosahedralGroup& icosahedral_group() {
  static const IcosahedralGroup group = [] {
    IcosahedralGroup g;
    g.elements = generate_group();
    for (const auto& e : g.elements) g.star_perm.push_back(*star_permutation(e));
    return g;
  }();
  return group;
}

Rhombohedron RigidMotion::apply(const Rhombohedron& r) const {
  Rhombohedron out = r;
  out.anchor = apply(r.anchor);
  for (auto& e : out.edges) e = g.apply(e);
  return out;
}

bool same_point_set(const Rhombohedron& a, const Rhombohedron& b) {
  auto va = a.vertices();
  auto vb = b.vertices();
  std::sort(va.begin(), va.end());
  std::sort(vb.begin(), vb.end());
  return va == vb;
}

namespace {

// Selection order for admissible group elements: larger trace, then det +1,
// then lexicographically smaller entries.
bool preferred(const Isometry& x, const Isometry& y) {
  if (auto o = x.trace() <=> y.trace(); o != 0) return o > 0;
  const int dx = x.det().sign();
  const int dy = y.det().sign();
  if (dx != dy) return dx > dy;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      if (auto o = x.matrix()(i, j) <=> y.matrix()(i, j); o != 0) return o < 0;
  return false;
}

}  // namespace

Canonicalization canonicalize(const Rhombohedron& tile) {
  const TileType type = classify(tile.edges);
  const Rhombohedron target = canonical_tile(type);

  std::array<int, 3> edge_idx;
  for (int i = 0; i < 3; ++i) {
    auto k = star12_index(tile.edges[i]);
    if (!k) throw NotCanonicalizable("edge " + to_string(tile.edges[i]) + " is not a star vector");
    edge_idx[i] = *k;
  }
  std::array<int, 3> want;
  for (int i = 0; i < 3; ++i) want[i] = *star12_index(target.edges[i]);
  std::sort(want.begin(), want.end());

  const auto& group = icosahedral_group();
  std::optional<std::size_t> best;
  bool any_rotation = false;
  for (std::size_t gi = 0; gi < group.size(); ++gi) {
    std::array<int, 3> got;
    for (int i = 0; i < 3; ++i) got[i] = group.star_perm[gi][edge_idx[i]] % 6;
    std::sort(got.begin(), got.end());
    if (got != want) continue;
    if (group.elements[gi].det().sign() > 0) any_rotation = true;
    if (!best || preferred(group.elements[gi], group.elements[*best])) best = gi;
  }
  if (!best) throw NotCanonicalizable("no icosahedral element maps the edge triple onto a canonical triple");

  const Isometry& g = group.elements[*best];
  // g(tile) = g(anchor) + sum_i delta_i g(e_i); its lowest corner takes every
  // reversed edge, and that corner must land on the origin.
  GVec3 corner = g.apply(tile.anchor);
  for (int i = 0; i < 3; ++i)
    if (group.star_perm[*best][edge_idx[i]] >= 6) corner += g.apply(tile.edges[i]);
  Canonicalization out{RigidMotion{g, -corner}, type, *best, any_rotation};
  if (!Quasilattice::R().contains(out.motion.t))
    throw NotCanonicalizable("canonicalizing translation " + to_string(out.motion.t) + " is not in R");
  return out;
}

OrbitCount orbit_classes() {
  const auto& V = star().V;
  OrbitCount c;
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int k = j + 1; k < 6; ++k) {
        if (classify({V[i], V[j], V[k]}) == TileType::Oblate)
          ++c.oblate;
        else
          ++c.prolate;
      }
  return c;
}

}  // namespace ammann
