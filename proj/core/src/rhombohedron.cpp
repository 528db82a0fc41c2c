#include "ammann/rhombohedron.hpp"

#include "ammann/quasilattice.hpp"

namespace ammann {

std::string_view to_string(TileType t) { return t == TileType::Oblate ? "oblate" : "prolate"; }

TileType parse_tile_type(std::string_view s) {
  if (s == "oblate") return TileType::Oblate;
  if (s == "prolate") return TileType::Prolate;
  throw std::invalid_argument("unknown tile type: " + std::string(s));
}

std::array<GVec3, 8> Rhombohedron::vertices() const {
  std::array<GVec3, 8> out;
  for (int k = 0; k < 8; ++k) {
    GVec3 v = anchor;
    for (int i = 0; i < 3; ++i)
      if (k & (1 << i)) v += edges[i];
    out[k] = v;
  }
  return out;
}

Golden oblate_volume() { return Golden(4) - Golden(2) * Golden::phi(); }
Golden prolate_volume() { return Golden(2) * Golden::phi() - Golden(2); }

TileType classify(const std::array<GVec3, 3>& edges) {
  const Golden vol = abs(det3(edges[0], edges[1], edges[2]));
  if (vol == prolate_volume()) return TileType::Prolate;
  if (vol == oblate_volume()) return TileType::Oblate;
  throw InvalidTile("edge triple volume " + vol.str() + " is neither 2/φ nor 2/φ²");
}

Rhombohedron canonical_tile(TileType t) {
  const auto& V = star().V;
  Rhombohedron r;
  if (t == TileType::Oblate) {
    r.edges = {V[3], V[4], V[5]};
    r.axis_triple = {4, 5, 6};
  } else {
    r.edges = {V[0], V[1], V[2]};
    r.axis_triple = {1, 2, 3};
  }
  return r;
}

}  // namespace ammann
