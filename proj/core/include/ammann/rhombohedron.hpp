#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ammann/exactlin.hpp"

namespace ammann {

enum class TileType { Oblate, Prolate };

std::string_view to_string(TileType t);
TileType parse_tile_type(std::string_view s);

class InvalidTile : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A golden rhombohedron: anchor + sum of delta_i * edges[i], delta in {0,1}^3.
///
/// lattice_origin and axis_triple record the Z^6 face the tile was projected
/// from (axis indices are 1-based); hand-built tiles leave them zero.
struct Rhombohedron {
  GVec3 anchor;
  std::array<GVec3, 3> edges;
  std::array<long, 6> lattice_origin{};
  std::array<int, 3> axis_triple{};

  /// Vertex k is anchor + sum over bits i of k of edges[i].
  std::array<GVec3, 8> vertices() const;
  Golden signed_volume() const { return det3(edges[0], edges[1], edges[2]); }

  friend bool operator==(const Rhombohedron&, const Rhombohedron&) = default;
};

/// Type from |det(edges)|: 2/phi is prolate, 2/phi^2 is oblate; anything else
/// throws InvalidTile.
TileType classify(const std::array<GVec3, 3>& edges);

Golden oblate_volume();   // 2/phi^2 = 4 - 2 phi
Golden prolate_volume();  // 2/phi   = 2 phi - 2

/// The origin-anchored tiles with edges V4,V5,V6 (oblate) and V1,V2,V3 (prolate).
Rhombohedron canonical_tile(TileType t);

}  // namespace ammann
