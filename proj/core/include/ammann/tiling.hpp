#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ammann/exactlin.hpp"
#include "ammann/rhombohedron.hpp"

namespace ammann {

inline constexpr std::string_view kGeneratorVersion = "ammann-cut-and-project/1";

using LatticePoint = std::array<long, 6>;

/// Open half-space {x : dot(normal, x) < offset}.
struct HalfSpace {
  GVec3 normal;
  Golden offset;
  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

class NonGenericShift : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cut-and-project parameters.
///
/// radius is the physical cutoff for tile anchors in units of the edge length
/// sigma; shift is the internal-space offset gamma (rational coordinates).
struct PatchConfig {
  Rational radius;
  GVec3 shift;
  std::vector<HalfSpace> window;

  /// Validates radius >= 0 and a rational shift, and fills in the window.
  static PatchConfig make(Rational radius, GVec3 shift);

  friend bool operator==(const PatchConfig&, const PatchConfig&) = default;
};

struct Patch {
  std::vector<Rhombohedron> tiles;
  PatchConfig config;
  std::string provenance;

  friend bool operator==(const Patch&, const Patch&) = default;
};

/// Galois conjugates of V1..V6, spanning internal space.
std::array<GVec3, 6> internal_star();

/// Rhombic triacontahedron: the projection of [-1/2, 1/2]^6 along the
/// internal star, as 30 half-spaces (15 antipodal pairs, pair i<j has normal
/// +-cross(V'_i, V'_j)).
std::vector<HalfSpace> window();

GVec3 physical_projection(const LatticePoint& p);
GVec3 internal_projection(const LatticePoint& p);

/// True iff internal_projection(p) + shift lies strictly inside the window.
/// Throws NonGenericShift if it lies exactly on the window boundary.
bool accept(const LatticePoint& p, const PatchConfig& cfg);

/// Emits the tile (p; i<j<k) for every accepted lattice point p with
/// |physical_projection(p)| <= radius * sigma whose eight vertices
/// p + {0,1}-combinations of e_i, e_j, e_k are all accepted. Tiles are ordered
/// lexicographically by (p, (i,j,k)).
Patch generate_patch(const PatchConfig& cfg);

/// One failed check of verify_patch.
///   'a' vertex not in R, 'b' edge not a star vector,
///   'c' tile not canonicalizable, 'd' face-to-face violation.
struct Violation {
  char check;
  std::vector<std::size_t> tiles;
  std::string detail;
};

struct VerifyReport {
  std::size_t tiles_checked = 0;
  std::size_t vertices_checked = 0;
  std::size_t tile_pairs_checked = 0;
  std::vector<Violation> violations;

  bool clean() const { return violations.empty(); }
  std::size_t count(char check) const;
};

VerifyReport verify_patch(const Patch& patch);

struct PatchStats {
  std::size_t n_oblate = 0;
  std::size_t n_prolate = 0;
  /// n_prolate / n_oblate; +infinity when there are no oblate tiles.
  double ratio = 0.0;
};

/// Counts by volume class; tiles of invalid volume throw InvalidTile.
PatchStats stats(const Patch& patch);

}  // namespace ammann
