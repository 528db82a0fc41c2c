#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ammann/exactlin.hpp"
#include "ammann/rhombohedron.hpp"

namespace ammann {

/// Orthogonal 3x3 matrix over Q(phi).
class Isometry {
 public:
  explicit Isometry(GMat m);
  static Isometry identity() { return Isometry(GMat::identity(3)); }

  const GMat& matrix() const noexcept { return m_; }
  GVec3 apply(const GVec3& x) const { return m_.apply<3, 3>(x); }
  /// (*this) after `rhs`: x -> this(rhs(x)).
  Isometry compose(const Isometry& rhs) const { return Isometry(m_ * rhs.m_); }
  Isometry inverse() const { return Isometry(m_.transpose()); }

  Golden det() const;
  Golden trace() const { return m_(0, 0) + m_(1, 1) + m_(2, 2); }
  bool is_orthogonal() const { return m_.transpose() * m_ == GMat::identity(3); }

  friend bool operator==(const Isometry&, const Isometry&) = default;

 private:
  GMat m_;
};

/// The full icosahedral group (order 120) with its action on star12().
struct IcosahedralGroup {
  std::vector<Isometry> elements;
  /// star_perm[g][i] = index in star12() of elements[g] applied to star12()[i].
  std::vector<std::array<int, 12>> star_perm;

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> index_of(const Isometry& g) const;
};

/// Frame extension: every orthogonal Q(phi)-matrix sending (V1, V2) to a pair
/// of star vectors with the same Gram data and permuting +-V1..+-V6.
/// Throws std::logic_error if nothing is found.
std::vector<Isometry> generate_group();

/// Cached result of generate_group().
const IcosahedralGroup& icosahedral_group();

/// x -> g x + t.
struct RigidMotion {
  Isometry g = Isometry::identity();
  GVec3 t;

  GVec3 apply(const GVec3& x) const { return g.apply(x) + t; }
  Rhombohedron apply(const Rhombohedron& r) const;
};

class NotCanonicalizable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Canonicalization {
  RigidMotion motion;
  TileType type;
  std::size_t group_index = 0;
  /// True if some proper rotation (det +1) also maps the tile onto its
  /// canonical representative.
  bool rotation_suffices = false;
};

/// Rigid motion (group element, then translation in R) taking the tile onto
/// the canonical tile of its type. Among the admissible group elements the
/// one with largest trace wins, then det +1, then lexicographically smallest
/// entries, so a pure translation always yields the identity.
///
/// Throws InvalidTile for a wrong volume, NotCanonicalizable when no group
/// element matches the edge directions or the translation leaves R.
Canonicalization canonicalize(const Rhombohedron& tile);

/// Whether the vertex sets of two tiles coincide.
bool same_point_set(const Rhombohedron& a, const Rhombohedron& b);

struct OrbitCount {
  int oblate = 0;
  int prolate = 0;
};

/// Classifies the 20 unordered triples of V1..V6 by volume.
OrbitCount orbit_classes();

}  // namespace ammann
