#pragma once

// Delzant construction data for golden rhombohedra.
//
// A tile is written as the intersection of six half-spaces
// {mu : <mu, X_j> >= lambda_j} with X_j unit vectors of the quasilattice Q.
// The map pi : R^6 -> R^3, e_j -> X_j, determines the reduction group
// N = {exp(X) in T^6 : pi(X) in Q}; its identity component is exp(ker pi) and
// the discrete quotient Gamma = N / exp(ker pi) is described by exponent
// vectors. The symplectic quotient itself is never built; only the data that
// distinguishes one quotient from another is computed.

#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ammann/exactlin.hpp"
#include "ammann/rhombohedron.hpp"

namespace ammann {

class NotQuasirational : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedRep : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyInterior : public MalformedRep {
 public:
  using MalformedRep::MalformedRep;
};

/// Six facets (X_j, lambda_j). Facets j and j+3 are opposite: X_{j+3} = -X_j.
/// The first three are the facets through the tile's anchor, ordered by the
/// position of their normal in star().Q30.
struct HalfSpaceRep {
  std::array<GVec3, 6> normals;
  std::array<Golden, 6> offsets;
  std::array<std::pair<int, int>, 3> pairing{{{0, 3}, {1, 4}, {2, 5}}};

  /// 3x6 matrix with columns X_j.
  GMat pi() const;
  GVec3 pi(const GVec6& x) const;
  /// mu satisfies every inequality <mu, X_j> >= lambda_j.
  bool contains(const GVec3& mu) const;
  /// Number of inequalities holding with equality at mu.
  int active_count(const GVec3& mu) const;

  friend bool operator==(const HalfSpaceRep&, const HalfSpaceRep&) = default;
};

/// Reduction group N.
///
/// kernel_basis spans Lie(N) = ker pi (reduced echelon form);
/// continuous_basis holds the same directions, the embedded 3-torus.
/// gamma_generators are exponent vectors whose classes generate the free
/// part of Gamma; each is supported on the pivot columns of pi, with
/// phi-parts in Hermite normal form and rational parts reduced into [0, 1).
/// torsion_generators is empty unless Gamma has torsion.
struct NDescriptor {
  std::array<GVec6, 3> kernel_basis;
  std::array<GVec6, 3> continuous_basis;
  std::vector<GVec6> gamma_generators;
  std::vector<GVec6> torsion_generators;

  std::size_t gamma_rank() const { return gamma_generators.size(); }
  friend bool operator==(const NDescriptor&, const NDescriptor&) = default;
};

/// Discrete isotropy group of a vertex chart: N intersected with the torus on
/// the three facets meeting at that vertex.
struct ChartGroup {
  std::array<int, 3> facets;  // 0-based facet indices
  std::vector<GVec6> generators;
  std::vector<GVec6> torsion;
  friend bool operator==(const ChartGroup&, const ChartGroup&) = default;
};

struct InvariantRecord {
  Golden polytope_volume;
  std::array<Golden, 3> cover_radii_sq;
  Golden cover_volume;
  std::size_t gamma_rank = 0;
  TileType type = TileType::Oblate;
  friend bool operator==(const InvariantRecord&, const InvariantRecord&) = default;
};

struct DelzantResult {
  HalfSpaceRep rep;
  NDescriptor ndesc;
  std::array<Golden, 3> radii_sq;
  std::array<ChartGroup, 8> chart_groups;
  InvariantRecord invariants;
};

/// Inward normals taken from the 30 unit vectors of Q, offsets are the
/// support values over the tile's vertices. Throws NotQuasirational if a
/// facet has no unit normal in Q.
HalfSpaceRep halfspace_rep(const Rhombohedron& tile);

/// Vertex k solves the facets {pair p chooses its second facet iff bit p of k}.
/// Throws MalformedRep on a singular facet triple.
std::array<GVec3, 8> reconstruct_polytope(const HalfSpaceRep& rep);

/// Throws MalformedRep unless ker pi is 3-dimensional.
std::array<GVec6, 3> kernel_basis(const HalfSpaceRep& rep);

/// Throws NotQuasirational if some X_j is not in Q; MalformedRep if pi is
/// not onto or the facets are not in opposite pairs.
NDescriptor group_N(const HalfSpaceRep& rep);

/// exp(x) lies in N, i.e. pi(x) is in Q.
bool in_group_N(const HalfSpaceRep& rep, const GVec6& x);

/// Both reduction groups coincide: every kernel direction and Gamma
/// generator of each lies in the other.
bool same_group_N(const HalfSpaceRep& a, const NDescriptor& na, const HalfSpaceRep& b, const NDescriptor& nb);

/// -(lambda_j + lambda_j') per opposite pair; throws EmptyInterior if any is
/// not positive.
std::array<Golden, 3> level_radii(const HalfSpaceRep& rep);

/// One chart group per vertex, indexed as in reconstruct_polytope.
std::array<ChartGroup, 8> chart_groups(const HalfSpaceRep& rep);

InvariantRecord invariants(const Rhombohedron& tile);

DelzantResult delzant(const Rhombohedron& tile);

struct Verdict {
  bool same_reduction_data = false;
  bool same_diffeotype = false;
  bool same_symplectotype = false;
  Golden polytope_volume_ratio;  // B / A
  Golden cover_volume_ratio;     // B / A
};

Verdict compare(const Rhombohedron& a, const Rhombohedron& b);

/// Result of transporting a tile onto its canonical representative.
struct TransportCheck {
  TileType type = TileType::Oblate;
  /// The tile's normals are the group image of the canonical normals.
  bool normals_match = false;
  bool ndesc_equal = false;
  bool radii_equal = false;
  bool chart_groups_match = false;
  bool ok() const { return normals_match && ndesc_equal && radii_equal && chart_groups_match; }
};

/// Canonicalizes the tile and compares its Delzant data with the data of the
/// canonical tile of the same type.
TransportCheck transport_check(const Rhombohedron& tile);

}  // namespace ammann
