#pragma once

#include <array>
#include <optional>
#include <vector>

#include "ammann/exactlin.hpp"

namespace ammann {

/// The icosahedral star V1..V6 (edge vectors of the tiling, norm^2 = 3 - phi),
/// the generators U1..U6 of the normal quasilattice, and the 30 unit vectors
/// of that quasilattice (icosidodecahedron vertices).
///
/// Q30 is ordered U1..U6, -U1..-U6, then the remaining 18 vectors in
/// decreasing lexicographic order. Facet ordering in the Delzant module
/// depends on this order.
struct StarData {
  std::array<GVec3, 6> V;
  std::array<GVec3, 6> U;
  std::vector<GVec3> Q30;
};

const StarData& star();

/// The twelve vectors +-V1..+-V6, as V1..V6 followed by -V1..-V6.
const std::array<GVec3, 12>& star12();

/// Index of v in star12(), or nullopt.
std::optional<int> star12_index(const GVec3& v);

/// Index of v in star().Q30, or nullopt.
std::optional<int> q30_index(const GVec3& v);

/// Edge length squared, sigma^2 = 1 + 1/phi^2 = 3 - phi.
Golden sigma_sq();

/// Relation (U4,U5,U6)^T = A (U1,U2,U3)^T.
GMat relation_matrix();
/// Relation (U1,U2,U3)^T = B (U4,U5,U6)^T; B = A^{-1}.
GMat inverse_relation_matrix();

enum class LatticeTag { R, Q };

using IntCombination = std::array<long, 6>;

/// Z-span of six Q(phi)-vectors that are Z-independent.
///
/// A vector of Q(phi)^3 has six rational coordinates (the 1- and phi-parts of
/// each Cartesian coordinate). The generators' coordinates form an invertible
/// rational 6x6 "lift matrix"; membership is integrality of the solution of
/// that system.
class Quasilattice {
 public:
  Quasilattice(LatticeTag tag, const std::array<GVec3, 6>& generators);

  static const Quasilattice& R();
  static const Quasilattice& Q();

  LatticeTag tag() const noexcept { return tag_; }
  const std::array<GVec3, 6>& generators() const noexcept { return gens_; }
  /// Column i holds the rational coordinates of generator i.
  const GMat& lift_matrix() const noexcept { return lift_; }

  /// Rational coefficients of v on the generators (always exists).
  std::array<Rational, 6> coordinates(const GVec3& v) const;
  /// Integer coefficients of v, or nullopt if v is not in the quasilattice.
  std::optional<IntCombination> member(const GVec3& v) const;
  bool contains(const GVec3& v) const { return member(v).has_value(); }
  GVec3 combine(const IntCombination& c) const;

 private:
  LatticeTag tag_;
  std::array<GVec3, 6> gens_;
  GMat lift_;
  std::array<std::array<Rational, 6>, 6> lift_inv_;
};

/// The six rational coordinates (a_x, b_x, a_y, b_y, a_z, b_z) of v.
std::array<Rational, 6> lift(const GVec3& v);

/// All vectors sum c_i g_i with c in [-bound, bound]^6 whose norm^2 equals
/// target, in increasing order of the coefficient tuple.
std::vector<GVec3> norm_search(const Quasilattice& lattice, int bound, const Golden& target);

/// norm_search on R for norm^2 = sigma^2.
std::vector<GVec3> norm_sigma_search(int bound = 3);
/// norm_search on Q for norm^2 = 1.
std::vector<GVec3> unit_norm_search(int bound = 3);

}  // namespace ammann
