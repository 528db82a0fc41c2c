#include "ammann/quasilattice.hpp"

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "support.hpp"

namespace ammann {
namespace {

using test::G;
using test::Gq;
using test::v3;

const Golden half = Gq(1, 2, 0, 1);
const Golden inv_phi = G(-1, 1);

std::set<GVec3> as_set(const std::vector<GVec3>& v) { return {v.begin(), v.end()}; }

// The 30 unit vectors built independently: +-e_i and the cyclic
// permutations of (+-1, +-1/phi, +-phi)/2.
std::set<GVec3> icosidodecahedron() {
  std::set<GVec3> out;
  for (int i = 0; i < 3; ++i)
    for (int s : {1, -1}) {
      GVec3 e;
      e[i] = s;
      out.insert(e);
    }
  const std::array<Golden, 3> base{1, inv_phi, Golden::phi()};
  for (int sx : {1, -1})
    for (int sy : {1, -1})
      for (int sz : {1, -1}) {
        const std::array<Golden, 3> w{base[0] * sx * half, base[1] * sy * half, base[2] * sz * half};
        for (int r = 0; r < 3; ++r) out.insert(v3(w[r], w[(r + 1) % 3], w[(r + 2) % 3]));
      }
  return out;
}

TEST(Star, Constants) {
  const auto& s = star();
  EXPECT_EQ(s.V[0], v3(G(-1, 1), 1, 0));
  EXPECT_EQ(s.V[3], v3(G(1, -1), 1, 0));
  EXPECT_EQ(s.U[0], v3(half, Gq(-1, 2, 1, 2), Gq(0, 1, 1, 2)));
  EXPECT_EQ(s.U[5], v3(Gq(-1, 2, 1, 2), Gq(0, 1, 1, 2), -half));
  EXPECT_EQ(sigma_sq(), G(3, -1));
  for (const auto& v : s.V) EXPECT_EQ(norm_sq(v), sigma_sq());
  for (const auto& u : s.U) EXPECT_EQ(norm_sq(u), Golden(1));
  // sigma^2 = 1 + 1/phi^2
  EXPECT_EQ(sigma_sq(), Golden(1) + inv_phi * inv_phi);
}

TEST(Star, NeighbourGram) {
  const auto& V = star().V;
  // V1.V2 = phi - 1; every star vector meets the others at +-(phi-1)
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      if (i != j) EXPECT_EQ(abs(dot(V[i], V[j])), G(-1, 1)) << i << "," << j;
}

TEST(Star, Star12Indexing) {
  const auto& s12 = star12();
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(s12[i], star().V[i]);
    EXPECT_EQ(s12[i + 6], -star().V[i]);
    EXPECT_EQ(star12_index(-star().V[i]), i + 6);
  }
  EXPECT_FALSE(star12_index(v3(1, 0, 0)).has_value());
}

TEST(Star, Q30ContentAndOrder) {
  const auto& q = star().Q30;
  ASSERT_EQ(q.size(), 30u);
  EXPECT_EQ(as_set(q), icosidodecahedron());
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(q[i], star().U[i]);
    EXPECT_EQ(q[i + 6], -star().U[i]);
    EXPECT_EQ(q30_index(star().U[i]), i);
  }
  for (std::size_t i = 13; i < 30; ++i) EXPECT_GT(q[i - 1], q[i]);
}

TEST(Relations, MatricesAreMutuallyInverse) {
  const Golden phi = Golden::phi();
  const GMat a{{1, -phi, 1}, {1, 1, -phi}, {-phi, 1, 1}};
  const GMat b{{1, 1, inv_phi}, {inv_phi, 1, 1}, {1, inv_phi, 1}};
  EXPECT_EQ(relation_matrix(), a);
  EXPECT_EQ(inverse_relation_matrix(), b);
  EXPECT_EQ(a * b, GMat::identity(3));
  EXPECT_EQ(b * a, GMat::identity(3));
}

TEST(Relations, ExpressUFourToSix) {
  const auto& U = star().U;
  const GMat a = relation_matrix();
  for (int r = 0; r < 3; ++r) {
    GVec3 rhs;
    for (int c = 0; c < 3; ++c) rhs += U[c] * a(r, c);
    EXPECT_EQ(U[3 + r], rhs);
  }
  const GMat b = inverse_relation_matrix();
  for (int r = 0; r < 3; ++r) {
    GVec3 rhs;
    for (int c = 0; c < 3; ++c) rhs += U[3 + c] * b(r, c);
    EXPECT_EQ(U[r], rhs);
  }
}

TEST(Quasilattice, LiftCoordinates) {
  const auto l = lift(v3(G(1, 2), Gq(1, 2, 0, 1), G(0, -3)));
  EXPECT_EQ(l, (std::array<Rational, 6>{1, 2, Rational(1, 2), 0, 0, -3}));
}

TEST(Quasilattice, GeneratorsAreMembers) {
  for (int i = 0; i < 6; ++i) {
    IntCombination e{};
    e[i] = 1;
    EXPECT_EQ(Quasilattice::R().member(star().V[i]), e);
    EXPECT_EQ(Quasilattice::Q().member(star().U[i]), e);
  }
}

TEST(Quasilattice, NonMembers) {
  EXPECT_FALSE(Quasilattice::R().contains(v3(half, 0, 0)));
  EXPECT_FALSE(Quasilattice::Q().contains(v3(Gq(1, 4, 0, 1), 0, 0)));
  EXPECT_TRUE(Quasilattice::R().contains(GVec3{}));
}

TEST(Quasilattice, PhysicalProjectionOracle) {
  // 1 V1 + 2 V2 - V3 + 3 V5 - 2 V6, frozen from a symbolic computation.
  const IntCombination c{1, 2, -1, 0, 3, -2};
  EXPECT_EQ(Quasilattice::R().combine(c), v3(G(-4, 1), G(2, -1), G(4, 1)));
}

TEST(QuasilatticeProperty, MemberRoundTrip) {
  test::GoldenSampler S(0x9a1);
  for (const auto* lat : {&Quasilattice::R(), &Quasilattice::Q()}) {
    for (int i = 0; i < 300; ++i) {
      IntCombination c;
      for (auto& x : c) x = S.integer(-20, 20);
      const GVec3 v = lat->combine(c);
      ASSERT_EQ(lat->member(v), c);
      const auto q = lat->coordinates(v);
      for (int k = 0; k < 6; ++k) ASSERT_EQ(q[k], Rational(c[k]));
    }
  }
}

TEST(QuasilatticeProperty, HalfIntegerShiftsLeaveR) {
  test::GoldenSampler S(0x7f3);
  for (int i = 0; i < 100; ++i) {
    IntCombination c;
    for (auto& x : c) x = S.integer(-9, 9);
    const GVec3 v = Quasilattice::R().combine(c) + v3(half, 0, 0);
    ASSERT_FALSE(Quasilattice::R().contains(v));
  }
}

TEST(NormSearch, SigmaVectorsOfRAreTheStar) {
  const auto found = norm_sigma_search(3);
  const auto& s12 = star12();
  EXPECT_EQ(found.size(), 12u);
  EXPECT_EQ(as_set(found), std::set<GVec3>(s12.begin(), s12.end()));
}

TEST(NormSearch, UnitVectorsOfQAreTheThirty) {
  const auto found = unit_norm_search(3);
  EXPECT_EQ(found.size(), 30u);
  EXPECT_EQ(as_set(found), icosidodecahedron());
}

TEST(NormSearch, SmallBoundsAndOtherTargets) {
  const auto zero = norm_search(Quasilattice::R(), 1, Golden());
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].is_zero());
  EXPECT_THROW(norm_search(Quasilattice::R(), 0, sigma_sq()), std::invalid_argument);
}

}  // namespace
}  // namespace ammann
