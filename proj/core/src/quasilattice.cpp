#include "ammann/quasilattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace ammann {

namespace {

Golden half(const Golden& x) { return x * Golden(Rational(1, 2)); }

GVec3 v3(Golden x, Golden y, Golden z) { return GVec3{{std::move(x), std::move(y), std::move(z)}}; }

StarData build_star() {
  const Golden phi = Golden::phi();
  const Golden one = 1;
  StarData s;
  s.V = {v3(phi - one, 1, 0), v3(0, phi - one, 1), v3(1, 0, phi - one),
         v3(one - phi, 1, 0), v3(0, one - phi, 1), v3(1, 0, one - phi)};
  s.U = {v3(half(1), half(phi - one), half(phi)), v3(half(phi), half(1), half(phi - one)),
         v3(half(phi - one), half(phi), half(1)), v3(half(-1), half(phi - one), half(phi)),
         v3(half(phi), half(-1), half(phi - one)), v3(half(phi - one), half(phi), half(-1))};

  // Icosidodecahedron: the six axis vectors and the 24 cyclic permutations of
  // (+-1, +-1/phi, +-phi)/2.
  std::vector<GVec3> all;
  for (int axis = 0; axis < 3; ++axis)
    for (int sgn : {1, -1}) {
      GVec3 e;
      e[axis] = sgn;
      all.push_back(e);
    }
  const std::array<Golden, 3> base = {half(1), half(phi - one), half(phi)};
  for (int shift = 0; shift < 3; ++shift)
    for (int signs = 0; signs < 8; ++signs) {
      GVec3 v;
      for (int k = 0; k < 3; ++k) {
        Golden c = base[k];
        if (signs & (1 << k)) c = -c;
        v[(k + shift) % 3] = c;
      }
      all.push_back(v);
    }

  for (const auto& u : s.U) s.Q30.push_back(u);
  for (const auto& u : s.U) s.Q30.push_back(-u);
  std::vector<GVec3> rest;
  for (const auto& v : all)
    if (std::find(s.Q30.begin(), s.Q30.end(), v) == s.Q30.end()) rest.push_back(v);
  std::sort(rest.begin(), rest.end(), [](const GVec3& x, const GVec3& y) { return x > y; });
  s.Q30.insert(s.Q30.end(), rest.begin(), rest.end());
  if (s.Q30.size() != 30) throw std::logic_error("icosidodecahedron construction: wrong count");
  return s;
}

}  // namespace

const StarData& star() {
  static const StarData data = build_star();
  return data;
}

const std::array<GVec3, 12>& star12() {
  static const std::array<GVec3, 12> s = [] {
    std::array<GVec3, 12> out;
    for (int i = 0; i < 6; ++i) {
      out[i] = star().V[i];
      out[i + 6] = -star().V[i];
    }
    return out;
  }();
  return s;
}

std::optional<int> star12_index(const GVec3& v) {
  const auto& s = star12();
  for (int i = 0; i < 12; ++i)
    if (s[i] == v) return i;
  return std::nullopt;
}

std::optional<int> q30_index(const GVec3& v) {
  const auto& q = star().Q30;
  for (int i = 0; i < 30; ++i)
    if (q[i] == v) return i;
  return std::nullopt;
}

Golden sigma_sq() { return Golden(3) - Golden::phi(); }

GMat relation_matrix() {
  const Golden phi = Golden::phi();
  return GMat{{1, -phi, 1}, {1, 1, -phi}, {-phi, 1, 1}};
}

GMat inverse_relation_matrix() {
  const Golden inv_phi = Golden::phi() - Golden(1);
  return GMat{{1, 1, inv_phi}, {inv_phi, 1, 1}, {1, inv_phi, 1}};
}

std::array<Rational, 6> lift(const GVec3& v) {
  return {v[0].a(), v[0].b(), v[1].a(), v[1].b(), v[2].a(), v[2].b()};
}

Quasilattice::Quasilattice(LatticeTag tag, const std::array<GVec3, 6>& generators)
    : tag_(tag), gens_(generators), lift_(6, 6) {
  for (int j = 0; j < 6; ++j) {
    const auto l = lift(gens_[j]);
    for (int i = 0; i < 6; ++i) lift_(i, j) = Golden(l[i]);
  }
  auto inv = inverse(lift_);
  if (!inv) throw std::invalid_argument("quasilattice generators are not Z-independent");
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) lift_inv_[i][j] = (*inv)(i, j).a();
}

const Quasilattice& Quasilattice::R() {
  static const Quasilattice r(LatticeTag::R, star().V);
  return r;
}

const Quasilattice& Quasilattice::Q() {
  static const Quasilattice q(LatticeTag::Q, star().U);
  return q;
}

std::array<Rational, 6> Quasilattice::coordinates(const GVec3& v) const {
  const auto l = lift(v);
  std::array<Rational, 6> c;
  for (int i = 0; i < 6; ++i) {
    c[i] = 0;
    for (int j = 0; j < 6; ++j) c[i] += lift_inv_[i][j] * l[j];
  }
  return c;
}

std::optional<IntCombination> Quasilattice::member(const GVec3& v) const {
  const auto c = coordinates(v);
  IntCombination out;
  for (int i = 0; i < 6; ++i) {
    if (c[i].get_den() != 1) return std::nullopt;
    if (!c[i].get_num().fits_slong_p())
      throw std::overflow_error("quasilattice coefficient exceeds machine integer range");
    out[i] = c[i].get_num().get_si();
  }
  return out;
}

GVec3 Quasilattice::combine(const IntCombination& c) const {
  GVec3 v;
  for (int i = 0; i < 6; ++i)
    if (c[i] != 0) v += gens_[i] * Golden(c[i]);
  return v;
}

std::vector<GVec3> norm_search(const Quasilattice& lattice, int bound, const Golden& target) {
  if (bound < 1) throw std::invalid_argument("norm_search: bound must be >= 1");
  const auto& g = lattice.generators();

  // Integer Gram matrix: G_ij * den = ga_ij + gb_ij phi.
  std::array<std::array<Golden, 6>, 6> gram;
  mpz_class den = target.a().get_den();
  den = lcm(den, mpz_class(target.b().get_den()));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      gram[i][j] = dot(g[i], g[j]);
      den = lcm(den, mpz_class(gram[i][j].a().get_den()));
      den = lcm(den, mpz_class(gram[i][j].b().get_den()));
    }
  auto scaled = [&](const Rational& q) {
    Rational s = q * den;
    if (s.get_den() != 1 || !s.get_num().fits_slong_p())
      throw std::overflow_error("norm_search: Gram matrix out of range");
    return s.get_num().get_si();
  };
  std::array<std::array<long, 6>, 6> ga, gb;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      ga[i][j] = scaled(gram[i][j].a());
      gb[i][j] = scaled(gram[i][j].b());
    }
  const long ta = scaled(target.a());
  const long tb = scaled(target.b());

  std::vector<GVec3> hits;
  IntCombination c;
  c.fill(-bound);
  while (true) {
    long na = 0, nb = 0;
    for (int i = 0; i < 6; ++i) {
      if (c[i] == 0) continue;
      long ra = 0, rb = 0;
      for (int j = 0; j < 6; ++j) {
        ra += ga[i][j] * c[j];
        rb += gb[i][j] * c[j];
      }
      na += c[i] * ra;
      nb += c[i] * rb;
    }
    if (na == ta && nb == tb) hits.push_back(lattice.combine(c));

    int k = 5;
    while (k >= 0 && c[k] == bound) c[k--] = -bound;
    if (k < 0) break;
    ++c[k];
  }
  return hits;
}

std::vector<GVec3> norm_sigma_search(int bound) { return norm_search(Quasilattice::R(), bound, sigma_sq()); }

std::vector<GVec3> unit_norm_search(int bound) { return norm_search(Quasilattice::Q(), bound, Golden(1)); }

}  // namespace ammann
