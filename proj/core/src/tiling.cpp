#include "ammann/tiling.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <unordered_map>

#include "ammann/quasilattice.hpp"
#include "ammann/symmetry.hpp"

namespace ammann {

namespace {

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept {
    std::size_t h = 0;
    for (long x : p) h = h * 1000003u ^ static_cast<std::size_t>(x + 0x4000);
    return h;
  }
};

// Structural (not real-order) comparison; cheap and sufficient for map keys.
struct StructuralLess {
  bool operator()(const GVec3& x, const GVec3& y) const {
    for (int i = 0; i < 3; ++i) {
      if (int c = cmp(x[i].a(), y[i].a()); c != 0) return c < 0;
      if (int c = cmp(x[i].b(), y[i].b()); c != 0) return c < 0;
    }
    return false;
  }
};

}  // namespace

std::size_t VerifyReport::count(char check) const {
  return static_cast<std::size_t>(
      std::count_if(violations.begin(), violations.end(), [&](const Violation& v) { return v.check == check; }));
}

std::array<GVec3, 6> internal_star() {
  std::array<GVec3, 6> out;
  for (int i = 0; i < 6; ++i) out[i] = conj(star().V[i]);
  return out;
}

std::vector<HalfSpace> window() {
  const auto vs = internal_star();
  std::vector<HalfSpace> out;
  out.reserve(30);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      const GVec3 n = cross(vs[i], vs[j]);
      if (n.is_zero()) throw std::logic_error("window: degenerate facet normal (corrupt star)");
      Golden h;
      for (const auto& v : vs) h += abs(dot(n, v));
      h *= Golden(Rational(1, 2));
      out.push_back({n, h});
      out.push_back({-n, h});
    }
  return out;
}

PatchConfig PatchConfig::make(Rational radius, GVec3 shift) {
  radius.canonicalize();
  if (sgn(radius) < 0) throw std::invalid_argument("patch radius must be non-negative");
  for (const auto& c : shift)
    if (!c.is_rational()) throw std::invalid_argument("patch shift must have rational coordinates");
  return PatchConfig{std::move(radius), std::move(shift), ammann::window()};
}

GVec3 physical_projection(const LatticePoint& p) {
  GVec3 x;
  for (int i = 0; i < 6; ++i)
    if (p[i] != 0) x += star().V[i] * Golden(p[i]);
  return x;
}

GVec3 internal_projection(const LatticePoint& p) {
  static const auto vs = internal_star();
  GVec3 x;
  for (int i = 0; i < 6; ++i)
    if (p[i] != 0) x += vs[i] * Golden(p[i]);
  return x;
}

bool accept(const LatticePoint& p, const PatchConfig& cfg) {
  const GVec3 x = internal_projection(p) + cfg.shift;
  bool on_boundary = false;
  for (const auto& hs : cfg.window) {
    const int s = (hs.offset - dot(hs.normal, x)).sign();
    if (s < 0) return false;
    if (s == 0) on_boundary = true;
  }
  if (on_boundary) {
    std::string where = "(";
    for (int i = 0; i < 6; ++i) where += (i ? "," : "") + std::to_string(p[i]);
    throw NonGenericShift("lattice point " + where +
                          ") projects onto the window boundary; choose a different shift");
  }
  return true;
}

Patch generate_patch(const PatchConfig& cfg) {
  const Golden s2 = sigma_sq();
  const Golden anchor_cut = Golden(Rational(cfg.radius * cfg.radius)) * s2;
  const Rational reach = cfg.radius + 3;  // a tile's long diagonal is at most 3 sigma
  const Golden search_cut = Golden(Rational(reach * reach)) * s2;

  std::unordered_map<LatticePoint, bool, LatticePointHash> memo;
  auto accepted = [&](const LatticePoint& p) {
    auto it = memo.find(p);
    if (it != memo.end()) return it->second;
    const bool a = accept(p, cfg);
    memo.emplace(p, a);
    return a;
  };
  auto within = [](const LatticePoint& p, const Golden& cut) { return norm_sq(physical_projection(p)) <= cut; };

  // Seeds: the origin, or failing that any accepted point of a small box.
  std::vector<LatticePoint> seeds;
  const LatticePoint origin{};
  if (accepted(origin)) {
    seeds.push_back(origin);
  } else {
    LatticePoint q;
    q.fill(-2);
    while (true) {
      if (within(q, search_cut) && accepted(q)) seeds.push_back(q);
      int k = 5;
      while (k >= 0 && q[k] == 2) q[k--] = -2;
      if (k < 0) break;
      ++q[k];
    }
  }

  // Vertices of tiles meeting the anchor ball are edge-connected within
  // radius + 3 sigma, so a breadth-first walk along +-e_i reaches all anchors.
  std::set<LatticePoint> anchors;
  std::set<LatticePoint> seen(seeds.begin(), seeds.end());
  std::deque<LatticePoint> queue(seeds.begin(), seeds.end());
  while (!queue.empty()) {
    const LatticePoint p = queue.front();
    queue.pop_front();
    if (within(p, anchor_cut)) anchors.insert(p);
    for (int i = 0; i < 6; ++i)
      for (int step : {1, -1}) {
        LatticePoint q = p;
        q[i] += step;
        if (seen.contains(q)) continue;
        seen.insert(q);
        if (within(q, search_cut) && accepted(q)) queue.push_back(q);
      }
  }

  Patch patch;
  patch.config = cfg;
  patch.provenance = std::string(kGeneratorVersion);
  const auto& V = star().V;
  for (const auto& p : anchors) {
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k) {
          bool all = true;
          for (int d = 1; d < 8 && all; ++d) {
            LatticePoint q = p;
            if (d & 1) ++q[i];
            if (d & 2) ++q[j];
            if (d & 4) ++q[k];
            all = accepted(q);
          }
          if (!all) continue;
          Rhombohedron t;
          t.anchor = physical_projection(p);
          t.edges = {V[i], V[j], V[k]};
          t.lattice_origin = p;
          t.axis_triple = {i + 1, j + 1, k + 1};
          patch.tiles.push_back(std::move(t));
        }
  }
  return patch;
}

namespace {

bool is_face_mask(unsigned mask) {
  static const std::set<unsigned> faces = [] {
    std::set<unsigned> f;
    for (unsigned v = 0; v < 8; ++v) {
      f.insert(1u << v);
      for (unsigned a = 0; a < 3; ++a) f.insert((1u << v) | (1u << (v ^ (1u << a))));
    }
    for (unsigned a = 0; a < 3; ++a)
      for (unsigned side = 0; side < 2; ++side) {
        unsigned m = 0;
        for (unsigned v = 0; v < 8; ++v)
          if (((v >> a) & 1u) == side) m |= 1u << v;
        f.insert(m);
      }
    return f;
  }();
  return faces.contains(mask);
}

}  // namespace

VerifyReport verify_patch(const Patch& patch) {
  VerifyReport report;
  const auto& R = Quasilattice::R();
  const auto& tiles = patch.tiles;
  report.tiles_checked = tiles.size();

  std::map<GVec3, std::vector<std::pair<std::size_t, unsigned>>, StructuralLess> incidence;
  for (std::size_t t = 0; t < tiles.size(); ++t) {
    const auto verts = tiles[t].vertices();
    for (unsigned k = 0; k < 8; ++k) {
      ++report.vertices_checked;
      if (!R.contains(verts[k]))
        report.violations.push_back({'a', {t}, "vertex " + to_string(verts[k]) + " is not in R"});
      incidence[verts[k]].emplace_back(t, k);
    }
    for (const auto& e : tiles[t].edges)
      if (!star12_index(e)) report.violations.push_back({'b', {t}, "edge " + to_string(e) + " is not ±V_i"});
    try {
      canonicalize(tiles[t]);
    } catch (const std::exception& ex) {
      report.violations.push_back({'c', {t}, ex.what()});
    }
  }

  // Shared vertex masks per tile pair.
  std::map<std::pair<std::size_t, std::size_t>, std::pair<unsigned, unsigned>> shared;
  for (const auto& [v, owners] : incidence) {
    for (std::size_t x = 0; x < owners.size(); ++x)
      for (std::size_t y = 0; y < owners.size(); ++y) {
        const auto [ta, ka] = owners[x];
        const auto [tb, kb] = owners[y];
        if (ta >= tb) continue;
        auto& m = shared[{ta, tb}];
        m.first |= 1u << ka;
        m.second |= 1u << kb;
      }
    // A vertex repeated inside one tile means a degenerate tile.
    for (std::size_t x = 0; x < owners.size(); ++x)
      for (std::size_t y = x + 1; y < owners.size(); ++y)
        if (owners[x].first == owners[y].first)
          report.violations.push_back({'d', {owners[x].first}, "tile has repeated vertex " + to_string(v)});
  }
  report.tile_pairs_checked = shared.size();
  for (const auto& [pair, masks] : shared) {
    const int n = std::popcount(masks.first);
    if (n == 8) {
      report.violations.push_back({'d', {pair.first, pair.second}, "duplicate tiles"});
    } else if (!is_face_mask(masks.first) || !is_face_mask(masks.second)) {
      report.violations.push_back(
          {'d', {pair.first, pair.second}, std::to_string(n) + " shared vertices do not form a common face"});
    }
  }
  return report;
}

PatchStats stats(const Patch& patch) {
  PatchStats s;
  for (const auto& t : patch.tiles) {
    if (classify(t.edges) == TileType::Oblate)
      ++s.n_oblate;
    else
      ++s.n_prolate;
  }
  s.ratio = s.n_oblate == 0 ? std::numeric_limits<double>::infinity()
                            : static_cast<double>(s.n_prolate) / static_cast<double>(s.n_oblate);
  return s;
}

}  // namespace ammann
