#include "ammann/io.hpp"

#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "ammann/quasilattice.hpp"
#include "support.hpp"

namespace ammann {
namespace {

using test::G;
using test::Gq;
using test::v3;

Patch sample_patch() {
  return generate_patch(PatchConfig::make(Rational(2), v3(Gq(1, 70, 0, 1), Gq(1, 110, 0, 1), Gq(1, 130, 0, 1))));
}

TEST(GoldenJson, FourIntegers) {
  EXPECT_EQ(golden_to_json(G(4, -2)), "[4,1,-2,1]");
  EXPECT_EQ(golden_to_json(Gq(-1, 2, 3, 4)), "[-1,2,3,4]");
  EXPECT_EQ(golden_to_json(Golden()), "[0,1,0,1]");
  EXPECT_EQ(golden_from_json("[4,1,-2,1]"), G(4, -2));
  EXPECT_EQ(golden_from_json("[2,4,0,1]"), Gq(1, 2, 0, 1));
}

TEST(GoldenJson, BigIntegersAsStrings) {
  const mpz_class big("123456789012345678901234567891");
  const Golden x(Rational(big, 7), Rational(-1));
  const std::string s = golden_to_json(x);
  EXPECT_EQ(s, "[\"123456789012345678901234567891\",7,-1,1]");
  EXPECT_EQ(golden_from_json(s), x);
}

TEST(GoldenJson, Rejects) {
  EXPECT_THROW(golden_from_json("[1,0,0,1]"), ParseError);
  EXPECT_THROW(golden_from_json("[1,-1,0,1]"), ParseError);
  EXPECT_THROW(golden_from_json("[1,1,0]"), ParseError);
  EXPECT_THROW(golden_from_json("[1.5,1,0,1]"), ParseError);
  EXPECT_THROW(golden_from_json("[\"x\",1,0,1]"), ParseError);
  EXPECT_THROW(golden_from_json("{"), ParseError);
}

TEST(PatchJson, RoundTrip) {
  const Patch p = sample_patch();
  ASSERT_FALSE(p.tiles.empty());
  const std::string text = patch_to_json(p);
  const Patch q = patch_from_json(text);
  EXPECT_EQ(q, p);
  EXPECT_EQ(patch_to_json(q), text);
}

TEST(PatchJson, Layout) {
  const Patch p = sample_patch();
  const auto doc = nlohmann::json::parse(patch_to_json(p));
  EXPECT_EQ(doc.at("format"), std::string(kPatchFormat));
  EXPECT_EQ(doc.at("provenance"), std::string(kGeneratorVersion));
  EXPECT_EQ(doc.at("config").at("radius"), nlohmann::json::parse("[2,1,0,1]"));
  EXPECT_EQ(doc.at("config").at("window").size(), 30u);
  const auto& t0 = doc.at("tiles").at(0);
  EXPECT_EQ(t0.at("lattice_origin").size(), 6u);
  EXPECT_EQ(t0.at("axis_triple").size(), 3u);
  EXPECT_EQ(t0.at("edges").size(), 3u);
  const std::string type = t0.at("type");
  EXPECT_TRUE(type == "oblate" || type == "prolate");
}

TEST(PatchJson, MalformedInputs) {
  const std::string good = patch_to_json(sample_patch());
  auto mutate = [&](auto&& f) {
    auto doc = nlohmann::json::parse(good);
    f(doc);
    return doc.dump();
  };
  EXPECT_THROW(patch_from_json("not json"), ParseError);
  EXPECT_THROW(patch_from_json("[]"), ParseError);
  EXPECT_THROW(patch_from_json(mutate([](auto& d) { d["format"] = "other/9"; })), ParseError);
  EXPECT_THROW(patch_from_json(mutate([](auto& d) { d.erase("tiles"); })), ParseError);
  EXPECT_THROW(patch_from_json(mutate([](auto& d) { d["config"]["window"].erase(0); })), ParseError);
  EXPECT_THROW(patch_from_json(mutate([](auto& d) { d["config"]["radius"] = {1, 1, 1, 1}; })), ParseError);
  EXPECT_THROW(patch_from_json(mutate([](auto& d) { d["tiles"][0]["edges"].erase(0); })), ParseError);
  EXPECT_THROW(patch_from_json(mutate([](auto& d) { d["tiles"][0]["lattice_origin"] = "x"; })), ParseError);
  EXPECT_THROW(patch_from_json(mutate([](auto& d) { d["tiles"][0]["type"] = 3; })), ParseError);
}

TEST(DelzantJson, OblateFields) {
  const auto doc = nlohmann::json::parse(delzant_to_json(delzant(canonical_tile(TileType::Oblate))));
  EXPECT_EQ(doc.at("type"), "oblate");
  EXPECT_EQ(doc.at("offsets").at(3), nlohmann::json::parse("[1,1,-1,1]"));  // 1 - phi
  EXPECT_EQ(doc.at("radii_sq").at(0), nlohmann::json::parse("[-1,1,1,1]"));
  EXPECT_EQ(doc.at("gamma_generators").size(), 3u);
  EXPECT_EQ(doc.at("chart_groups").size(), 8u);
  EXPECT_EQ(doc.at("invariants").at("cover_volume"), nlohmann::json::parse("[-3,1,2,1]"));
  EXPECT_EQ(doc.at("invariants").at("gamma_rank"), 3);
}

TEST(Obj, CountsAndNames) {
  const Patch p = sample_patch();
  std::ostringstream os;
  write_obj(os, p);
  std::istringstream in(os.str());
  std::size_t v = 0, f = 0, o = 0, oblate = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.rfind("v ", 0) == 0) ++v;
    if (line.rfind("f ", 0) == 0) ++f;
    if (line.rfind("o ", 0) == 0) {
      ++o;
      if (line.rfind("o oblate_", 0) == 0) ++oblate;
      else EXPECT_EQ(line.rfind("o prolate_", 0), 0u) << line;
    }
  }
  EXPECT_EQ(v, 8 * p.tiles.size());
  EXPECT_EQ(f, 6 * p.tiles.size());
  EXPECT_EQ(o, p.tiles.size());
  EXPECT_EQ(oblate, stats(p).n_oblate);
}

TEST(Obj, FacesAreRhombi) {
  Patch p;
  p.tiles = {canonical_tile(TileType::Prolate)};
  std::ostringstream os;
  write_obj(os, p);
  std::istringstream in(os.str());
  std::vector<std::array<double, 3>> verts;
  std::vector<std::array<int, 4>> faces;
  for (std::string line; std::getline(in, line);) {
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "v") {
      std::array<double, 3> x;
      ls >> x[0] >> x[1] >> x[2];
      verts.push_back(x);
    } else if (tag == "f") {
      std::array<int, 4> q;
      ls >> q[0] >> q[1] >> q[2] >> q[3];
      faces.push_back(q);
    }
  }
  ASSERT_EQ(verts.size(), 8u);
  ASSERT_EQ(faces.size(), 6u);
  const double sigma2 = sigma_sq().to_double();
  for (const auto& q : faces)
    for (int i = 0; i < 4; ++i) {
      const auto& a = verts[q[i] - 1];
      const auto& b = verts[q[(i + 1) % 4] - 1];
      const double d2 = (a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]) + (a[2] - b[2]) * (a[2] - b[2]);
      EXPECT_NEAR(d2, sigma2, 1e-6);
    }
}

}  // namespace
}  // namespace ammann
