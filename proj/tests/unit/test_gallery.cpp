#include <gtest/gtest.h>

#include <toricfan/charts.hpp>
#include <toricfan/error.hpp>
#include <toricfan/gallery.hpp>
#include <toricfan/validity.hpp>

#include "oracles.hpp"

using namespace toricfan;

namespace {

ErrorCode code_of(const std::string& name) {
  try {
    gallery(name);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted " << name;
  return ErrorCode::Parse;
}

}  // namespace

TEST(Gallery, Cp1) {
  const TopologicalFan fan = gallery("cp1");
  EXPECT_EQ(fan.ray_count(), 2u);
  EXPECT_EQ(fan.beta[0].v, (IntVector{1}));
  EXPECT_EQ(fan.beta[1].v, (IntVector{-1}));
  for (const Cocharacter& beta : fan.beta) {
    EXPECT_EQ(beta.b, to_rational(beta.v));
    EXPECT_TRUE(is_zero(beta.c));
  }
}

TEST(Gallery, Cpn) {
  EXPECT_EQ(gallery("cpn(2)").maximal_simplices.size(), 3u);
  EXPECT_EQ(gallery("cp2"), gallery("cpn(2)"));
  const TopologicalFan cp3 = gallery("cpn(3)");
  EXPECT_EQ(cp3.maximal_simplices.size(), 4u);
  EXPECT_EQ(cp3.beta[3].v, (IntVector{-1, -1, -1}));
  EXPECT_TRUE(classify(cp3).toric);
}

TEST(Gallery, Hirzebruch) {
  const TopologicalFan fan = gallery("hirzebruch(3)");
  EXPECT_EQ(fan.beta[2].v, (IntVector{-1, 3}));
  EXPECT_EQ(fan.maximal_simplices, (std::vector<Simplex>{{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  EXPECT_TRUE(classify(fan).toric);
}

TEST(Gallery, NiceNontoric) {
  const TopologicalFan fan = gallery("nice_nontoric");
  const Classification cls = classify(fan);
  EXPECT_TRUE(cls.nice);
  EXPECT_FALSE(cls.toric);
  EXPECT_EQ(fan.maximal_simplices, cpn(2).maximal_simplices);
  // Exactly one ray with b != v, congruent mod 2.
  int differing = 0;
  for (const RayFlags& f : cls.rays) differing += f.b_equals_v ? 0 : 1;
  EXPECT_EQ(differing, 1);
  // The construction is deterministic; freeze the data it currently yields.
  EXPECT_EQ(fan.beta[0].v, (IntVector{-1, 0}));
  EXPECT_EQ(fan.beta[0].b, (RatVector{1, 0}));
}

TEST(Gallery, PerturbedIsValidAndNotNice) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    for (const char* base : {"cp2", "hirzebruch(1)", "nice_nontoric"}) {
      const std::string name = std::string("perturbed(") + base + "," + std::to_string(seed) + ")";
      const TopologicalFan fan = gallery(name);
      const TopologicalFan original = gallery(base);
      EXPECT_TRUE(validate(fan).valid()) << name;
      EXPECT_FALSE(classify(fan).nice) << name;
      EXPECT_EQ(fan.maximal_simplices, original.maximal_simplices);
      bool some_c = false;
      for (std::size_t i = 0; i < fan.ray_count(); ++i) {
        EXPECT_EQ(fan.beta[i].v, original.beta[i].v);
        some_c = some_c || !is_zero(fan.beta[i].c);
      }
      EXPECT_TRUE(some_c);
      EXPECT_EQ(gallery(name), fan);
    }
  }
  EXPECT_NE(gallery("perturbed(cp2,1)"), gallery("perturbed(cp2,2)"));
}

TEST(Gallery, AllValidate) {
  for (const auto& name : oracle::gallery_names()) EXPECT_TRUE(validate(gallery(name)).valid()) << name;
  for (const auto& name : gallery_catalog()) EXPECT_TRUE(validate(gallery(name)).valid()) << name;
}

TEST(Gallery, Errors) {
  EXPECT_EQ(code_of("cp7"), ErrorCode::UnknownGallery);
  EXPECT_EQ(code_of("torus"), ErrorCode::UnknownGallery);
  EXPECT_EQ(code_of("cpn(0)"), ErrorCode::InvalidParam);
  EXPECT_EQ(code_of("cpn(x)"), ErrorCode::InvalidParam);
  EXPECT_EQ(code_of("hirzebruch(1/2)"), ErrorCode::InvalidParam);
  EXPECT_EQ(code_of("perturbed(cp2)"), ErrorCode::InvalidParam);
  EXPECT_EQ(code_of("perturbed(cp2,-1)"), ErrorCode::InvalidParam);
  EXPECT_EQ(code_of("perturbed(nope,1)"), ErrorCode::UnknownGallery);
}
