#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "fixtures.hpp"
#include "properties.hpp"

using namespace painleve;
using namespace painleve::properties;
using invariants::Coefficients;
using invariants::Frame;

TEST(Invariance, RadicalFormUnderRandomMaps) {
  auto e = fixtures::radical();
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 5; ++i) {
    auto t = random_affine_quadratic(rng);
    auto c = check_invariance(e, t, {"I1", "I3", "I4", "I9"});
    ASSERT_TRUE(c.error.empty()) << c.error;
    EXPECT_GE(c.samples, 10u);
    EXPECT_LT(c.worst(), 1e-6) << t.xt.to_string() << ", " << t.yt.to_string();
  }
}

TEST(Invariance, AllFirstCaseInvariantsOnShiftedForm) {
  auto e = fixtures::shifted("3");
  std::mt19937_64 rng(7);
  auto t = random_affine_quadratic(rng);
  auto c = check_invariance(e, t, {"I1", "I2", "I3", "I4", "I6", "I7", "I9"});
  ASSERT_TRUE(c.error.empty()) << c.error;
  EXPECT_LT(c.worst(), 1e-6);
}

TEST(WeightLawProperty, RadicalFormUnderRandomMaps) {
  auto e = fixtures::radical();
  auto f = fields_of(Coefficients::of(e), Frame::standard());
  std::mt19937_64 rng(99);
  for (int i = 0; i < 5; ++i) {
    auto t = random_affine_quadratic(rng);
    auto ft = transformed_fields(e, t);
    for (auto [a, b] : {std::pair{&f.alpha, &ft.alpha}, {&f.gamma, &ft.gamma}, {&f.omega, &ft.omega}, {&f.n, &ft.n},
                        {&f.m, &ft.m}, {&f.beta, &ft.beta}}) {
      auto rep = oracle::verify_weight_law(*a, *b, true, t, e.env);
      EXPECT_TRUE(rep.holds) << "weight " << a->weight << " residual " << rep.max_residual;
    }
  }
}

TEST(BranchAgreement, TwentyRandomEquations) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> kind(0, 2), c(1, 6);
  int checked = 0;
  while (checked < 20) {
    ode::OdeCubic base = kind(rng) == 0   ? fixtures::shifted(std::to_string(c(rng)))
                         : kind(rng) == 1 ? fixtures::ince(std::to_string(c(rng)) + "/2")
                                          : fixtures::rogers_a(std::to_string(c(rng)));
    auto e = ode::apply_transform(base, random_affine(rng));
    auto r = invariants::compute_invariants(e);
    if (!r.verdict("A")->nonzero() || !r.verdict("B")->nonzero()) continue;
    ASSERT_TRUE(r.branch_check);
    EXPECT_TRUE(r.branch_check->omega.zero());
    EXPECT_TRUE(r.branch_check->n.zero());
    EXPECT_TRUE(r.branch_check->m.zero());
    EXPECT_TRUE(r.branch_check->gamma1.zero());
    EXPECT_TRUE(r.branch_check->gamma2.zero());
    ++checked;
  }
}

TEST(PredicateStability, ThreeSeeds) {
  for (const auto& e : {fixtures::shifted(), fixtures::radical(), fixtures::ince("1"), fixtures::rogers_a("5"),
                        fixtures::rogers_b()}) {
    std::map<std::string, expr::ZeroVerdict::Kind> first;
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      invariants::TowerOptions o;
      o.policy.seed = seed;
      auto r = invariants::compute_invariants(e, o);
      for (const char* name : {"F5", "Omega", "I2", "I7"}) {
        ASSERT_NE(r.verdict(name), nullptr) << e.label << " " << name;
        auto k = r.verdict(name)->kind;
        if (seed == 1u) first[name] = k;
        EXPECT_EQ(k, first[name]) << e.label << " " << name;
      }
    }
  }
}

TEST(BranchAgreement, PrintedGammaVariantDisagrees) {
  std::mt19937_64 rng(31);
  auto e = ode::apply_transform(fixtures::shifted("3"), random_affine(rng));
  invariants::TowerOptions o;
  o.gamma_variant = invariants::GammaVariant::Printed;
  auto b = invariants::compare_branches(Coefficients::of(e), Frame::standard(), e.env, o);
  EXPECT_TRUE(b.gamma1.nonzero());
  EXPECT_TRUE(b.gamma2.zero());
}
