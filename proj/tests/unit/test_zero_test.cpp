#include <gtest/gtest.h>

#include "painleve/expr/zero_test.hpp"

using namespace painleve::expr;

namespace {

ParamEnv env_b(Constraint c) {
  ParamEnv env;
  env.declare("b", c);
  return env;
}

}  // namespace

TEST(ZeroTest, ExactZero) {
  auto v = is_zero(parse("x - x"), ParamEnv{});
  EXPECT_TRUE(v.zero());
  EXPECT_TRUE(v.exact);
}

TEST(ZeroTest, NonZeroNeedsEvidence) {
  auto v = is_zero(parse("-3 - 3*b^2/(2*y^3)"), env_b(Constraint::NonZero));
  EXPECT_TRUE(v.nonzero());
  EXPECT_EQ(v.residuals.size(), 16u);
  auto tiny = is_zero(parse("10^(-12)*x"), ParamEnv{});
  EXPECT_EQ(tiny.kind, ZeroVerdict::Kind::Unknown);
}

TEST(ZeroTest, UndeclaredSymbolsAreRejected) {
  EXPECT_THROW(is_zero(parse("c*x"), ParamEnv{}), UndeclaredSymbol);
}

TEST(ZeroTest, ProbabilisticFallbackForRadicalsOfSums) {
  ParamEnv env;
  auto z = is_zero(parse("(x + y)^(1/2)*(x + y)^(1/2) - x - y"), env);
  EXPECT_TRUE(z.zero());
  EXPECT_FALSE(z.exact);
  auto nz = is_zero(parse("(x + y)^(1/2) - x"), env);
  EXPECT_TRUE(nz.nonzero());
}

TEST(ZeroTest, NeverZeroWithLargeSample) {
  // Soundness: a sample above nz_tol forbids a Zero verdict.
  SamplingPolicy p;
  p.samples = 4;
  auto v = is_zero(parse("(x + y)^(1/2) - (x + y)^(1/2) + 1/(1000*x)"), ParamEnv{}, p);
  for (double r : v.residuals) EXPECT_GT(r, p.nz_tol);
  EXPECT_TRUE(v.nonzero());
}

TEST(ZeroTest, ParameterConstraintsAreRespected) {
  SamplingPolicy p;
  std::mt19937_64 rng(3);
  ParamEnv env = env_b(Constraint::Positive);
  env.declare("c!=0");
  env.declare("d");
  SymbolId b = SymbolTable::intern("b"), c = SymbolTable::intern("c");
  for (int i = 0; i < 200; ++i) {
    Assignment a = sample_point(env, p, rng);
    EXPECT_GT(a.values[b], 0.5);
    EXPECT_GT(std::abs(a.values[c]), 0.5);
    EXPECT_GT(a.values[kY], 0.5);
    EXPECT_LT(a.values[kX], 3.0);
  }
  EXPECT_THROW(env.declare("x>0"), std::invalid_argument);
  EXPECT_THROW(env.declare("b>1"), std::invalid_argument);
}

TEST(ZeroTest, DeterministicForSeed) {
  ParamEnv env = env_b(Constraint::Free);
  auto v1 = is_zero(parse("(b + y)^(1/2) - x"), env);
  auto v2 = is_zero(parse("(b + y)^(1/2) - x"), env);
  EXPECT_EQ(v1.residuals, v2.residuals);
}
