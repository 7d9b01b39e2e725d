#include <gtest/gtest.h>

#include <random>

#include "painleve/oracle/oracle.hpp"

using namespace painleve::expr;
using namespace painleve::ode;
using namespace painleve::invariants;
using namespace painleve::oracle;

namespace {

ParamEnv env_with(std::initializer_list<const char*> specs) {
  ParamEnv env;
  for (const char* s : specs) env.declare(s);
  return env;
}

OdeCubic radical_form(const char* beta2 = "b^2") {
  std::string rhs = std::string("5*p^2/(6*y) - ") + beta2 + "*y^(1/3)*(6*y + 3*x*y^(2/3) + 3/2)";
  return from_rhs(parse(rhs), std::string(beta2) == "b^2" ? env_with({"b!=0"}) : ParamEnv{});
}

PointTransform forward(const char* xt, const char* yt) { return {parse(xt), parse(yt), std::nullopt}; }

}  // namespace

TEST(Oracle, IdentityHasZeroResidual) {
  auto e = radical_form();
  auto rep = verify_transform(e, e, PointTransform::identity());
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.samples_used, 20u);
  EXPECT_LT(rep.max_residual, 1e-12);
}

TEST(Oracle, InceFormReachesRadicalForm) {
  auto ince = from_rhs(parse("p^2/(2*y) + 4*y^2 - x*y - 1/(2*y)"), ParamEnv{});
  auto rep = verify_transform(ince, radical_form("4"), forward("x/2^(2/3)", "-2*y^3"));
  EXPECT_TRUE(rep.passed()) << rep.max_residual;
}

TEST(Oracle, WrongTargetFails) {
  auto ince = from_rhs(parse("p^2/(2*y) + 4*y^2 - x*y - 1/(2*y)"), ParamEnv{});
  auto rep = verify_transform(ince, radical_form("5"), forward("x/2^(2/3)", "-2*y^3"));
  EXPECT_EQ(rep.verdict, Verdict::Fail);
}

TEST(Oracle, ShiftedEquationWithoutBetaReachesPainleveTwo) {
  auto src = from_rhs(parse("p^2/(2*y) - 2*y^2 - x*y"), ParamEnv{});
  auto pii = from_rhs(parse("2*y^3 + x*y"), ParamEnv{});
  // Inverse of x = -2^(1/3) x~, y = -2^(1/3) y~^2.
  auto rep = verify_transform(src, pii, forward("-x/2^(1/3)", "(-y/2^(1/3))^(1/2)"));
  EXPECT_TRUE(rep.passed()) << rep.max_residual;
}

TEST(Oracle, AgreesWithSymbolicTransformer) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(1, 4);
  auto e = from_rhs(parse("p^3*x + p^2/(2*y) - 2*y^2 - x*y - b^2/(2*y) + 3*p*x"), env_with({"b!=0"}));
  for (int i = 0; i < 5; ++i) {
    int a = c(rng), b = c(rng), k = c(rng), d = c(rng);
    std::string xt = std::to_string(a) + "*x + " + std::to_string(b) + "*y^2 + " + std::to_string(k) + "*y";
    std::string yt = std::to_string(d) + "*y + 1";
    std::string xi = "(x - " + std::to_string(b) + "*((y - 1)/" + std::to_string(d) + ")^2 - " + std::to_string(k) +
                     "*(y - 1)/" + std::to_string(d) + ")/" + std::to_string(a);
    std::string yi = "(y - 1)/" + std::to_string(d);
    PointTransform t{parse(xt), parse(yt), std::pair{parse(xi), parse(yi)}};
    auto image = apply_transform(e, t);
    auto rep = verify_transform(e, image, t);
    EXPECT_TRUE(rep.passed()) << i << " " << rep.max_residual;
  }
}

namespace {

struct Fields {
  PseudoField alpha, beta, gamma, omega, n, m;
};

Fields fields_of(const Coefficients& c, const Frame& f) {
  Fields r;
  r.alpha = alpha(c, f);
  RationalFunction A = -r.alpha.components[1], B = r.alpha.components[0];
  r.beta = beta(c, f, A, B);
  RationalFunction Om = omega(c, f, A, B, Branch::A);
  RationalFunction N = n_pseudo(A, B, r.beta.components[0], r.beta.components[1], Branch::A);
  RationalFunction M = m_pseudo(c, f, A, B, N, Branch::A);
  r.omega = {{Om}, 1};
  r.n = {{N}, 2};
  r.m = {{M}, 4};
  r.gamma = gamma(c, f, A, B, N, Om, Branch::A);
  return r;
}

Fields transformed_fields(const OdeCubic& e, const PointTransform& t) {
  auto pb = pulled_back_coefficients(e, t);
  return fields_of({pb[0], pb[1], pb[2], pb[3]}, Frame::pulled_back(t));
}

}  // namespace

TEST(WeightLaw, AlphaUnderScaling) {
  auto e = radical_form();
  auto t = forward("2*x", "3*y");
  auto f = alpha(Coefficients::of(e), Frame::standard());
  auto ft = transformed_fields(e, t).alpha;
  auto rep = verify_weight_law(f, ft, true, t, e.env);
  EXPECT_TRUE(rep.holds) << rep.max_residual;
  EXPECT_GE(rep.samples_used, 10u);
}

TEST(WeightLaw, IdentityHoldsTrivially) {
  auto e = radical_form();
  auto f = fields_of(Coefficients::of(e), Frame::standard());
  auto rep = verify_weight_law(f.gamma, f.gamma, false, PointTransform::identity(), e.env);
  EXPECT_TRUE(rep.holds);
  EXPECT_EQ(rep.max_residual, 0.0);
}

TEST(WeightLaw, AllFieldsUnderAffineMaps) {
  auto e = radical_form();
  auto f = fields_of(Coefficients::of(e), Frame::standard());
  const std::vector<std::array<const char*, 2>> maps{{"x + 2*y", "3*y - x"}, {"2*x - y + 1", "x + y"}};
  for (const auto& tr : maps) {
    auto t = forward(tr[0], tr[1]);
    auto ft = transformed_fields(e, t);
    EXPECT_TRUE(verify_weight_law(f.alpha, ft.alpha, true, t, e.env).holds) << tr[0];
    EXPECT_TRUE(verify_weight_law(f.beta, ft.beta, true, t, e.env).holds) << tr[0];
    EXPECT_TRUE(verify_weight_law(f.gamma, ft.gamma, true, t, e.env).holds) << tr[0];
    EXPECT_TRUE(verify_weight_law(f.omega, ft.omega, true, t, e.env).holds) << tr[0];
    EXPECT_TRUE(verify_weight_law(f.n, ft.n, true, t, e.env).holds) << tr[0];
    EXPECT_TRUE(verify_weight_law(f.m, ft.m, true, t, e.env).holds) << tr[0];
  }
}

TEST(WeightLaw, WrongWeightIsDetected) {
  auto e = radical_form();
  auto t = forward("2*x", "3*y");
  auto f = alpha(Coefficients::of(e), Frame::standard());
  auto ft = transformed_fields(e, t).alpha;
  ft.weight = 3;
  EXPECT_FALSE(verify_weight_law(f, ft, true, t, e.env).holds);
}
