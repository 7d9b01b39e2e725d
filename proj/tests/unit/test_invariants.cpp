#include <gtest/gtest.h>

#include "painleve/invariants/invariants.hpp"

using namespace painleve::expr;
using namespace painleve::ode;
using namespace painleve::invariants;

// Expected values were computed independently with a computer-algebra system and frozen here.

namespace {

RationalFunction rf(const char* s) { return to_rational_function(parse(s)); }

ParamEnv env_with(std::initializer_list<const char*> specs) {
  ParamEnv env;
  for (const char* s : specs) env.declare(s);
  return env;
}

#define EXPECT_RF(actual, text) EXPECT_TRUE((actual) == rf(text)) << to_expr(actual).to_string()

OdeCubic shifted(bool with_beta = true) {
  if (!with_beta) return from_rhs(parse("p^2/(2*y) - 2*y^2 - x*y"), ParamEnv{});
  return from_rhs(parse("p^2/(2*y) - 2*y^2 - x*y - b^2/(2*y)"), env_with({"b!=0"}));
}

OdeCubic radical_form() {
  return from_rhs(parse("5*p^2/(6*y) - b^2*y^(1/3)*(6*y + 3*x*y^(2/3) + 3/2)"), env_with({"b!=0"}));
}

}  // namespace

TEST(Tower, ShiftedEquationPseudoinvariants) {
  auto r = compute_invariants(shifted());
  EXPECT_RF(r.A, "-3*(b^2 + 2*y^3)/(2*y^3)");
  EXPECT_RF(r.B, "0");
  EXPECT_RF(r.G, "0");
  EXPECT_RF(r.H, "-9*(2*y^3 - 5*b^2)*(b^2 + 2*y^3)/(8*y^7)");
  EXPECT_RF(r.F5, "0");
  EXPECT_EQ(r.branch, Branch::A);
  EXPECT_RF(*r.Omega, "0");
  EXPECT_RF(*r.N, "5*b^2/(4*y^4) - 1/(2*y)");
  EXPECT_RF(*r.M, "9/(10*y^2) - 63*b^2/(4*y^5)");
  EXPECT_RF(*r.gamma1, "-3*(2*y^3 - 35*b^2)/(10*y^2*(b^2 + 2*y^3))");
  EXPECT_RF(*r.gamma2, "0");
}

TEST(Tower, ShiftedEquationInvariants) {
  auto r = compute_invariants(shifted());
  EXPECT_RF(*r.I1, "-36/5*y^3*(35*b^2 - 2*y^3)/(5*b^2 - 2*y^3)^2");
  EXPECT_RF(*r.I2, "0");
  EXPECT_RF(*r.I7, "0");
  EXPECT_RF(*r.I4, "-3240*b^2*y^3*(b^2 + 2*y^3)*(7*b^2 + 2*y^3)/(2*y^3 - 5*b^2)^4");
  EXPECT_RF(*r.I9, "-64*y^18*(2*y^3 - 35*b^2)^4/(625*(2*y^3 - 5*b^2)^3*(b^2 + 2*y^3)^8)");
  EXPECT_TRUE(r.verdicts.at("I7").zero());
  EXPECT_TRUE(r.verdicts.at("M").nonzero());
}

TEST(Tower, ShiftedEquationWithoutBeta) {
  auto r = compute_invariants(shifted(false));
  EXPECT_RF(*r.N, "-1/(2*y)");
  EXPECT_RF(*r.M, "9/(10*y^2)");
  EXPECT_RF(*r.I1, "18/5");
  EXPECT_RF(*r.I3, "(2*y + x)/(30*y)");
  EXPECT_RF(*r.I4, "0");
  EXPECT_RF(*r.I6, "x/(5*y)");
  EXPECT_RF(*r.I9, "-1/(1250*y^3)");
  EXPECT_RF(*r.J2, "0");
}

TEST(Tower, PainleveTwo) {
  auto r = compute_invariants(from_rhs(parse("2*y^3 + x*y + a"), env_with({"a"})));
  EXPECT_RF(r.A, "12*y");
  EXPECT_RF(r.B, "0");
  EXPECT_RF(r.H, "-144*y");
  EXPECT_RF(*r.N, "4");
  EXPECT_RF(*r.M, "288/5");
  EXPECT_RF(*r.gamma1, "24/(5*y)");
  EXPECT_RF(*r.I1, "18/5");
  EXPECT_RF(*r.I3, "(a + x*y + 2*y^3)/(30*y^3)");
  EXPECT_RF(*r.I6, "(3*a + 2*x*y)/(10*y^3)");
  EXPECT_RF(*r.I9, "1/(2500*y^6)");
  EXPECT_RF(*r.J2, "a^2");
}

TEST(Tower, RadicalForm) {
  auto r = compute_invariants(radical_form());
  EXPECT_RF(r.A, "-b^2*(2*y + 1)/(2*y^(5/3))");
  EXPECT_RF(*r.N, "-b^2*(2*y - 5)/(36*y^(8/3))");
  EXPECT_RF(*r.M, "b^4*(2*y - 35)/(180*y^(13/3))");
  EXPECT_RF(*r.I1, "36/5*y*(-35 + 2*y)/(2*y - 5)^2");
  EXPECT_RF(*r.I3, "y*(4*y + 2*x*y^(2/3) + 1)*(-35 + 2*y)/(15*(2*y + 1)^3)");
  EXPECT_RF(*r.I4, "-3240*(2*y + 7)*y*(2*y + 1)/(2*y - 5)^4");
  EXPECT_RF(*r.I9, "-64/625*y^6*(2*y - 35)^4/(b^2*(2*y + 1)^8*(2*y - 5)^3)");
  EXPECT_RF(*r.I2, "0");
  EXPECT_RF(*r.I7, "0");
  EXPECT_RF(*r.K, "0");
  auto rec = recover_coordinates(*r.I1, *r.I3, *r.I4, *r.I9);
  EXPECT_RF(rec.y, "y");
  EXPECT_RF(rec.u, "x*y^(5/3)");
  EXPECT_RF(rec.beta2, "b^2");
  EXPECT_TRUE(to_rational_function(rec.x) == rf("x"));
}

TEST(Tower, InceFormWithUnitParameter) {
  auto r = compute_invariants(from_rhs(parse("p^2/(2*y) + 4*y^2 - x*y - 1/(2*y)"), ParamEnv{}));
  EXPECT_RF(r.A, "3*(4*y^3 - 1)/(2*y^3)");
  EXPECT_RF(*r.I1, "72*y^3*(4*y^3 + 35)/(5*(4*y^3 + 5)^2)");
  EXPECT_RF(*r.I4, "6480*y^3*(4*y^3 - 7)*(4*y^3 - 1)/(4*y^3 + 5)^4");
  EXPECT_RF(*r.I9, "1024*y^18*(4*y^3 + 35)^4/(625*(4*y^3 - 1)^8*(4*y^3 + 5)^3)");
  EXPECT_RF(*r.K, "0");
  auto rec = recover_coordinates(*r.I1, *r.I3, *r.I4, *r.I9);
  EXPECT_RF(rec.y, "-2*y^3");
  EXPECT_RF(rec.u, "-2*x*y^5");
  EXPECT_RF(rec.beta2, "4");
}

TEST(Tower, ZeroEquationIsMaximallyDegenerate) {
  auto r = compute_invariants(from_rhs(parse("0"), ParamEnv{}));
  EXPECT_TRUE(r.verdicts.at("A").zero());
  EXPECT_TRUE(r.verdicts.at("B").zero());
  EXPECT_FALSE(r.Omega.has_value());
}

TEST(Tower, PureForcingHasVanishingF) {
  // With Q = R = S = 0 both B and G vanish identically, so F5 = A G / 3 = 0.
  auto r = compute_invariants(from_rhs(parse("y^5"), ParamEnv{}));
  EXPECT_RF(r.A, "20*y^3");
  EXPECT_RF(r.G, "0");
  EXPECT_RF(r.H, "-1200*y^5");
  EXPECT_RF(r.F5, "0");
}

TEST(Tower, CubicTermGivesGeneralCase) {
  auto r = compute_invariants(from_rhs(parse("y^2 + x^2*p^3"), ParamEnv{}));
  EXPECT_RF(r.A, "2 + 4*x*y^2");
  EXPECT_RF(r.B, "2 - 4*x^2*y");
  EXPECT_TRUE(r.verdicts.at("F5").nonzero());
  EXPECT_FALSE(r.Omega.has_value());
}

TEST(Tower, KVanishesAtTheOrigin) {
  EXPECT_TRUE(k_invariant(RationalFunction(0), RationalFunction(0)).is_zero());
}
