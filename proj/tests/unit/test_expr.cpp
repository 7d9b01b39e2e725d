#include <gtest/gtest.h>

#include <cmath>

#include "painleve/expr/expr.hpp"
#include "random_expr.hpp"

using namespace painleve::expr;

namespace {

Assignment point(double x, double y, double b) {
  Assignment a;
  a.set(kX, x);
  a.set(kY, y);
  a.set(SymbolTable::intern("b"), b);
  return a;
}

double value(const Expr& e, const Assignment& a) {
  auto r = eval(e, a);
  EXPECT_TRUE(r.ok());
  return r.value;
}

bool same_normal_form(const Expr& a, const Expr& b) {
  return to_rational_function(a) == to_rational_function(b);
}

}  // namespace

TEST(Parse, CoefficientOfTheShiftedEquation) {
  Expr p = parse("-2*y^2 - x*y - b^2/(2*y)");
  EXPECT_EQ(p.kind(), Expr::Kind::Sum);
  EXPECT_NEAR(value(p, point(1, 2, 3)), -8 - 2 - 9.0 / 4, 1e-12);
}

TEST(Parse, RationalExponents) {
  Expr p = parse("y^(1/3)*(6*y + 3*x*y^(2/3) + 3/2)");
  EXPECT_NEAR(value(p, point(2, 8, 0)), 2 * (48 + 6 * 4 + 1.5), 1e-12);
  EXPECT_TRUE(parse("0").is_constant(0));
  EXPECT_TRUE(parse("y^(-2)").structurally_equal(Expr::power(Expr::symbol(kY), -2)));
  EXPECT_TRUE(parse("1.25").is_constant(mpq_class(5, 4)));
}

TEST(Parse, ErrorsCarryPosition) {
  try {
    parse("x + * y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse("x^y"), ParseError);
  EXPECT_THROW(parse("(x + 1"), ParseError);
  EXPECT_THROW(parse("x^(1/0)"), ParseError);
  EXPECT_THROW(parse("x $ y"), ParseError);
}

TEST(Print, RoundTripUpToNormalForm) {
  painleve::testing::RandomExpr gen(11);
  for (int i = 0; i < 50; ++i) {
    Expr e = gen(4);
    Expr back = parse(e.to_string());
    EXPECT_TRUE(same_normal_form(e, back)) << e.to_string();
    Expr n = normalize(e);
    EXPECT_TRUE(same_normal_form(parse(n.to_string()), e)) << n.to_string();
  }
}

TEST(Print, Shapes) {
  EXPECT_EQ(parse("x - y").to_string(), "x - y");
  EXPECT_EQ(parse("-b^2/(2*y)").to_string(), "-b^2/(2*y)");
  EXPECT_EQ(parse("y^(1/3)").to_string(), "y^(1/3)");
  EXPECT_EQ(normalize(parse("(x+y)^2 - x^2 - 2*x*y - y^2")).to_string(), "0");
}

TEST(Diff, PowerRuleAndConstants) {
  Expr e = parse("b^2/(2*y)");
  EXPECT_TRUE(same_normal_form(diff(e, 0, 1), parse("-b^2/(2*y^2)")));
  EXPECT_TRUE(diff(parse("b^3 + 7"), 1, 0).is_constant(0));
  EXPECT_TRUE(to_rational_function(diff(parse("y^(1/3)"), kY)) ==
              to_rational_function(parse("1/3*y^(-2/3)")));
}

TEST(Diff, AgreesWithCentralDifferences) {
  painleve::testing::RandomExpr gen(23);
  std::uniform_real_distribution<double> u(0.6, 2.9);
  int checked = 0;
  for (int i = 0; i < 50; ++i) {
    Expr e = gen(4);
    Assignment a = point(u(gen.rng()), u(gen.rng()), u(gen.rng()));
    for (SymbolId v : {kX, kY}) {
      double h = 1e-5 * std::max(1.0, std::abs(a.values[v]));
      Assignment lo = a, hi = a;
      lo.values[v] -= h;
      hi.values[v] += h;
      double fd = (value(e, hi) - value(e, lo)) / (2 * h);
      double ex = value(diff(e, v), a);
      double scale = std::max({1.0, std::abs(ex), std::abs(value(e, a))});
      EXPECT_LT(std::abs(fd - ex) / scale, 1e-6) << e.to_string();
      ++checked;
    }
  }
  EXPECT_EQ(checked, 100);
}

TEST(Diff, ProductRuleAndMixedPartials) {
  painleve::testing::RandomExpr gen(31);
  for (int i = 0; i < 40; ++i) {
    Expr e = gen(3), f = gen(3);
    for (SymbolId v : {kX, kY}) {
      Expr lhs = diff(e * f, v);
      Expr rhs = diff(e, v) * f + e * diff(f, v);
      EXPECT_TRUE(to_rational_function(lhs - rhs).is_zero());
    }
    Expr xy = diff(diff(e, kX), kY);
    Expr yx = diff(diff(e, kY), kX);
    EXPECT_TRUE(to_rational_function(xy) == to_rational_function(yx));
    EXPECT_TRUE(to_rational_function(e).diff(1, 1) == to_rational_function(xy));
  }
}

TEST(Normalize, Examples) {
  EXPECT_TRUE(to_rational_function(parse("(x+y)^2 - x^2 - 2*x*y - y^2")).is_zero());
  EXPECT_TRUE(same_normal_form(parse("y^(1/3)*y^(2/3)"), parse("y")));
  Expr i1 = parse("-36/5*y^3*(35*b^2 - 2*y^3)/(5*b^2 - 2*y^3)^2");
  Expr expanded = parse("18/5 - 90*b^2*(2*y^3 + b^2)/(5*b^2 - 2*y^3)^2");
  EXPECT_TRUE(to_rational_function(i1 - expanded).is_zero());
}

TEST(Normalize, PreservesValues) {
  painleve::testing::RandomExpr gen(41);
  std::uniform_real_distribution<double> u(0.6, 2.9);
  for (int i = 0; i < 50; ++i) {
    Expr e = gen(4);
    Expr n = normalize(e);
    Assignment a = point(u(gen.rng()), u(gen.rng()), u(gen.rng()));
    auto r1 = eval(e, a), r2 = eval(n, a);
    if (!r1.ok() || !r2.ok()) continue;
    EXPECT_LT(std::abs(r1.value - r2.value), 1e-9 * std::max(1.0, std::abs(r1.value))) << e.to_string();
  }
}

TEST(Normalize, FractionalPowerOfSumIsNotRepresentable) {
  EXPECT_THROW(to_rational_function(parse("(x + y)^(1/2)")), NotRepresentable);
  EXPECT_TRUE(same_normal_form(parse("(8*y^3)^(1/3)"), parse("2*y")));
}

TEST(Eval, Examples) {
  Expr n = parse("5*b^2/(4*y^4) - 1/(2*y)");
  EXPECT_NEAR(value(n, point(0, 1, 1)), 0.75, 1e-15);
  EXPECT_EQ(value(Expr(), point(1, 1, 1)), 0.0);
  Expr i1 = parse("36/5*y*(-35 + 2*y)/(2*y - 5)^2");
  EXPECT_NEAR(value(i1, point(0, 1, 0)), -132.0 / 5, 1e-12);
}

TEST(Eval, PolesAndDomainErrors) {
  EXPECT_EQ(eval(parse("1/y"), point(1, 0, 0)).status, EvalStatus::Pole);
  EXPECT_EQ(eval(parse("y^(1/3)"), point(1, -1, 0)).status, EvalStatus::DomainError);
  EXPECT_THROW(eval(parse("q"), point(1, 1, 1)), UnassignedSymbol);
  ComplexAssignment c;
  c.set(kY, -8.0);
  auto r = eval_complex(parse("y^(1/3)"), c);
  ASSERT_TRUE(r.ok());
  EXPECT_NEAR(r.value.real(), 1.0, 1e-12);
  EXPECT_NEAR(r.value.imag(), std::sqrt(3.0), 1e-12);
}

TEST(Subst, SimultaneousAndAgreesWithComposition) {
  Expr t = Expr::symbol("t");
  EXPECT_TRUE(same_normal_form(subst(parse("y^2"), {{kY, Expr::power(t, 3)}}), Expr::power(t, 6)));
  EXPECT_TRUE(subst(parse("x"), {{kX, parse("x")}}).structurally_equal(parse("x")));
  Expr e = parse("x*y^2 + x");
  Expr swapped = subst(e, {{kX, parse("y")}, {kY, parse("x")}});
  EXPECT_TRUE(same_normal_form(swapped, parse("y*x^2 + y")));
  Expr s = subst(parse("b^2/(2*y) + x^3"), {{kY, parse("x + 1")}, {kX, parse("2*y")}});
  EXPECT_NEAR(value(s, point(1.5, 0.7, 2)), 4.0 / (2 * 2.5) + 1.4 * 1.4 * 1.4, 1e-12);
}

TEST(RationalFunction, SubstitutionIntoRoots) {
  // y^(1/3) under y -> 8*y^3 becomes 2*y.
  RationalFunction f = to_rational_function(parse("y^(1/3) + x"));
  RationalFunction g = f.substitute({{kY, to_rational_function(parse("8*y^3"))}});
  EXPECT_TRUE(g == to_rational_function(parse("2*y + x")));
  EXPECT_THROW(f.substitute({{kY, to_rational_function(parse("y + 1"))}}), NotRepresentable);
}
