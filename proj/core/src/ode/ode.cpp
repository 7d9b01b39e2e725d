#include "painleve/ode/ode.hpp"

#include <map>

namespace painleve::ode {

using expr::kP;
using expr::kX;
using expr::kY;
using expr::NotRepresentable;
using expr::SymbolId;
using expr::SymbolTable;

namespace {

// p inside the base of a fractional power.
bool p_under_radical(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::Constant:
    case Expr::Kind::Symbol:
      return false;
    case Expr::Kind::Power:
      if (e.exponent().get_den() != 1 && ((expr::symbols_of(e.base()) >> kP) & 1u)) return true;
      return p_under_radical(e.base());
    case Expr::Kind::Negation:
      return p_under_radical(e.base());
    default:
      for (const auto& c : e.children())
        if (p_under_radical(c)) return true;
      return false;
  }
}

RationalFunction to_rf(const Expr& e) { return expr::to_rational_function(e); }

OdeCubic from_rhs_rf(const RationalFunction& f, const ParamEnv& env, std::string label) {
  if (f.denominator().depends_on(kP)) throw NotCubic("right-hand side is not polynomial in y'");
  auto c = f.coefficients_in(kP);
  if (c.size() > 4) throw NotCubic("right-hand side has degree " + std::to_string(c.size() - 1) + " in y'");
  c.resize(4);
  OdeCubic o;
  o.P = c[0];
  o.Q = c[1] / RationalFunction(3);
  o.R = c[2] / RationalFunction(3);
  o.S = c[3];
  o.env = env;
  o.label = std::move(label);
  return o;
}

}  // namespace

RationalFunction OdeCubic::rhs() const {
  RationalFunction p = RationalFunction::symbol(kP);
  return P + RationalFunction(3) * Q * p + RationalFunction(3) * R * p * p + S * p * p * p;
}

std::string OdeCubic::to_string() const {
  return "P = " + expr::to_expr(P).to_string() + ", Q = " + expr::to_expr(Q).to_string() +
         ", R = " + expr::to_expr(R).to_string() + ", S = " + expr::to_expr(S).to_string();
}

OdeCubic from_rhs(const Expr& rhs, const ParamEnv& env, std::string label) {
  env.require_declared(expr::symbols_of(rhs) & ~(1u << kP));
  if (p_under_radical(rhs)) throw NotCubic("y' appears under a fractional power");
  return from_rhs_rf(to_rf(rhs), env, std::move(label));
}

OdeCubic from_coefficients(const Expr& P, const Expr& Q, const Expr& R, const Expr& S, const ParamEnv& env,
                           std::string label) {
  for (const Expr* e : {&P, &Q, &R, &S}) {
    if ((expr::symbols_of(*e) >> kP) & 1u) throw NotCubic("coefficients must not depend on y'");
    env.require_declared(expr::symbols_of(*e));
  }
  OdeCubic o;
  o.P = to_rf(P);
  o.Q = to_rf(Q);
  o.R = to_rf(R);
  o.S = to_rf(S);
  o.env = env;
  o.label = std::move(label);
  return o;
}

OdeCubic normalize_implicit(const Expr& lead, const Expr& rest, const ParamEnv& env, std::string label) {
  env.require_declared((expr::symbols_of(lead) | expr::symbols_of(rest)) & ~(1u << kP));
  if (p_under_radical(lead) || p_under_radical(rest)) throw NotCubic("y' appears under a fractional power");
  RationalFunction l = to_rf(lead);
  if (l.is_zero()) throw std::invalid_argument("leading coefficient of y'' is identically zero");
  return from_rhs_rf(to_rf(rest) / l, env, std::move(label));
}

PointTransform PointTransform::identity() {
  return {Expr::symbol(kX), Expr::symbol(kY), std::pair{Expr::symbol(kX), Expr::symbol(kY)}};
}

Expr jacobian(const PointTransform& t) {
  return expr::diff(t.xt, kX) * expr::diff(t.yt, kY) - expr::diff(t.xt, kY) * expr::diff(t.yt, kX);
}

void require_nondegenerate(const PointTransform& t, const ParamEnv& env, const expr::SamplingPolicy& policy) {
  auto v = expr::is_zero(jacobian(t), env, policy);
  if (v.zero()) throw DegenerateTransform("Jacobian of the point transformation vanishes identically");
}

std::array<RationalFunction, 4> pulled_back_coefficients(const OdeCubic& e, const PointTransform& t,
                                                         const expr::SamplingPolicy& policy) {
  e.env.require_declared(expr::symbols_of(t.xt) | expr::symbols_of(t.yt));
  require_nondegenerate(t, e.env, policy);

  const RationalFunction X = to_rf(t.xt), Y = to_rf(t.yt);
  const RationalFunction p = RationalFunction::symbol(kP);
  const RationalFunction F = e.rhs();

  // Total derivative along solutions: f_x + p f_y + y'' f_p.
  auto total = [&](const RationalFunction& f) { return f.diff(kX) + p * f.diff(kY) + F * f.diff(kP); };

  const RationalFunction Xx = X.diff(kX), Xy = X.diff(kY), Yx = Y.diff(kX), Yy = Y.diff(kY);
  const RationalFunction u = Xx + p * Xy;
  const RationalFunction v = Yx + p * Yy;
  const RationalFunction ypp = (total(v) * u - v * total(u)) / (u * u * u);

  // Rewrite in the new derivative q = v/u.
  const SymbolId qs = SymbolTable::internal("q");
  const RationalFunction q = RationalFunction::symbol(qs);
  const RationalFunction p_of_q = (Yx - q * Xx) / (q * Xy - Yy);
  const RationalFunction in_q = ypp.substitute({{kP, p_of_q}});
  if (in_q.denominator().depends_on(qs)) throw NotCubic("internal: transformed equation is not polynomial in y'");
  auto c = in_q.coefficients_in(qs);
  if (c.size() > 4) throw NotCubic("internal: transformed equation has degree above 3 in y'");
  c.resize(4);
  return {c[0], c[1] / RationalFunction(3), c[2] / RationalFunction(3), c[3]};
}

OdeCubic apply_transform(const OdeCubic& e, const PointTransform& t, const expr::SamplingPolicy& policy) {
  if (!t.inverse) throw std::invalid_argument("apply_transform needs the inverse of the point transformation");
  auto c = pulled_back_coefficients(e, t, policy);
  const std::map<SymbolId, RationalFunction> back{{kX, to_rf(t.inverse->first)}, {kY, to_rf(t.inverse->second)}};
  OdeCubic o;
  o.P = c[0].substitute(back);
  o.Q = c[1].substitute(back);
  o.R = c[2].substitute(back);
  o.S = c[3].substitute(back);
  o.env = e.env;
  o.label = e.label.empty() ? std::string() : e.label + " (transformed)";
  return o;
}

PointTransform compose(const PointTransform& outer, const PointTransform& inner) {
  PointTransform r;
  std::map<SymbolId, Expr> in{{kX, inner.xt}, {kY, inner.yt}};
  r.xt = expr::subst(outer.xt, in);
  r.yt = expr::subst(outer.yt, in);
  if (outer.inverse && inner.inverse) {
    std::map<SymbolId, Expr> out{{kX, outer.inverse->first}, {kY, outer.inverse->second}};
    r.inverse = std::pair{expr::subst(inner.inverse->first, out), expr::subst(inner.inverse->second, out)};
  }
  return r;
}

}  // namespace painleve::ode
