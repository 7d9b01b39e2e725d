#include "painleve/classify/classify.hpp"

#include <cmath>
#include <cstdio>
#include <random>

namespace painleve::classify {

using expr::SamplingPolicy;
using expr::ZeroVerdict;
using invariants::InvariantReport;
using RF = RationalFunction;
using Kind = ZeroVerdict::Kind;

const char* to_string(CaseTag t) {
  switch (t) {
    case CaseTag::MaximalDegeneration: return "MaximalDegeneration";
    case CaseTag::GeneralCase: return "GeneralCase";
    case CaseTag::SecondCase: return "SecondCase";
    case CaseTag::FirstCase: return "FirstCase";
    case CaseTag::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::EquivalentPII: return "EquivalentPII";
    case Outcome::EquivalentP34: return "EquivalentP34";
    case Outcome::NotEquivalent: return "NotEquivalent";
    case Outcome::OutOfScope: return "OutOfScope";
    case Outcome::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string Classification::describe() const {
  std::string s = to_string(tag);
  if (tag == CaseTag::Inconclusive) return s + " (verdict on " + unknown_predicate + " is unknown)";
  if (tag != CaseTag::FirstCase) return s;
  s += omega_zero ? ", Omega = 0" : ", Omega != 0";
  s += i2_zero ? ", I2 = 0" : ", I2 != 0";
  s += i7_zero ? ", I7 = 0" : ", I7 != 0";
  if (case_1_4()) s += " (case 1.4)";
  return s;
}

namespace {

Kind kind_of(const InvariantReport& r, const std::string& name) {
  const ZeroVerdict* v = r.verdict(name);
  return v ? v->kind : Kind::Unknown;
}

Classification inconclusive(const std::string& predicate) {
  Classification c;
  c.tag = CaseTag::Inconclusive;
  c.unknown_predicate = predicate;
  return c;
}

}  // namespace

Classification classify(const InvariantReport& r) {
  Classification c;
  Kind a = kind_of(r, "A"), b = kind_of(r, "B");
  if (a == Kind::Unknown) return inconclusive("A");
  if (b == Kind::Unknown) return inconclusive("B");
  if (a == Kind::Zero && b == Kind::Zero) {
    c.tag = CaseTag::MaximalDegeneration;
    return c;
  }
  Kind f = kind_of(r, "F5");
  if (f == Kind::Unknown) return inconclusive("F5");
  if (f == Kind::NonZero) {
    c.tag = CaseTag::GeneralCase;
    return c;
  }
  Kind m = kind_of(r, "M");
  if (m == Kind::Unknown) return inconclusive("M");
  if (m == Kind::Zero) {
    c.tag = CaseTag::SecondCase;
    return c;
  }
  for (const char* name : {"Omega", "N", "I2", "I7"})
    if (kind_of(r, name) == Kind::Unknown) return inconclusive(name);
  c.tag = CaseTag::FirstCase;
  c.omega_zero = kind_of(r, "Omega") == Kind::Zero;
  c.i2_zero = kind_of(r, "I2") == Kind::Zero;
  c.i7_zero = kind_of(r, "I7") == Kind::Zero;
  return c;
}

Classification classify(const ode::OdeCubic& e, const invariants::TowerOptions& options) {
  return classify(invariants::compute_invariants(e, options));
}

std::optional<bool> functional_independence(const RF& f, const RF& g, const expr::ParamEnv& env,
                                            const SamplingPolicy& policy) {
  RF det = f.diff(expr::kX) * g.diff(expr::kY) - f.diff(expr::kY) * g.diff(expr::kX);
  auto v = expr::is_zero(det, env, policy);
  if (v.kind == Kind::Unknown) return std::nullopt;
  return v.nonzero();
}

std::optional<bool> functional_independence(const Expr& f, const Expr& g, const expr::ParamEnv& env,
                                            const SamplingPolicy& policy) {
  using expr::kX;
  using expr::kY;
  Expr det = expr::diff(f, kX) * expr::diff(g, kY) - expr::diff(f, kY) * expr::diff(g, kX);
  auto v = expr::is_zero(det, env, policy);
  if (v.kind == Kind::Unknown) return std::nullopt;
  return v.nonzero();
}

oracle::TargetEquation painleve_two(const Expr& a) {
  Expr x = Expr::symbol(expr::kX), y = Expr::symbol(expr::kY);
  return {{Expr(2) * Expr::power(y, 3) + x * y + a, Expr(0), Expr(0), Expr(0)}, {}};
}

oracle::TargetEquation painleve_34(const Expr& beta_squared) {
  Expr x = Expr::symbol(expr::kX), y = Expr::symbol(expr::kY);
  Expr y13 = Expr::power(y, mpq_class(1, 3)), y23 = Expr::power(y, mpq_class(2, 3));
  Expr P = -(beta_squared * y13 * (Expr(6) * y + Expr(3) * x * y23 + Expr(mpq_class(3, 2))));
  Expr R = Expr(mpq_class(5, 18)) / y;
  return {{P, Expr(0), R, Expr(0)}, {}};
}

namespace {

EquivalenceResult make(Outcome o, std::string reason) {
  EquivalenceResult r;
  r.outcome = o;
  r.reason = std::move(reason);
  return r;
}

// Shared first condition: F = 0 with A or B nonzero, and the first case (M != 0).
std::optional<EquivalenceResult> scope_check(const InvariantReport& r) {
  Classification c = classify(r);
  switch (c.tag) {
    case CaseTag::Inconclusive:
      return make(Outcome::Inconclusive, "verdict on " + c.unknown_predicate + " is unknown");
    case CaseTag::MaximalDegeneration:
    case CaseTag::GeneralCase:
    case CaseTag::SecondCase:
      return make(Outcome::OutOfScope, to_string(c.tag));
    case CaseTag::FirstCase:
      break;
  }
  if (!r.I1 || !r.I3 || !r.I9) return make(Outcome::Inconclusive, "invariant tower incomplete");
  return std::nullopt;
}

std::optional<EquivalenceResult> require(const InvariantReport& r, const std::string& name, Kind wanted,
                                         const std::string& failure) {
  Kind k = kind_of(r, name);
  if (k == Kind::Unknown) return make(Outcome::Inconclusive, "verdict on " + name + " is unknown");
  if (k != wanted) return make(Outcome::NotEquivalent, failure);
  return std::nullopt;
}

std::optional<EquivalenceResult> require(const ZeroVerdict& v, const std::string& name, Kind wanted,
                                         const std::string& failure) {
  if (v.kind == Kind::Unknown) return make(Outcome::Inconclusive, "verdict on " + name + " is unknown");
  if (v.kind != wanted) return make(Outcome::NotEquivalent, failure);
  return std::nullopt;
}

std::string residual_text(const oracle::ResidualReport& rep) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", rep.max_residual);
  return std::string(oracle::to_string(rep.verdict)) + ", max residual " + buf;
}

// Sign of a nonvanishing constant-sign function on the oracle domain, from one sample.
std::optional<bool> negative_on_domain(const RF& f, const expr::ParamEnv& env, const oracle::OracleOptions& o) {
  std::mt19937_64 rng(o.seed);
  SamplingPolicy pol;
  pol.lo = o.lo;
  pol.hi = o.hi;
  for (unsigned i = 0; i < o.max_redraws; ++i) {
    auto pt = expr::sample_point(env, pol, rng);
    auto v = f.evaluate(std::span<const double, expr::kMaxSymbols>(pt.values));
    if (v && std::isfinite(*v) && *v != 0.0) return *v < 0.0;
  }
  return std::nullopt;
}

}  // namespace

EquivalenceResult test_pii(const ode::OdeCubic& e, const InvariantReport& r, const ClassifyOptions& options) {
  if (auto s = scope_check(r)) return *s;
  const auto& pol = options.tower.policy;
  if (auto f = require(r, "Omega", Kind::Zero, "Omega != 0")) return *f;
  if (auto f = require(expr::is_zero(*r.I1 - RF(mpq_class(18, 5)), e.env, pol), "I1 - 18/5", Kind::Zero, "I1 != 18/5"))
    return *f;
  if (auto f = require(r, "I9", Kind::NonZero, "I9 = 0")) return *f;
  if (!r.J2) return make(Outcome::Inconclusive, "J is undefined");
  if (!expr::independent_of_xy(*r.J2)) return make(Outcome::NotEquivalent, "J is not constant");

  EquivalenceResult out;
  const std::pair<const char*, const RF*> inv[] = {{"I3", &*r.I3}, {"I6", &*r.I6}, {"I9", &*r.I9}};
  bool unknown = false;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      auto ind = functional_independence(*inv[i].second, *inv[j].second, e.env, pol);
      if (!ind) unknown = true;
      else if (*ind) out.independent_pairs.push_back({inv[i].first, inv[j].first});
    }
  if (out.independent_pairs.empty()) {
    if (unknown) return make(Outcome::Inconclusive, "functional independence of I3, I6, I9 is unknown");
    return make(Outcome::NotEquivalent, "no two of I3, I6, I9 are functionally independent");
  }

  // a = +J or -J.
  const RF& j2 = *r.J2;
  try {
    RF s = j2.pow(mpq_class(1, 2));
    out.a_candidates = {expr::to_expr(s), expr::to_expr(-s)};
  } catch (const expr::NotRepresentable&) {
    Expr s = Expr::power(expr::to_expr(j2), mpq_class(1, 2));
    out.a_candidates = {s, -s};
  }
  if (auto c = j2.constant_value(); c && *c < 0)
    out.notes.push_back("J^2 is negative; a is not real");

  // y~ = z^(-1/6), x~ = 5 I6 z^(-1/3) - (3/2) J z^(1/6), z = 2500 I9, with J = (4 + 10 I6 - 60 I3) z^(-1/2).
  RF z = RF(2500) * *r.I9;
  Expr jnum = expr::to_expr(RF(4) + RF(10) * *r.I6 - RF(60) * *r.I3);
  Expr i6 = expr::to_expr(*r.I6);
  auto build = [&](const RF& w) {
    Expr we = expr::to_expr(w);
    Expr jw = jnum * Expr::power(we, mpq_class(-1, 2));
    ode::PointTransform t{Expr(5) * i6 * Expr::power(we, mpq_class(-1, 3)) -
                              Expr(mpq_class(3, 2)) * jw * Expr::power(we, mpq_class(1, 6)),
                          Expr::power(we, mpq_class(-1, 6)), std::nullopt};
    return std::pair{t, jw};
  };

  std::vector<std::pair<const char*, RF>> roots = {{"principal", z}};
  if (negative_on_domain(z, e.env, options.oracle).value_or(false)) roots.push_back({"modulus", -z});
  std::optional<oracle::ResidualReport> best;
  for (const auto& [label, w] : roots) {
    auto [t, jw] = build(w);
    oracle::TargetEquation target = painleve_two(Expr::symbol("%a"));
    target.bindings[expr::SymbolTable::intern("%a")] = jw;
    // Every root in the transform is a power of z^(1/6); only principal branches keep them consistent.
    oracle::OracleOptions oo = options.oracle;
    oo.branch = expr::RootBranch::Principal;
    auto rep = oracle::verify_transform(e, target, t, oo);
    if (rep.passed()) {
      out.outcome = Outcome::EquivalentPII;
      out.transform = t;
      out.residual = rep;
      out.target = target;
      out.branch = oo.branch;
      if (roots.size() > 1) out.notes.push_back(std::string("I9 < 0 on the domain; sixth root taken on the ") + label + " branch");
      for (const auto& cand : out.a_candidates)
        if (expr::is_zero_sampled(jw - cand, e.env, pol).zero()) {
          out.a_realized = cand;
          break;
        }
      return out;
    }
    if (!best || rep.max_residual < best->max_residual) best = rep;
  }
  out.outcome = Outcome::Inconclusive;
  out.reason = "conditions hold but the oracle rejected the transform (" + residual_text(*best) + ")";
  out.residual = best;
  return out;
}

EquivalenceResult test_pii(const ode::OdeCubic& e, const ClassifyOptions& options) {
  return test_pii(e, invariants::compute_invariants(e, options.tower), options);
}

EquivalenceResult test_p34(const ode::OdeCubic& e, const InvariantReport& r, const ClassifyOptions& options) {
  if (auto s = scope_check(r)) return *s;
  const auto& pol = options.tower.policy;
  if (auto f = require(r, "I2", Kind::Zero, "I2 != 0")) return *f;
  if (auto f = require(r, "I7", Kind::Zero, "I7 != 0")) return *f;
  if (auto f = require(r, "K", Kind::Zero, "K != 0")) return *f;

  invariants::RecoveredCoordinates rec;
  try {
    rec = invariants::recover_coordinates(*r.I1, *r.I3, *r.I4, *r.I9);
  } catch (const invariants::CaseError& err) {
    return make(Outcome::NotEquivalent, std::string("recovered change of variables is undefined: ") + err.what());
  }
  // det d(x~, y~)/d(x, y) = y~^(-5/3) det d(u, y~)/d(x, y).
  RF det = rec.u.diff(expr::kX) * rec.y.diff(expr::kY) - rec.u.diff(expr::kY) * rec.y.diff(expr::kX);
  if (auto f = require(expr::is_zero(det, e.env, pol), "Jacobian", Kind::NonZero,
                       "recovered change of variables is degenerate"))
    return *f;
  if (!expr::independent_of_xy(rec.beta2)) return make(Outcome::NotEquivalent, "beta^2 is not constant");
  if (auto f = require(expr::is_zero(rec.beta2, e.env, pol), "beta^2", Kind::NonZero, "beta^2 = 0")) return *f;

  EquivalenceResult out;
  out.beta_squared = expr::to_expr(rec.beta2);
  ode::PointTransform t{rec.x, expr::to_expr(rec.y), std::nullopt};
  out.target = painleve_34(*out.beta_squared);
  out.branch = options.oracle.branch;
  auto rep = oracle::verify_transform(e, *out.target, t, options.oracle);
  out.residual = rep;
  if (!rep.passed()) {
    out.outcome = Outcome::Inconclusive;
    out.reason = "conditions hold but the oracle rejected the transform (" + residual_text(rep) + ")";
    return out;
  }
  out.outcome = Outcome::EquivalentP34;
  out.transform = t;
  return out;
}

EquivalenceResult test_p34(const ode::OdeCubic& e, const ClassifyOptions& options) {
  return test_p34(e, invariants::compute_invariants(e, options.tower), options);
}

}  // namespace painleve::classify
