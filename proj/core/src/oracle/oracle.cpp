#include "painleve/oracle/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace painleve::oracle {

using C = std::complex<double>;
using expr::Assignment;
using expr::ComplexAssignment;
using expr::kX;
using expr::kY;
using expr::RationalFunction;

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Warn:
      return "warn";
    case Verdict::Fail:
      return "fail";
    case Verdict::Insufficient:
      return "insufficient";
  }
  return "?";
}

TargetEquation TargetEquation::of(const ode::OdeCubic& e) {
  return {{expr::to_expr(e.P), expr::to_expr(e.Q), expr::to_expr(e.R), expr::to_expr(e.S)}, {}};
}

namespace {

ComplexAssignment complexify(const Assignment& a) {
  ComplexAssignment c;
  for (SymbolId s = 0; s < expr::kMaxSymbols; ++s)
    if (a.has(s)) c.set(s, a.values[s]);
  return c;
}

bool finite(C z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::optional<C> eval_at(const Expr& e, const ComplexAssignment& a, expr::RootBranch b) {
  auto r = expr::eval_complex(e, a, b);
  if (!r.ok() || !finite(r.value)) return std::nullopt;
  return r.value;
}

std::optional<C> eval_at(const RationalFunction& f, const ComplexAssignment& a, expr::RootBranch b) {
  auto r = f.evaluate(std::span<const C, expr::kMaxSymbols>(a.values), b);
  if (!r || !finite(*r)) return std::nullopt;
  return r;
}

// Solves the 4x4 system by Gaussian elimination with partial pivoting.
std::optional<std::array<C, 4>> solve4(std::array<std::array<C, 5>, 4> m) {
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    if (std::abs(m[piv][col]) < 1e-300) return std::nullopt;
    std::swap(m[col], m[piv]);
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      C f = m[r][col] / m[col][col];
      for (int k = col; k < 5; ++k) m[r][k] -= f * m[col][k];
    }
  }
  std::array<C, 4> x;
  for (int i = 0; i < 4; ++i) x[i] = m[i][4] / m[i][i];
  return x;
}

// Second-order partials of one component of the transformation.
struct MapDerivatives {
  Expr f, fx, fy, fxx, fxy, fyy;

  explicit MapDerivatives(const Expr& e)
      : f(e), fx(expr::diff(e, kX)), fy(expr::diff(e, kY)), fxx(expr::diff(fx, kX)), fxy(expr::diff(fx, kY)),
        fyy(expr::diff(fy, kY)) {}
};

struct MapJet {
  C f, fx, fy, fxx, fxy, fyy;
};

std::optional<MapJet> jet(const MapDerivatives& d, const ComplexAssignment& a, expr::RootBranch b) {
  MapJet j;
  std::array<std::pair<const Expr*, C*>, 6> items{
      {{&d.f, &j.f}, {&d.fx, &j.fx}, {&d.fy, &j.fy}, {&d.fxx, &j.fxx}, {&d.fxy, &j.fxy}, {&d.fyy, &j.fyy}}};
  for (auto& [e, out] : items) {
    auto v = eval_at(*e, a, b);
    if (!v) return std::nullopt;
    *out = *v;
  }
  return j;
}

std::optional<JetSample> transform_at_impl(const ode::OdeCubic& src, const MapDerivatives& X, const MapDerivatives& Y,
                                           const Assignment& point, expr::RootBranch branch) {
  ComplexAssignment a = complexify(point);
  auto jx = jet(X, a, branch);
  auto jy = jet(Y, a, branch);
  if (!jx || !jy) return std::nullopt;
  std::array<C, 4> coef;
  const std::array<const RationalFunction*, 4> src_coef{&src.P, &src.Q, &src.R, &src.S};
  for (int i = 0; i < 4; ++i) {
    auto v = eval_at(*src_coef[i], a, branch);
    if (!v) return std::nullopt;
    coef[i] = *v;
  }
  const auto& [P, Q, R, S] = coef;

  // Four source slopes p give four image slopes q~ = v/u and values of y~''; the cubic through
  // them is the transformed equation at this point.
  static constexpr std::array<double, 4> nodes{-1.0, -1.0 / 3, 1.0 / 3, 1.0};
  std::array<std::array<C, 5>, 4> sys;
  for (int k = 0; k < 4; ++k) {
    C p = nodes[k];
    C ypp = P + 3.0 * Q * p + 3.0 * R * p * p + S * p * p * p;
    C u = jx->fx + p * jx->fy;
    C v = jy->fx + p * jy->fy;
    C du = jx->fxx + 2.0 * p * jx->fxy + p * p * jx->fyy + jx->fy * ypp;
    C dv = jy->fxx + 2.0 * p * jy->fxy + p * p * jy->fyy + jy->fy * ypp;
    if (std::abs(u) < 1e-300) return std::nullopt;
    C yt2 = (dv * u - v * du) / (u * u * u);
    C q = v / u;
    sys[k] = {C(1.0), q, q * q, q * q * q, yt2};
  }
  auto c = solve4(sys);
  if (!c) return std::nullopt;
  for (const C& z : *c)
    if (!finite(z)) return std::nullopt;
  return JetSample{jx->f, jy->f, {(*c)[0], (*c)[1] / 3.0, (*c)[2] / 3.0, (*c)[3]}};
}

expr::SamplingPolicy domain(const OracleOptions& o) {
  expr::SamplingPolicy p;
  p.lo = o.lo;
  p.hi = o.hi;
  return p;
}

}  // namespace

std::optional<JetSample> transform_at(const ode::OdeCubic& src, const ode::PointTransform& t,
                                      const Assignment& point, expr::RootBranch branch) {
  return transform_at_impl(src, MapDerivatives(t.xt), MapDerivatives(t.yt), point, branch);
}

ResidualReport verify_transform(const ode::OdeCubic& src, const TargetEquation& dst, const ode::PointTransform& t,
                                const OracleOptions& options) {
  ResidualReport rep;
  const MapDerivatives X(t.xt), Y(t.yt);
  std::mt19937_64 rng(options.seed);
  const auto policy = domain(options);
  while (rep.samples_used < options.samples) {
    if (rep.poles_skipped > options.max_redraws) break;
    Assignment pt = expr::sample_point(src.env, policy, rng);
    auto js = transform_at_impl(src, X, Y, pt, options.branch);
    if (!js) {
      ++rep.poles_skipped;
      continue;
    }
    ComplexAssignment at_src = complexify(pt);
    ComplexAssignment at_dst = at_src;
    at_dst.set(kX, js->x);
    at_dst.set(kY, js->y);
    bool ok = true;
    for (const auto& [sym, e] : dst.bindings) {
      auto v = eval_at(e, at_src, options.branch);
      if (!v) {
        ok = false;
        break;
      }
      at_dst.set(sym, *v);
    }
    std::array<double, 4> res{};
    for (int i = 0; ok && i < 4; ++i) {
      auto d = eval_at(dst.coefficients[i], at_dst, options.branch);
      if (!d) {
        ok = false;
        break;
      }
      res[i] = std::abs(js->coefficients[i] - *d) / std::max(1.0, std::abs(*d));
    }
    if (!ok) {
      ++rep.poles_skipped;
      continue;
    }
    rep.residuals.push_back(res);
    rep.max_residual = std::max(rep.max_residual, *std::max_element(res.begin(), res.end()));
    ++rep.samples_used;
  }
  if (rep.samples_used < options.min_samples) {
    rep.verdict = Verdict::Insufficient;
  } else if (rep.max_residual < options.pass_tol) {
    rep.verdict = Verdict::Pass;
  } else if (rep.max_residual < options.warn_tol) {
    rep.verdict = Verdict::Warn;
  } else {
    rep.verdict = Verdict::Fail;
  }
  return rep;
}

ResidualReport verify_transform(const ode::OdeCubic& src, const ode::OdeCubic& dst, const ode::PointTransform& t,
                                const OracleOptions& options) {
  return verify_transform(src, TargetEquation::of(dst), t, options);
}

WeightLawReport verify_weight_law(const invariants::PseudoField& field, const invariants::PseudoField& transformed,
                                  bool pulled_back, const ode::PointTransform& t, const expr::ParamEnv& env,
                                  const OracleOptions& options, double tol) {
  WeightLawReport rep;
  const std::size_t n = field.components.size();
  if (n != transformed.components.size() || (n != 1 && n != 2))
    throw std::invalid_argument("weight law needs matching scalar or vector fields");
  const MapDerivatives X(t.xt), Y(t.yt);
  std::mt19937_64 rng(options.seed);
  const auto policy = domain(options);
  while (rep.samples_used < options.samples && rep.poles_skipped <= options.max_redraws) {
    Assignment pt = expr::sample_point(env, policy, rng);
    ComplexAssignment a = complexify(pt);
    auto jx = jet(X, a, options.branch);
    auto jy = jet(Y, a, options.branch);
    ComplexAssignment b = a;
    bool ok = jx && jy;
    if (ok && !pulled_back) {
      b.set(kX, jx->f);
      b.set(kY, jy->f);
    }
    std::array<C, 2> F{}, Ft{};
    for (std::size_t i = 0; ok && i < n; ++i) {
      auto u = eval_at(field.components[i], a, options.branch);
      auto v = eval_at(transformed.components[i], b, options.branch);
      if (!u || !v) ok = false;
      else {
        F[i] = *u;
        Ft[i] = *v;
      }
    }
    if (!ok) {
      ++rep.poles_skipped;
      continue;
    }
    // T = d(x~, y~)/d(x, y); S = T^-1.
    C det = jx->fx * jy->fy - jx->fy * jy->fx;
    if (std::abs(det) < 1e-300) {
      ++rep.poles_skipped;
      continue;
    }
    C factor = std::pow(det, transformed.weight);
    std::array<C, 2> rhs{};
    if (n == 1) {
      rhs[0] = factor * Ft[0];
    } else {
      rhs[0] = factor * (jy->fy * Ft[0] - jx->fy * Ft[1]) / det;
      rhs[1] = factor * (-jy->fx * Ft[0] + jx->fx * Ft[1]) / det;
    }
    for (std::size_t i = 0; i < n; ++i) {
      double r = std::abs(F[i] - rhs[i]) / std::max({1.0, std::abs(F[i]), std::abs(rhs[i])});
      rep.max_residual = std::max(rep.max_residual, r);
    }
    ++rep.samples_used;
  }
  rep.indeterminate = rep.samples_used < options.min_samples;
  rep.holds = !rep.indeterminate && rep.max_residual < tol;
  return rep;
}

}  // namespace painleve::oracle
