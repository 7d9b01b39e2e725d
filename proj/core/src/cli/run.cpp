#include "painleve/cli/run.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "painleve/classify/classify.hpp"

namespace painleve::cli {

namespace {

using json = nlohmann::ordered_json;
using classify::EquivalenceResult;
using classify::Outcome;
using expr::Expr;
using expr::ZeroVerdict;
using invariants::InvariantReport;
using RF = expr::RationalFunction;

const char* mode_name(InputMode m) {
  switch (m) {
    case InputMode::Rhs: return "rhs";
    case InputMode::Coefficients: return "coeffs";
    case InputMode::Implicit: return "implicit";
  }
  return "?";
}

const char* constraint_name(expr::Constraint c) {
  switch (c) {
    case expr::Constraint::Free: return "free";
    case expr::Constraint::NonZero: return "nonzero";
    case expr::Constraint::Positive: return "positive";
  }
  return "?";
}

std::string text(const RF& f) { return expr::to_expr(f).to_string(); }

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

ode::OdeCubic build(const RunConfig& cfg, const expr::ParamEnv& env) {
  const auto& in = cfg.inputs;
  auto expect = [&](std::size_t n) {
    if (in.size() != n)
      throw std::invalid_argument(std::string(mode_name(cfg.mode)) + " input takes " + std::to_string(n) +
                                  " expression(s), got " + std::to_string(in.size()));
  };
  switch (cfg.mode) {
    case InputMode::Rhs:
      expect(1);
      return ode::from_rhs(expr::parse(in[0]), env);
    case InputMode::Coefficients:
      expect(4);
      return ode::from_coefficients(expr::parse(in[0]), expr::parse(in[1]), expr::parse(in[2]), expr::parse(in[3]),
                                    env);
    case InputMode::Implicit:
      expect(2);
      return ode::normalize_implicit(expr::parse(in[0]), expr::parse(in[1]), env);
  }
  throw std::invalid_argument("unknown input mode");
}

// Sign of I9 on the sampling domain, reported next to J.
std::string sign_on_domain(const RF& f, const expr::ParamEnv& env, const expr::SamplingPolicy& policy) {
  std::mt19937_64 rng(policy.seed);
  int pos = 0, neg = 0;
  for (unsigned i = 0; i < policy.samples; ++i) {
    auto pt = expr::sample_point(env, policy, rng);
    auto v = f.evaluate(std::span<const double, expr::kMaxSymbols>(pt.values));
    if (!v || !std::isfinite(*v)) continue;
    if (*v > 0) ++pos;
    else if (*v < 0) ++neg;
  }
  if (pos && !neg) return "positive";
  if (neg && !pos) return "negative";
  if (pos && neg) return "mixed";
  return "unknown";
}

json verdict_json(const ZeroVerdict* v) {
  if (!v) return nullptr;
  return expr::to_string(v->kind);
}

json residual_json(const std::optional<oracle::ResidualReport>& r) {
  if (!r) return nullptr;
  return json{{"verdict", oracle::to_string(r->verdict)},
              {"max", r->max_residual},
              {"samples_used", r->samples_used},
              {"poles_skipped", r->poles_skipped}};
}

json transform_json(const std::optional<ode::PointTransform>& t) {
  if (!t) return nullptr;
  return json{{"x", t->xt.to_string()}, {"y", t->yt.to_string()}};
}

struct Verification {
  std::optional<oracle::ResidualReport> report;
};

Verification reverify(const ode::OdeCubic& e, const EquivalenceResult& r, const RunConfig& cfg) {
  Verification v;
  if (!cfg.verify || !r.equivalent() || !r.transform || !r.target) return v;
  oracle::OracleOptions o;
  o.seed = cfg.seed ^ 0x9e3779b97f4a7c15ULL;
  o.samples = 100;
  o.min_samples = 50;
  o.max_redraws = 1000;
  o.branch = r.branch;
  v.report = oracle::verify_transform(e, *r.target, *r.transform, o);
  return v;
}

json result_json(const EquivalenceResult& r, bool pii, const Verification& v) {
  json j;
  j["outcome"] = classify::to_string(r.outcome);
  j["reason"] = r.reason.empty() ? json(nullptr) : json(r.reason);
  if (pii) {
    json cands = json::array();
    for (const auto& c : r.a_candidates) cands.push_back(c.to_string());
    j["a_candidates"] = cands;
    j["a_realized"] = r.a_realized ? json(r.a_realized->to_string()) : json(nullptr);
    json pairs = json::array();
    for (const auto& p : r.independent_pairs) pairs.push_back(json::array({p.first, p.second}));
    j["independent_pairs"] = pairs;
  } else {
    j["beta_squared"] = r.beta_squared ? json(r.beta_squared->to_string()) : json(nullptr);
  }
  j["transform"] = transform_json(r.transform);
  j["residual"] = residual_json(r.residual);
  j["verification"] = residual_json(v.report);
  j["notes"] = r.notes;
  return j;
}

void write_result_text(std::ostream& out, const char* name, const EquivalenceResult& r, bool pii,
                       const Verification& v) {
  out << name << "  " << classify::to_string(r.outcome);
  if (!r.reason.empty()) out << ": " << r.reason;
  out << "\n";
  if (pii && !r.a_candidates.empty()) {
    out << "     a in {" << r.a_candidates[0].to_string() << ", " << r.a_candidates[1].to_string() << "}";
    if (r.a_realized) out << ", transform reaches a = " << r.a_realized->to_string();
    out << "\n";
  }
  if (pii && !r.independent_pairs.empty()) {
    out << "     independent:";
    for (const auto& p : r.independent_pairs) out << " (" << p.first << ", " << p.second << ")";
    out << "\n";
  }
  if (!pii && r.beta_squared) out << "     beta^2 = " << r.beta_squared->to_string() << "\n";
  if (r.transform) {
    out << "     x~ = " << r.transform->xt.to_string() << "\n";
    out << "     y~ = " << r.transform->yt.to_string() << "\n";
  }
  if (r.residual)
    out << "     oracle " << oracle::to_string(r.residual->verdict) << ", max residual "
        << format_double(r.residual->max_residual) << " over " << r.residual->samples_used << " samples\n";
  if (v.report)
    out << "     verification " << oracle::to_string(v.report->verdict) << ", max residual "
        << format_double(v.report->max_residual) << " over " << v.report->samples_used << " samples\n";
  for (const auto& n : r.notes) out << "     note: " << n << "\n";
}

struct Row {
  const char* name;
  std::optional<RF> value;
};

std::vector<Row> rows(const InvariantReport& r) {
  bool tower = r.verdict("F5") != nullptr;
  return {{"A", tower ? std::optional(r.A) : std::nullopt},
          {"B", tower ? std::optional(r.B) : std::nullopt},
          {"F5", tower ? std::optional(r.F5) : std::nullopt},
          {"Omega", r.Omega},
          {"N", r.N},
          {"M", r.M},
          {"I1", r.I1},
          {"I2", r.I2},
          {"I3", r.I3},
          {"I4", r.I4},
          {"I6", r.I6},
          {"I7", r.I7},
          {"I9", r.I9},
          {"K", r.K}};
}

int exit_code(const classify::Classification& c, const EquivalenceResult& pii, const EquivalenceResult& p34,
              const Verification& vp, const Verification& vq) {
  auto verified = [](const Verification& v) { return !v.report || v.report->passed(); };
  if ((pii.equivalent() && verified(vp)) || (p34.equivalent() && verified(vq))) return kEquivalent;
  if (c.tag == classify::CaseTag::Inconclusive || pii.outcome == Outcome::Inconclusive ||
      p34.outcome == Outcome::Inconclusive || pii.equivalent() || p34.equivalent())
    return kInconclusive;
  return kNotEquivalent;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  expr::ParamEnv env;
  ode::OdeCubic e;
  try {
    for (const auto& p : cfg.params) env.declare(p);
    e = build(cfg, env);
  } catch (const expr::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kInputError;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kInputError;
  }

  classify::ClassifyOptions options;
  auto& pol = options.tower.policy;
  pol.seed = cfg.seed;
  if (cfg.samples) pol.samples = *cfg.samples;
  if (cfg.abs_tol) pol.abs_tol = *cfg.abs_tol;
  options.oracle.seed = cfg.seed;

  InvariantReport report;
  classify::Classification cls;
  EquivalenceResult pii, p34;
  try {
    report = invariants::compute_invariants(e, options.tower);
    cls = classify::classify(report);
    pii = classify::test_pii(e, report, options);
    p34 = classify::test_p34(e, report, options);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kInconclusive;
  }
  Verification vp = reverify(e, pii, cfg), vq = reverify(e, p34, cfg);
  int code = exit_code(cls, pii, p34, vp, vq);

  std::optional<std::string> i9_sign;
  if (report.I9) i9_sign = sign_on_domain(*report.I9, e.env, pol);

  if (cfg.json) {
    json j;
    json input{{"mode", mode_name(cfg.mode)}, {"expressions", cfg.inputs}};
    input["coefficients"] = json{{"P", text(e.P)}, {"Q", text(e.Q)}, {"R", text(e.R)}, {"S", text(e.S)}};
    j["input"] = input;
    json params = json::array();
    for (const auto& [id, c] : env.parameters())
      params.push_back(json{{"name", expr::SymbolTable::name(id)}, {"constraint", constraint_name(c)}});
    j["params"] = params;
    json inv;
    for (const auto& row : rows(report)) {
      inv[row.name] = json{{"value", row.value ? json(text(*row.value)) : json(nullptr)},
                           {"verdict", verdict_json(report.verdict(row.name))}};
    }
    inv["J"] = json{{"value", report.J ? json(report.J->to_string()) : json(nullptr)},
                    {"squared", report.J2 ? json(text(*report.J2)) : json(nullptr)},
                    {"i9_sign", i9_sign ? json(*i9_sign) : json(nullptr)},
                    {"constant", report.J2 ? json(expr::independent_of_xy(*report.J2)) : json(nullptr)}};
    j["invariants"] = inv;
    json c{{"tag", classify::to_string(cls.tag)},
           {"description", cls.describe()},
           {"case_1_4", cls.case_1_4()},
           {"branch", report.Omega ? json(invariants::to_string(report.branch)) : json(nullptr)},
           {"unknown_predicate", cls.unknown_predicate.empty() ? json(nullptr) : json(cls.unknown_predicate)}};
    if (report.branch_check) {
      const auto& b = *report.branch_check;
      c["branch_check"] = json{{"Omega", expr::to_string(b.omega.kind)},
                               {"N", expr::to_string(b.n.kind)},
                               {"M", expr::to_string(b.m.kind)},
                               {"gamma1", expr::to_string(b.gamma1.kind)},
                               {"gamma2", expr::to_string(b.gamma2.kind)}};
    } else {
      c["branch_check"] = nullptr;
    }
    c["notes"] = report.notes;
    j["classification"] = c;
    j["pii"] = result_json(pii, true, vp);
    j["p34"] = result_json(p34, false, vq);
    j["seed"] = cfg.seed;
    j["exit_code"] = code;
    out << j.dump(2) << "\n";
    return code;
  }

  out << "equation  " << e.to_string() << "\n";
  if (!env.parameters().empty()) {
    out << "params   ";
    for (const auto& [id, c] : env.parameters()) out << " " << expr::SymbolTable::name(id) << " (" << constraint_name(c) << ")";
    out << "\n";
  }
  out << "seed      " << cfg.seed << "\n\ninvariants\n";
  for (const auto& row : rows(report)) {
    if (!row.value) continue;
    out << "  " << row.name << std::string(6 - std::string(row.name).size(), ' ') << "= " << text(*row.value);
    if (const auto* v = report.verdict(row.name)) out << "  [" << expr::to_string(v->kind) << "]";
    out << "\n";
  }
  if (report.J) {
    out << "  J     = " << report.J->to_string();
    if (i9_sign) out << "  (I9 " << *i9_sign << ")";
    out << "\n";
  }
  out << "\nclassification  " << cls.describe() << "\n";
  if (report.verdict("Omega")) out << "branch          " << invariants::to_string(report.branch) << "\n";
  if (report.branch_check) {
    const auto& b = *report.branch_check;
    out << "branch check    Omega " << expr::to_string(b.omega.kind) << ", N " << expr::to_string(b.n.kind) << ", M "
        << expr::to_string(b.m.kind) << ", gamma " << expr::to_string(b.gamma1.kind) << "/"
        << expr::to_string(b.gamma2.kind) << " (differences)\n";
  }
  for (const auto& n : report.notes) out << "note: " << n << "\n";
  out << "\n";
  write_result_text(out, "PII", pii, true, vp);
  write_result_text(out, "P34", p34, false, vq);
  out << "\nexit " << code << "\n";
  return code;
}

}  // namespace painleve::cli
