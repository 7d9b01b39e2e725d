#pragma once

#include <optional>
#include <string>
#include <vector>

#include "painleve/invariants/invariants.hpp"
#include "painleve/oracle/oracle.hpp"

namespace painleve::classify {

using expr::Expr;
using expr::RationalFunction;

enum class CaseTag : std::uint8_t { MaximalDegeneration, GeneralCase, SecondCase, FirstCase, Inconclusive };
const char* to_string(CaseTag t);

struct Classification {
  CaseTag tag = CaseTag::Inconclusive;
  // FirstCase flags.
  bool omega_zero = false;
  bool i2_zero = false;
  bool i7_zero = false;
  std::string unknown_predicate;  // Inconclusive only

  bool case_1_4() const { return tag == CaseTag::FirstCase && i2_zero && i7_zero; }
  std::string describe() const;
};

/// Decision tree over the verdicts recorded in the report.
Classification classify(const invariants::InvariantReport& r);
Classification classify(const ode::OdeCubic& e, const invariants::TowerOptions& options = {});

enum class Outcome : std::uint8_t { EquivalentPII, EquivalentP34, NotEquivalent, OutOfScope, Inconclusive };
const char* to_string(Outcome o);

struct IndependentPair {
  std::string first, second;
};

struct EquivalenceResult {
  Outcome outcome = Outcome::Inconclusive;
  std::string reason;                      // failed condition, case tag or unknown predicate
  std::vector<Expr> a_candidates;          // PII: +J and -J
  std::optional<Expr> a_realized;          // PII: the value the emitted transform reaches (sign of J)
  std::optional<Expr> beta_squared;        // P34
  std::optional<ode::PointTransform> transform;
  std::optional<oracle::ResidualReport> residual;
  /// What the transform was checked against, and on which root branch.
  std::optional<oracle::TargetEquation> target;
  expr::RootBranch branch = expr::RootBranch::RealOdd;
  std::vector<IndependentPair> independent_pairs;  // PII condition on I3, I6, I9
  std::vector<std::string> notes;

  bool equivalent() const { return outcome == Outcome::EquivalentPII || outcome == Outcome::EquivalentP34; }
};

struct ClassifyOptions {
  invariants::TowerOptions tower;
  oracle::OracleOptions oracle;
};

/// Jacobian determinant d(f, g)/d(x, y) is nonzero; nullopt when the verdict is Unknown.
std::optional<bool> functional_independence(const RationalFunction& f, const RationalFunction& g,
                                            const expr::ParamEnv& env, const expr::SamplingPolicy& policy = {});
std::optional<bool> functional_independence(const Expr& f, const Expr& g, const expr::ParamEnv& env,
                                            const expr::SamplingPolicy& policy = {});

/// Equivalence to y'' = 2 y^3 + x y + a.
EquivalenceResult test_pii(const ode::OdeCubic& e, const invariants::InvariantReport& r,
                           const ClassifyOptions& options = {});
EquivalenceResult test_pii(const ode::OdeCubic& e, const ClassifyOptions& options = {});

/// Equivalence to y'' = 5 y'^2/(6 y) - beta^2 y^(1/3) (6 y + 3 x y^(2/3) + 3/2).
EquivalenceResult test_p34(const ode::OdeCubic& e, const invariants::InvariantReport& r,
                           const ClassifyOptions& options = {});
EquivalenceResult test_p34(const ode::OdeCubic& e, const ClassifyOptions& options = {});

/// The target equations, with the parameter given as an expression.
oracle::TargetEquation painleve_two(const Expr& a);
oracle::TargetEquation painleve_34(const Expr& beta_squared);

}  // namespace painleve::classify
