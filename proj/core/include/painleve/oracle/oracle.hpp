#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <vector>

#include "painleve/expr/expr.hpp"
#include "painleve/expr/zero_test.hpp"
#include "painleve/invariants/invariants.hpp"
#include "painleve/ode/ode.hpp"

namespace painleve::oracle {

using expr::Expr;
using expr::SymbolId;

/// The equation a transformation is claimed to reach.
struct TargetEquation {
  /// P, Q, R, S in the new coordinates, written in the symbols x and y.
  std::array<Expr, 4> coefficients;
  /// Symbols of the target defined by expressions of the old point, e.g. a parameter computed from
  /// invariants. They are evaluated at the source sample point.
  std::map<SymbolId, Expr> bindings;

  static TargetEquation of(const ode::OdeCubic& e);
};

struct OracleOptions {
  unsigned samples = 20;
  unsigned min_samples = 10;
  unsigned max_redraws = 200;
  std::uint64_t seed = 0x0caeULL;
  double pass_tol = 1e-7;
  double warn_tol = 1e-4;
  double lo = 0.5;
  double hi = 3.0;
  expr::RootBranch branch = expr::RootBranch::RealOdd;
};

enum class Verdict : std::uint8_t { Pass, Warn, Fail, Insufficient };
const char* to_string(Verdict v);

struct ResidualReport {
  std::vector<std::array<double, 4>> residuals;  // per retained sample, per coefficient
  double max_residual = 0.0;
  unsigned samples_used = 0;
  unsigned poles_skipped = 0;
  Verdict verdict = Verdict::Insufficient;

  bool passed() const { return verdict == Verdict::Pass; }
};

/// Pushes second-order jets of src through t at sampled points, reads off the cubic that y~''
/// satisfies and compares it with dst at the image point. Disjoint from ode::apply_transform.
ResidualReport verify_transform(const ode::OdeCubic& src, const TargetEquation& dst, const ode::PointTransform& t,
                                const OracleOptions& options = {});
ResidualReport verify_transform(const ode::OdeCubic& src, const ode::OdeCubic& dst, const ode::PointTransform& t,
                                const OracleOptions& options = {});

/// Transformed coefficients at one point of the source, computed from jets.
struct JetSample {
  std::complex<double> x, y;                       // image point
  std::array<std::complex<double>, 4> coefficients;  // P~, Q~, R~, S~ there
};
std::optional<JetSample> transform_at(const ode::OdeCubic& src, const ode::PointTransform& t,
                                      const expr::Assignment& point, expr::RootBranch branch);

struct WeightLawReport {
  double max_residual = 0.0;
  unsigned samples_used = 0;
  unsigned poles_skipped = 0;
  bool holds = false;
  bool indeterminate = false;
};

/// Checks F = (det T)^m S F~ where S = d(x, y)/d(x~, y~) and T = S^-1 = d(x~, y~)/d(x, y).
/// Scalars (one component) scale by (det T)^m only. The field on the transformed equation is
/// given either in the new coordinates or, with pulled_back, already as a function of the old point.
WeightLawReport verify_weight_law(const invariants::PseudoField& field, const invariants::PseudoField& transformed,
                                  bool pulled_back, const ode::PointTransform& t, const expr::ParamEnv& env,
                                  const OracleOptions& options = {}, double tol = 1e-6);

}  // namespace painleve::oracle
