#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "painleve/expr/expr.hpp"
#include "painleve/expr/param_env.hpp"
#include "painleve/expr/rational_function.hpp"
#include "painleve/expr/zero_test.hpp"

namespace painleve::ode {

using expr::Expr;
using expr::ParamEnv;
using expr::RationalFunction;

class NotCubic : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateTransform : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// y'' = P + 3 Q y' + 3 R y'^2 + S y'^3 with coefficients in normal form.
struct OdeCubic {
  RationalFunction P, Q, R, S;
  ParamEnv env;
  std::string label;

  std::array<RationalFunction, 4> coefficients() const { return {P, Q, R, S}; }
  /// P + 3 Q p + 3 R p^2 + S p^3 with the formal derivative symbol p.
  RationalFunction rhs() const;
  std::string to_string() const;
};

/// Splits an expression cubic in p = y'. The env is checked against every symbol but p.
OdeCubic from_rhs(const Expr& rhs, const ParamEnv& env, std::string label = {});
OdeCubic from_coefficients(const Expr& P, const Expr& Q, const Expr& R, const Expr& S, const ParamEnv& env,
                           std::string label = {});
/// lead * y'' = rest.
OdeCubic normalize_implicit(const Expr& lead, const Expr& rest, const ParamEnv& env, std::string label = {});

/// x~ = xt(x, y), y~ = yt(x, y). The optional inverse gives old x, y in terms of the new
/// coordinates, written again in the symbols x and y.
struct PointTransform {
  Expr xt;
  Expr yt;
  std::optional<std::pair<Expr, Expr>> inverse;

  static PointTransform identity();
};

/// x~_x y~_y - x~_y y~_x.
Expr jacobian(const PointTransform& t);

/// Throws DegenerateTransform when the Jacobian is identically zero.
void require_nondegenerate(const PointTransform& t, const ParamEnv& env, const expr::SamplingPolicy& policy = {});

/// Coefficients P~, Q~, R~, S~ of the transformed equation as functions of the old point (x, y).
std::array<RationalFunction, 4> pulled_back_coefficients(const OdeCubic& e, const PointTransform& t,
                                                         const expr::SamplingPolicy& policy = {});

/// The equation satisfied by y~(x~) when y(x) solves e. Requires t.inverse.
OdeCubic apply_transform(const OdeCubic& e, const PointTransform& t, const expr::SamplingPolicy& policy = {});

/// outer after inner; the inverse is composed when both are present.
PointTransform compose(const PointTransform& outer, const PointTransform& inner);

}  // namespace painleve::ode
