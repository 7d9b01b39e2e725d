#pragma once

#include <string>

#include "painleve/expr/expr.hpp"
#include "painleve/ode/ode.hpp"

namespace painleve::fixtures {

inline expr::ParamEnv env_with(std::initializer_list<const char*> specs) {
  expr::ParamEnv env;
  for (const char* s : specs) env.declare(s);
  return env;
}

/// y'' = y'^2/(2y) - 2y^2 - xy - beta^2/(2y) with the given beta^2 (symbolic b^2 by default).
inline ode::OdeCubic shifted(const std::string& beta2 = "b^2") {
  expr::ParamEnv env = beta2 == "b^2" ? env_with({"b!=0"}) : expr::ParamEnv{};
  std::string rhs = "p^2/(2*y) - 2*y^2 - x*y";
  if (beta2 != "0") rhs += " - (" + beta2 + ")/(2*y)";
  return ode::from_rhs(expr::parse(rhs), env, "shifted P34");
}

/// y'' = 5y'^2/(6y) - beta^2 y^(1/3) (6y + 3x y^(2/3) + 3/2).
inline ode::OdeCubic radical(const std::string& beta2 = "b^2") {
  expr::ParamEnv env = beta2 == "b^2" ? env_with({"b!=0"}) : expr::ParamEnv{};
  std::string rhs = "5*p^2/(6*y) - (" + beta2 + ")*y^(1/3)*(6*y + 3*x*y^(2/3) + 3/2)";
  return ode::from_rhs(expr::parse(rhs), env, "radical P34");
}

/// y'' = y'^2/(2y) + 4a^2 y^2 - xy - 1/(2y).
inline ode::OdeCubic ince(const std::string& a) {
  return ode::from_rhs(expr::parse("p^2/(2*y) + 4*(" + a + ")^2*y^2 - x*y - 1/(2*y)"), expr::ParamEnv{}, "Ince P34");
}

/// y'' = y'^2/(2y) - nu^2 (-2 k1 y^2 - (C x + K) y + k2/y) at nu = 2, k1 = 3, C = 7, K = 1.
inline ode::OdeCubic rogers_a(const std::string& k2) {
  std::string rhs = "p^2/(2*y) + 4*(6*y^2 + (7*x + 1)*y - (" + k2 + ")/y)";
  return ode::from_rhs(expr::parse(rhs), expr::ParamEnv{}, "Rogers 3a");
}

/// (y + (C x + K)/k1) y'' = y'^2/2 + C y'/k1 + 2 k1 nu^2 y^3 + 4 nu^2 (C x + K) y^2 + 2 nu^2 (C x + K)^2 y/k1
/// at nu = k1 = C = 1, K = 0.
inline ode::OdeCubic rogers_b() {
  return ode::normalize_implicit(expr::parse("y + x"), expr::parse("p^2/2 + p + 2*y^3 + 4*x*y^2 + 2*x^2*y"),
                                 expr::ParamEnv{}, "Rogers 3b");
}

/// The fourth Painleve equation with parameters alpha, beta.
inline ode::OdeCubic painleve_four() {
  return ode::from_rhs(expr::parse("p^2/(2*y) + 3/2*y^3 + 4*x*y^2 + 2*(x^2 - alpha)*y - beta^3/(2*y)"),
                       env_with({"alpha", "beta"}), "PIV");
}

}  // namespace painleve::fixtures
