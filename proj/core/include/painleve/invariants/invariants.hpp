#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "painleve/expr/expr.hpp"
#include "painleve/expr/zero_test.hpp"
#include "painleve/ode/ode.hpp"

namespace painleve::invariants {

using expr::Expr;
using expr::RationalFunction;
using expr::ZeroVerdict;

/// Which nonvanishing component the explicit formulas divide by.
enum class Branch : std::uint8_t { A, B };

/// Branch-B formula for gamma^1 with the factor (A N - B_{0.1}) or (A S - B_{0.1}). Only the
/// symmetric variant agrees with branch A on equations where both apply.
enum class GammaVariant : std::uint8_t { Printed, Symmetric };

const char* to_string(Branch b);

class CaseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The pair of commuting derivations the coefficients are differentiated with.
struct Frame {
  std::function<RationalFunction(const RationalFunction&)> dx;
  std::function<RationalFunction(const RationalFunction&)> dy;

  RationalFunction d(const RationalFunction& f, unsigned i, unsigned j) const;

  /// Ordinary partial derivatives.
  static Frame standard();
  /// Derivatives along the new coordinates of a point transformation, written in the old ones.
  static Frame pulled_back(const ode::PointTransform& t);
};

struct Coefficients {
  RationalFunction P, Q, R, S;

  static Coefficients of(const ode::OdeCubic& e) { return {e.P, e.Q, e.R, e.S}; }
};

struct PseudoField {
  std::vector<RationalFunction> components;
  int weight = 0;
};

RationalFunction coefficient_a(const Coefficients& c, const Frame& f);
RationalFunction coefficient_b(const Coefficients& c, const Frame& f);
/// Components (B, -A), weight 2.
PseudoField alpha(const Coefficients& c, const Frame& f);
/// Components (G, H), weight 4.
PseudoField beta(const Coefficients& c, const Frame& f, const RationalFunction& A, const RationalFunction& B);
/// (A G + B H) / 3.
RationalFunction f5(const RationalFunction& A, const RationalFunction& B, const RationalFunction& G,
                    const RationalFunction& H);

RationalFunction omega(const Coefficients& c, const Frame& f, const RationalFunction& A, const RationalFunction& B,
                       Branch branch);
RationalFunction n_pseudo(const RationalFunction& A, const RationalFunction& B, const RationalFunction& G,
                          const RationalFunction& H, Branch branch);
RationalFunction m_pseudo(const Coefficients& c, const Frame& f, const RationalFunction& A,
                          const RationalFunction& B, const RationalFunction& N, Branch branch);
/// Components (gamma^1, gamma^2), weight 3.
PseudoField gamma(const Coefficients& c, const Frame& f, const RationalFunction& A, const RationalFunction& B,
                  const RationalFunction& N, const RationalFunction& Omega, Branch branch,
                  GammaVariant variant = GammaVariant::Symmetric);
RationalFunction gamma_hat(const Coefficients& c, const Frame& f, const PseudoField& g, const RationalFunction& M);

struct BasicInvariants {
  RationalFunction I1, I2, I3;
};
BasicInvariants basic_invariants(const Coefficients& c, const Frame& f, const RationalFunction& M,
                                 const RationalFunction& N, const RationalFunction& Omega, const PseudoField& g);

struct DerivedInvariants {
  RationalFunction I4, I6, I7, I9;
};
DerivedInvariants derived_invariants(const Frame& f, const RationalFunction& A, const RationalFunction& B,
                                     const PseudoField& g, const RationalFunction& N, const RationalFunction& I1,
                                     const RationalFunction& I3);

/// J^2 = (4 + 10 I6 - 60 I3)^2 / (2500 I9), exact.
RationalFunction j_squared(const RationalFunction& I3, const RationalFunction& I6, const RationalFunction& I9);
/// J = (4 + 10 I6 - 60 I3) / (50 I9^(1/2)) with the principal square root.
Expr j_invariant(const RationalFunction& I3, const RationalFunction& I6, const RationalFunction& I9);
RationalFunction k_invariant(const RationalFunction& I1, const RationalFunction& I4);

struct RecoveredCoordinates {
  RationalFunction y;      // y~ as a function of the invariants
  RationalFunction u;      // x~ = u * y~^(-5/3)
  Expr x;
  RationalFunction beta2;
};
RecoveredCoordinates recover_coordinates(const RationalFunction& I1, const RationalFunction& I3,
                                         const RationalFunction& I4, const RationalFunction& I9);

struct TowerOptions {
  expr::SamplingPolicy policy;
  GammaVariant gamma_variant = GammaVariant::Symmetric;
  /// When both A and B are nonzero, also evaluate branch B and compare.
  bool cross_check = true;
};

struct BranchAgreement {
  ZeroVerdict omega, n, m, gamma1, gamma2;
  bool agree() const { return omega.zero() && n.zero() && m.zero(); }
};

/// Everything the tower produced, in order; fields stay empty past the point where the case
/// analysis stopped.
struct InvariantReport {
  Branch branch = Branch::A;
  RationalFunction A, B, G, H, F5;
  std::optional<RationalFunction> Omega, N, M, gamma1, gamma2, Gamma, I1, I2, I3, I4, I6, I7, I9, J2, K;
  std::optional<Expr> J;
  std::map<std::string, ZeroVerdict> verdicts;
  std::optional<BranchAgreement> branch_check;
  bool branch_b_unverified = false;  // gamma came from a branch-B formula
  std::vector<std::string> notes;

  const ZeroVerdict* verdict(const std::string& name) const;
};

InvariantReport compute_invariants(const Coefficients& c, const Frame& f, const expr::ParamEnv& env,
                                   const TowerOptions& options = {});
InvariantReport compute_invariants(const ode::OdeCubic& e, const TowerOptions& options = {});

BranchAgreement compare_branches(const Coefficients& c, const Frame& f, const expr::ParamEnv& env,
                                 const TowerOptions& options = {});

}  // namespace painleve::invariants
