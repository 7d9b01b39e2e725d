#include "painleve/invariants/invariants.hpp"

namespace painleve::invariants {

using expr::kX;
using expr::kY;
using RF = RationalFunction;

namespace {

RF q(long n, long d = 1) { return RF(mpq_class(n, d)); }

}  // namespace

const char* to_string(Branch b) { return b == Branch::A ? "A" : "B"; }

RF Frame::d(const RF& f, unsigned i, unsigned j) const {
  RF r = f;
  for (unsigned a = 0; a < i; ++a) r = dx(r);
  for (unsigned b = 0; b < j; ++b) r = dy(r);
  return r;
}

Frame Frame::standard() {
  return {[](const RF& f) { return f.diff(kX); }, [](const RF& f) { return f.diff(kY); }};
}

Frame Frame::pulled_back(const ode::PointTransform& t) {
  RF X = expr::to_rational_function(t.xt), Y = expr::to_rational_function(t.yt);
  RF Xx = X.diff(kX), Xy = X.diff(kY), Yx = Y.diff(kX), Yy = Y.diff(kY);
  RF jac = Xx * Yy - Xy * Yx;
  if (jac.is_zero()) throw ode::DegenerateTransform("Jacobian of the point transformation vanishes identically");
  RF inv = jac.inverse();
  // d/dx~ = (Y_y d/dx - Y_x d/dy) / J,  d/dy~ = (X_x d/dy - X_y d/dx) / J.
  RF ax = Yy * inv, ay = -(Yx * inv), bx = -(Xy * inv), by = Xx * inv;
  return {[=](const RF& f) { return ax * f.diff(kX) + ay * f.diff(kY); },
          [=](const RF& f) { return bx * f.diff(kX) + by * f.diff(kY); }};
}

RF coefficient_a(const Coefficients& c, const Frame& f) {
  const auto& [P, Q, R, S] = c;
  return f.d(P, 0, 2) - q(2) * f.d(Q, 1, 1) + f.d(R, 2, 0) + q(2) * P * f.dx(S) + S * f.dx(P) -
         q(3) * P * f.dy(R) - q(3) * R * f.dy(P) - q(3) * Q * f.dx(R) + q(6) * Q * f.dy(Q);
}

RF coefficient_b(const Coefficients& c, const Frame& f) {
  const auto& [P, Q, R, S] = c;
  return f.d(S, 2, 0) - q(2) * f.d(R, 1, 1) + f.d(Q, 0, 2) - q(2) * S * f.dy(P) - P * f.dy(S) +
         q(3) * S * f.dx(Q) + q(3) * Q * f.dx(S) + q(3) * R * f.dy(Q) - q(6) * R * f.dx(R);
}

PseudoField alpha(const Coefficients& c, const Frame& f) {
  return {{coefficient_b(c, f), -coefficient_a(c, f)}, 2};
}

PseudoField beta(const Coefficients& c, const Frame& f, const RF& A, const RF& B) {
  const auto& [P, Q, R, S] = c;
  RF Ax = f.dx(A), Ay = f.dy(A), Bx = f.dx(B), By = f.dy(B);
  RF G = -(B * Bx) - q(3) * A * By + q(4) * B * Ay + q(3) * S * A * A - q(6) * R * B * A + q(3) * Q * B * B;
  RF H = -(A * Ay) - q(3) * B * Ax + q(4) * A * Bx - q(3) * P * B * B + q(6) * Q * A * B - q(3) * R * A * A;
  return {{G, H}, 4};
}

RF f5(const RF& A, const RF& B, const RF& G, const RF& H) { return (A * G + B * H) * q(1, 3); }

RF omega(const Coefficients& c, const Frame& f, const RF& A, const RF& B, Branch branch) {
  const auto& [P, Q, R, S] = c;
  if (branch == Branch::A) {
    if (A.is_zero()) throw CaseError("branch A needs A != 0");
    RF Ax = f.dx(A), Ay = f.dy(A), Bx = f.dx(B), By = f.dy(B);
    RF Axx = f.dx(Ax), Bxx = f.dx(Bx);
    RF iA = A.inverse(), iA2 = iA * iA, iA3 = iA2 * iA;
    return q(2) * B * Ax * (B * P + Ax) * iA3 - (q(2) * Bx + q(3) * B * Q) * Ax * iA2 +
           (Ay - q(2) * Bx) * B * P * iA2 - (B * Axx + B * B * f.dx(P)) * iA2 + Bxx * iA +
           (q(3) * Bx * Q + q(3) * B * f.dx(Q) - By * P - B * f.dy(P)) * iA + f.dy(Q) - q(2) * f.dx(R);
  }
  if (B.is_zero()) throw CaseError("branch B needs B != 0");
  RF Ax = f.dx(A), Ay = f.dy(A), Bx = f.dx(B), By = f.dy(B);
  RF Ayy = f.dy(Ay), Byy = f.dy(By);
  RF iB = B.inverse(), iB2 = iB * iB, iB3 = iB2 * iB;
  // Image of the branch-A formula under x <-> y, P <-> -S, Q <-> -R, A -> -B, B -> -A, Omega -> -Omega.
  return q(2) * A * By * (A * S - By) * iB3 + (q(2) * Ay - q(3) * A * R) * By * iB2 +
         (Bx - q(2) * Ay) * A * S * iB2 + (A * Byy - A * A * f.dy(S)) * iB2 - Ayy * iB +
         (q(3) * Ay * R + q(3) * A * f.dy(R) - Ax * S - A * f.dx(S)) * iB + f.dx(R) - q(2) * f.dy(Q);
}

RF n_pseudo(const RF& A, const RF& B, const RF& G, const RF& H, Branch branch) {
  if (branch == Branch::A) {
    if (A.is_zero()) throw CaseError("branch A needs A != 0");
    return -(H / (q(3) * A));
  }
  if (B.is_zero()) throw CaseError("branch B needs B != 0");
  return G / (q(3) * B);
}

RF m_pseudo(const Coefficients& c, const Frame& f, const RF& A, const RF& B, const RF& N, Branch branch) {
  const auto& [P, Q, R, S] = c;
  RF Ax = f.dx(A), Ay = f.dy(A), Bx = f.dx(B), By = f.dy(B), Nx = f.dx(N), Ny = f.dy(N);
  if (branch == Branch::A) {
    if (A.is_zero()) throw CaseError("branch A needs A != 0");
    return -(q(12, 5) * B * N * (B * P + Ax) / A) + q(24, 5) * B * N * Q + q(6, 5) * N * Bx + q(6, 5) * N * Ay -
           A * Ny + B * Nx - q(12, 5) * A * N * R;
  }
  if (B.is_zero()) throw CaseError("branch B needs B != 0");
  return -(q(12, 5) * A * N * (A * S - By) / B) + q(24, 5) * A * N * R - q(6, 5) * N * Ay - q(6, 5) * N * Bx +
         B * Nx - A * Ny - q(12, 5) * B * N * Q;
}

PseudoField gamma(const Coefficients& c, const Frame& f, const RF& A, const RF& B, const RF& N, const RF& Omega,
                  Branch branch, GammaVariant variant) {
  const auto& [P, Q, R, S] = c;
  RF Ax = f.dx(A), Ay = f.dy(A), Bx = f.dx(B), By = f.dy(B), Nx = f.dx(N), Ny = f.dy(N);
  if (branch == Branch::A) {
    if (A.is_zero()) throw CaseError("branch A needs A != 0");
    RF iA = A.inverse();
    RF g1 = -(q(6, 5) * B * N * (B * P + Ax) * iA * iA) + q(18, 5) * N * B * Q * iA +
            q(6, 5) * N * (Bx + Ay) * iA - Ny - q(12, 5) * N * R - q(2) * Omega * B;
    RF g2 = -(q(6, 5) * N * (B * P + Ax) * iA) + Nx + q(6, 5) * N * Q + q(2) * Omega * A;
    return {{g1, g2}, 3};
  }
  if (B.is_zero()) throw CaseError("branch B needs B != 0");
  RF iB = B.inverse();
  RF factor = variant == GammaVariant::Printed ? A * N - By : A * S - By;
  RF g1 = -(q(6, 5) * N * factor * iB) - Ny + q(6, 5) * N * R - q(2) * Omega * B;
  RF g2 = -(q(6, 5) * A * N * (A * S - By) * iB * iB) + q(18, 5) * N * A * R * iB -
          q(6, 5) * N * (Ay + Bx) * iB + Nx - q(12, 5) * N * Q + q(2) * Omega * A;
  return {{g1, g2}, 3};
}

RF gamma_hat(const Coefficients& c, const Frame& f, const PseudoField& g, const RF& M) {
  const auto& [P, Q, R, S] = c;
  const RF& g1 = g.components.at(0);
  const RF& g2 = g.components.at(1);
  if (M.is_zero()) throw CaseError("M vanishes");
  RF num = g1 * g2 * (f.dx(g1) - f.dy(g2)) + g2 * g2 * f.dy(g1) - g1 * g1 * f.dx(g2) + P * g1 * g1 * g1 +
           q(3) * Q * g1 * g1 * g2 + q(3) * R * g1 * g2 * g2 + S * g2 * g2 * g2;
  return num / M;
}

BasicInvariants basic_invariants(const Coefficients& c, const Frame& f, const RF& M, const RF& N, const RF& Omega,
                                 const PseudoField& g) {
  if (N.is_zero()) throw CaseError("N vanishes");
  if (M.is_zero()) throw CaseError("M vanishes");
  return {M / (N * N), Omega * Omega / N, gamma_hat(c, f, g, M) / M};
}

DerivedInvariants derived_invariants(const Frame& f, const RF& A, const RF& B, const PseudoField& g, const RF& N,
                                     const RF& I1, const RF& I3) {
  if (N.is_zero()) throw CaseError("N vanishes");
  const RF& g1 = g.components.at(0);
  const RF& g2 = g.components.at(1);
  RF iN = N.inverse(), iN3 = iN * iN * iN;
  RF I1x = f.dx(I1), I1y = f.dy(I1), I3x = f.dx(I3), I3y = f.dy(I3);
  RF d1 = g1 * I1x + g2 * I1y, d3 = g1 * I3x + g2 * I3y;
  return {(B * I1x - A * I1y) * iN, (B * I3x - A * I3y) * iN, d1 * d1 * iN3, d3 * d3 * iN3};
}

RF j_squared(const RF& I3, const RF& I6, const RF& I9) {
  if (I9.is_zero()) throw CaseError("I9 vanishes");
  RF num = q(4) + q(10) * I6 - q(60) * I3;
  return num * num / (q(2500) * I9);
}

Expr j_invariant(const RF& I3, const RF& I6, const RF& I9) {
  if (I9.is_zero()) throw CaseError("I9 vanishes");
  Expr num = expr::to_expr(q(4) + q(10) * I6 - q(60) * I3);
  return num / (Expr(50) * Expr::power(expr::to_expr(I9), mpq_class(1, 2)));
}

RF k_invariant(const RF& I1, const RF& I4) {
  RF I1_2 = I1 * I1, I1_3 = I1_2 * I1, I1_4 = I1_3 * I1;
  return q(500) * I1_4 - q(7275) * I1_3 + q(500) * I4 * I1_2 + q(32940) * I1_2 - q(5475) * I4 * I1 - q(47628) * I1 +
         q(125) * I4 * I4 + q(13230) * I4;
}

RecoveredCoordinates recover_coordinates(const RF& I1, const RF& I3, const RF& I4, const RF& I9) {
  RF t1 = q(5) * I1 - q(18);
  RF num = (q(3) + q(20) * I1) * I4 + q(3) * I1 * t1 * (q(5) * I1 - q(43));
  RF den = q(125) * (q(10) * I1 - q(111)) * I4 + q(3) * t1 * (q(225) * I1 * I1 - q(5245) * I1 + q(27216));
  if (den.is_zero()) throw CaseError("denominator of the recovered y vanishes");
  RF y = q(125, 2) * num / den;
  if (y.is_zero()) throw CaseError("recovered y vanishes");

  RF y2 = y * y, y3 = y2 * y;
  RF xden = q(2) * (q(2) * y - q(35));
  if (xden.is_zero()) throw CaseError("denominator of the recovered x vanishes");
  RF u = ((q(120) * I3 - q(8)) * y3 + (q(138) + q(180) * I3) * y2 + (q(90) * I3 + q(35)) * y + q(15) * I3) / xden;
  Expr x = expr::to_expr(u) * Expr::power(expr::to_expr(y), mpq_class(-5, 3));

  RF bden = I9 * (q(2) * y + q(1)).pow(8) * (q(2) * y - q(5)).pow(3);
  if (bden.is_zero()) throw CaseError("denominator of the recovered beta^2 vanishes");
  RF beta2 = q(-64, 625) * y3 * y3 * (q(2) * y - q(35)).pow(4) / bden;
  return {y, u, x, beta2};
}

const ZeroVerdict* InvariantReport::verdict(const std::string& name) const {
  auto it = verdicts.find(name);
  return it == verdicts.end() ? nullptr : &it->second;
}

BranchAgreement compare_branches(const Coefficients& c, const Frame& f, const expr::ParamEnv& env,
                                 const TowerOptions& options) {
  RF A = coefficient_a(c, f), B = coefficient_b(c, f);
  auto be = beta(c, f, A, B);
  const RF &G = be.components[0], &H = be.components[1];
  RF oa = omega(c, f, A, B, Branch::A), ob = omega(c, f, A, B, Branch::B);
  RF na = n_pseudo(A, B, G, H, Branch::A), nb = n_pseudo(A, B, G, H, Branch::B);
  RF ma = m_pseudo(c, f, A, B, na, Branch::A), mb = m_pseudo(c, f, A, B, nb, Branch::B);
  BranchAgreement r;
  r.omega = expr::is_zero(oa - ob, env, options.policy);
  r.n = expr::is_zero(na - nb, env, options.policy);
  r.m = expr::is_zero(ma - mb, env, options.policy);
  auto ga = gamma(c, f, A, B, na, oa, Branch::A);
  auto gb = gamma(c, f, A, B, na, oa, Branch::B, options.gamma_variant);
  r.gamma1 = expr::is_zero(ga.components[0] - gb.components[0], env, options.policy);
  r.gamma2 = expr::is_zero(ga.components[1] - gb.components[1], env, options.policy);
  return r;
}

InvariantReport compute_invariants(const Coefficients& c, const Frame& f, const expr::ParamEnv& env,
                                   const TowerOptions& options) {
  InvariantReport r;
  const auto& pol = options.policy;
  auto check = [&](const std::string& name, const RF& value) -> const ZeroVerdict& {
    return r.verdicts[name] = expr::is_zero(value, env, pol);
  };

  r.A = coefficient_a(c, f);
  r.B = coefficient_b(c, f);
  auto be = beta(c, f, r.A, r.B);
  r.G = be.components[0];
  r.H = be.components[1];
  r.F5 = f5(r.A, r.B, r.G, r.H);
  const auto& va = check("A", r.A);
  const auto& vb = check("B", r.B);
  const auto& vf = check("F5", r.F5);
  if (va.kind == ZeroVerdict::Kind::Unknown || vb.kind == ZeroVerdict::Kind::Unknown) return r;
  if (va.zero() && vb.zero()) return r;
  if (!vf.zero()) return r;

  r.branch = va.nonzero() ? Branch::A : Branch::B;
  r.Omega = omega(c, f, r.A, r.B, r.branch);
  r.N = n_pseudo(r.A, r.B, r.G, r.H, r.branch);
  r.M = m_pseudo(c, f, r.A, r.B, *r.N, r.branch);
  check("Omega", *r.Omega);
  const auto& vn = check("N", *r.N);
  const auto& vm = check("M", *r.M);
  if (va.nonzero() && vb.nonzero() && options.cross_check) {
    r.branch_check = compare_branches(c, f, env, options);
    if (!r.branch_check->agree()) r.notes.push_back("branch A and branch B formulas disagree");
  }
  if (!vm.nonzero()) return r;
  if (!vn.nonzero()) {
    r.notes.push_back(vn.zero() ? "N vanishes; I1 is undefined" : "verdict on N is unknown");
    return r;
  }

  auto g = gamma(c, f, r.A, r.B, *r.N, *r.Omega, r.branch, options.gamma_variant);
  r.branch_b_unverified = r.branch == Branch::B;
  if (r.branch_b_unverified) r.notes.push_back(options.gamma_variant == GammaVariant::Symmetric
                                          ? "gamma computed from the branch-B formula, symmetric variant"
                                          : "gamma computed from the branch-B formula, printed variant");
  r.gamma1 = g.components[0];
  r.gamma2 = g.components[1];
  r.Gamma = gamma_hat(c, f, g, *r.M);
  auto basic = basic_invariants(c, f, *r.M, *r.N, *r.Omega, g);
  r.I1 = basic.I1;
  r.I2 = basic.I2;
  r.I3 = basic.I3;
  check("I2", *r.I2);
  auto derived = derived_invariants(f, r.A, r.B, g, *r.N, *r.I1, *r.I3);
  r.I4 = derived.I4;
  r.I6 = derived.I6;
  r.I7 = derived.I7;
  r.I9 = derived.I9;
  check("I7", *r.I7);
  const auto& v9 = check("I9", *r.I9);
  r.K = k_invariant(*r.I1, *r.I4);
  check("K", *r.K);
  if (!r.I9->is_zero() && !v9.zero()) {
    r.J2 = j_squared(*r.I3, *r.I6, *r.I9);
    r.J = j_invariant(*r.I3, *r.I6, *r.I9);
  }
  return r;
}

InvariantReport compute_invariants(const ode::OdeCubic& e, const TowerOptions& options) {
  return compute_invariants(Coefficients::of(e), Frame::standard(), e.env, options);
}

}  // namespace painleve::invariants
