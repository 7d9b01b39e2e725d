#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "painleve/expr/symbol.hpp"

namespace painleve::expr {

/// Exponent vector indexed by SymbolId. Ordered lexicographically with symbol 0 most significant.
struct Monomial {
  std::array<std::uint16_t, kMaxSymbols> exp{};

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

  bool is_one() const;
  unsigned total_degree() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  /// Requires divides(other) in the sense `*this` | other; returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  static Monomial min(const Monomial& a, const Monomial& b);
};

struct Term {
  Monomial mono;
  mpz_class coeff;
};

/// Sparse multivariate polynomial with integer coefficients.
///
/// Terms are kept sorted by strictly decreasing monomial and never hold a zero
/// coefficient, so structural equality is polynomial equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(const mpz_class& c);
  explicit Polynomial(long c) : Polynomial(mpz_class(c)) {}

  static Polynomial variable(SymbolId v, unsigned power = 1);
  static Polynomial monomial(const Monomial& m, const mpz_class& c);
  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  mpz_class constant_value() const;

  bool operator==(const Polynomial& o) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const mpz_class& c) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned n) const;
  Polynomial mul_monomial(const Monomial& m) const;
  /// Divides every coefficient by c exactly (caller guarantees divisibility).
  Polynomial div_exact(const mpz_class& c) const;
  /// Divides by m; caller guarantees m divides every term.
  Polynomial div_monomial(const Monomial& m) const;

  /// Returns the quotient when `divisor` divides *this exactly, otherwise nullopt.
  std::optional<Polynomial> divide(const Polynomial& divisor) const;

  Polynomial derivative(SymbolId v) const;
  unsigned degree(SymbolId v) const;
  /// Bitmask of symbols that occur with positive exponent.
  std::uint32_t support() const;
  bool depends_on(SymbolId v) const { return (support() >> v) & 1u; }

  /// Substitutes an integer for v.
  Polynomial evaluate(SymbolId v, const mpz_class& value) const;
  /// Coefficients with respect to v: result[k] is the coefficient of v^k.
  std::vector<Polynomial> coefficients(SymbolId v) const;
  static Polynomial from_coefficients(SymbolId v, std::span<const Polynomial> coeffs);

  /// Replaces exponents e_v by e_v * factor.
  Polynomial inflate(SymbolId v, unsigned factor) const;
  /// Replaces exponents e_v by e_v / factor (all must be divisible).
  Polynomial deflate(SymbolId v, unsigned factor) const;
  /// gcd of all exponents of v (0 when v is absent).
  unsigned exponent_gcd(SymbolId v) const;

  /// gcd of coefficients, sign chosen so that content() * primitive() == *this
  /// and primitive() has a positive leading coefficient.
  mpz_class content() const;
  Polynomial primitive() const;
  mpz_class max_norm() const;
  Monomial monomial_gcd() const;

  std::string debug_string() const;

 private:
  std::vector<Term> terms_;
};

/// Greatest common divisor with positive leading coefficient (0 iff both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// gcd via primitive pseudo-remainder sequences only; exposed for testing.
Polynomial gcd_prs(const Polynomial& a, const Polynomial& b);

/// Heuristic integer-evaluation gcd; nullopt when the heuristic gives up.
std::optional<Polynomial> gcd_heuristic(const Polynomial& a, const Polynomial& b);

}  // namespace painleve::expr
