#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "painleve/expr/polynomial.hpp"

namespace painleve::expr {

/// Raised when a value leaves the class of rational functions in x^(1/k), y^(1/k) and parameters,
/// e.g. a fractional power of a non-monomial base.
class NotRepresentable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Branch choice for fractional powers in complex evaluation. RealOdd takes the real root of a
/// negative real base when the root index is odd and the principal branch otherwise.
enum class RootBranch : std::uint8_t { Principal, RealOdd };

/// z^e under the given branch; NaN for 0 to a negative power.
std::complex<double> branch_pow(std::complex<double> z, const mpq_class& e, RootBranch branch);

/// Canonical normal form: a reduced ratio of integer polynomials.
///
/// Polynomial variable kX stands for x^(1/root(kX)) and kY for y^(1/root(kY)); every other
/// symbol carries integer exponents only. The representation is unique: numerator and
/// denominator are coprime, their integer contents are coprime, the denominator has a positive
/// leading coefficient and each root index is the smallest that works. Structural equality is
/// therefore mathematical equality.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const mpq_class& c);  // NOLINT(google-explicit-constructor)
  RationalFunction(long c) : RationalFunction(mpq_class(c)) {}  // NOLINT

  static RationalFunction symbol(SymbolId v);
  /// v^e; fractional e only for x and y.
  static RationalFunction symbol_power(SymbolId v, const mpq_class& e);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  unsigned root(SymbolId v) const { return is_base_variable(v) ? roots_[v] : 1; }

  bool is_zero() const { return num_.is_zero(); }
  /// True when no symbol occurs.
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  std::optional<mpq_class> constant_value() const;
  bool depends_on(SymbolId v) const { return num_.depends_on(v) || den_.depends_on(v); }
  std::uint32_t support() const { return num_.support() | den_.support(); }
  std::size_t term_count() const { return num_.size() + den_.size(); }

  bool operator==(const RationalFunction& o) const;

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction pow(long n) const;
  /// Fractional powers are defined only for monomial values whose result stays in the class.
  RationalFunction pow(const mpq_class& e) const;
  RationalFunction inverse() const;

  /// Partial derivative with respect to an actual symbol (x means x, not x^(1/k)).
  RationalFunction diff(SymbolId v) const;
  /// d^(i+j) / dx^i dy^j.
  RationalFunction diff(unsigned i, unsigned j) const;

  /// Simultaneous substitution of symbols by values. Images of x and y are images of the
  /// symbols themselves; their roots are taken when needed.
  RationalFunction substitute(const std::map<SymbolId, RationalFunction>& images) const;

  /// Exact evaluation at a point given by values of the polynomial variables. Values of kX and
  /// kY are values of x^(1/root) and y^(1/root). Returns nullopt at a pole.
  std::optional<mpq_class> evaluate_roots(std::span<const mpq_class, kMaxSymbols> var_values) const;

  /// Evaluation at symbol values (x, y given directly). The root of x or y is taken in double
  /// precision and the rest is exact. nullopt at a pole or when a root of a negative base is needed.
  std::optional<double> evaluate(std::span<const double, kMaxSymbols> values) const;

  /// Complex evaluation; roots of x and y follow the branch choice. nullopt at a pole.
  std::optional<std::complex<double>> evaluate(std::span<const std::complex<double>, kMaxSymbols> values,
                                               RootBranch branch = RootBranch::Principal) const;

  /// Splits by powers of s: result[k] is the coefficient of s^k. Requires a denominator free of s
  /// and s not a base variable.
  std::vector<RationalFunction> coefficients_in(SymbolId s) const;

  std::string debug_string() const;

 private:
  RationalFunction(Polynomial num, Polynomial den, std::array<unsigned, 2> roots);

  void canonicalize();
  void normalize_content_and_roots();
  static void align(RationalFunction& a, RationalFunction& b);
  void lift_roots(std::array<unsigned, 2> target);

  Polynomial num_;
  Polynomial den_;
  std::array<unsigned, 2> roots_{1, 1};
};

}  // namespace painleve::expr
