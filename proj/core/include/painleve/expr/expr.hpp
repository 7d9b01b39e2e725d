#pragma once

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "painleve/expr/rational_function.hpp"
#include "painleve/expr/symbol.hpp"

namespace painleve::expr {

/// Immutable symbolic expression tree. Copies share structure.
class Expr {
 public:
  enum class Kind : std::uint8_t { Constant, Symbol, Sum, Product, Power, Negation };

  Expr();  // the constant 0
  Expr(long c);  // NOLINT(google-explicit-constructor)
  Expr(const mpq_class& c);  // NOLINT(google-explicit-constructor)

  static Expr symbol(SymbolId id);
  static Expr symbol(std::string_view name) { return symbol(SymbolTable::intern(name)); }
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  static Expr power(Expr base, const mpq_class& exponent);
  static Expr negate(Expr inner);

  Kind kind() const;
  const mpq_class& value() const;        // Constant
  SymbolId symbol_id() const;            // Symbol
  std::span<const Expr> children() const;  // Sum, Product
  const Expr& base() const;              // Power, Negation (the operand)
  const mpq_class& exponent() const;     // Power

  bool is_constant(const mpq_class& c) const;
  bool structurally_equal(const Expr& o) const;
  std::string to_string() const;

  friend Expr operator+(const Expr& a, const Expr& b) { return sum({a, b}); }
  friend Expr operator-(const Expr& a, const Expr& b) { return sum({a, negate(b)}); }
  friend Expr operator*(const Expr& a, const Expr& b) { return product({a, b}); }
  friend Expr operator/(const Expr& a, const Expr& b) { return product({a, power(b, -1)}); }
  Expr operator-() const { return negate(*this); }

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the expression grammar:
///   expr := term (('+'|'-') term)* ; term := unary (('*'|'/') unary)* ;
///   unary := '-' unary | pow ; pow := atom ('^' exponent)? ;
///   atom := RATIONAL | IDENT | '(' expr ')' ; exponent := INTEGER | '(' INTEGER '/' INTEGER ')'.
Expr parse(std::string_view text);

/// Bitmask of symbols occurring in e.
std::uint32_t symbols_of(const Expr& e);

/// Tree differentiation with respect to a symbol.
Expr diff(const Expr& e, SymbolId v);
/// d^(i+j) e / dx^i dy^j.
Expr diff(const Expr& e, unsigned i, unsigned j);

/// Simultaneous substitution of symbols.
Expr subst(const Expr& e, const std::map<SymbolId, Expr>& bindings);

/// Exact conversion to the rational normal form. Throws NotRepresentable when e leaves the class.
RationalFunction to_rational_function(const Expr& e);
/// Canonical tree of a normal form, printed with the parser's grammar.
Expr to_expr(const RationalFunction& f);
/// normalize(e) = to_expr(to_rational_function(e)).
Expr normalize(const Expr& e);

/// Numeric values for every symbol, indexed by SymbolId.
struct Assignment {
  std::array<double, kMaxSymbols> values{};
  std::uint32_t assigned = 0;

  void set(SymbolId v, double value) {
    values[v] = value;
    assigned |= 1u << v;
  }
  bool has(SymbolId v) const { return (assigned >> v) & 1u; }
};

struct ComplexAssignment {
  std::array<std::complex<double>, kMaxSymbols> values{};
  std::uint32_t assigned = 0;

  void set(SymbolId v, std::complex<double> value) {
    values[v] = value;
    assigned |= 1u << v;
  }
  bool has(SymbolId v) const { return (assigned >> v) & 1u; }
};

enum class EvalStatus : std::uint8_t { Ok, Pole, DomainError };

struct EvalResult {
  EvalStatus status = EvalStatus::Ok;
  double value = 0.0;
  bool ok() const { return status == EvalStatus::Ok; }
};

struct ComplexEvalResult {
  EvalStatus status = EvalStatus::Ok;
  std::complex<double> value{};
  /// Magnitude of the expression with every sum replaced by a sum of moduli; used as the
  /// reference scale for relative zero tests.
  double scale = 0.0;
  bool ok() const { return status == EvalStatus::Ok; }
};

class UnassignedSymbol : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Real evaluation. A negative base under a fractional exponent is a domain error.
EvalResult eval(const Expr& e, const Assignment& a);
/// Complex evaluation; by default with principal branches z^r = exp(r Log z).
ComplexEvalResult eval_complex(const Expr& e, const ComplexAssignment& a, RootBranch branch = RootBranch::Principal);

}  // namespace painleve::expr
