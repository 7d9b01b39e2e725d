#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "painleve/expr/symbol.hpp"

namespace painleve::expr {

enum class Constraint : std::uint8_t { Free, NonZero, Positive };

class UndeclaredSymbol : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Declared parameters and the side conditions their sampled values must satisfy.
class ParamEnv {
 public:
  void declare(SymbolId id, Constraint c);
  void declare(std::string_view name, Constraint c) { declare(SymbolTable::intern(name), c); }

  /// Accepts "b", "b!=0" or "b>0".
  void declare(std::string_view spec);

  std::optional<Constraint> constraint(SymbolId id) const;
  bool declared(SymbolId id) const { return constraints_.count(id) != 0; }
  const std::map<SymbolId, Constraint>& parameters() const { return constraints_; }

  /// Throws UndeclaredSymbol if a symbol in the mask is neither x, y nor a declared parameter.
  void require_declared(std::uint32_t symbols) const;

 private:
  std::map<SymbolId, Constraint> constraints_;
};

}  // namespace painleve::expr
