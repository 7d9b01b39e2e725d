#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace painleve::expr {

/// Maximum number of distinct symbols a single process may intern.
inline constexpr std::size_t kMaxSymbols = 16;

using SymbolId = std::uint8_t;

/// Reserved ids: the independent variable, the dependent variable and the derivative y'.
inline constexpr SymbolId kX = 0;
inline constexpr SymbolId kY = 1;
inline constexpr SymbolId kP = 2;

class SymbolLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Process-wide interning of symbol names. Thread-safe.
class SymbolTable {
 public:
  static SymbolId intern(std::string_view name);
  static const std::string& name(SymbolId id);
  static std::size_t size();

  /// Internal symbol that cannot be produced by the parser.
  static SymbolId internal(std::string_view tag);
};

/// True for x and y, the only symbols that may carry fractional exponents.
constexpr bool is_base_variable(SymbolId id) { return id == kX || id == kY; }

}  // namespace painleve::expr
