#include "painleve/expr/param_env.hpp"

#include <cctype>

namespace painleve::expr {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

void ParamEnv::declare(SymbolId id, Constraint c) {
  if (is_base_variable(id) || id == kP)
    throw std::invalid_argument("'" + SymbolTable::name(id) + "' is reserved and cannot be a parameter");
  constraints_[id] = c;
}

void ParamEnv::declare(std::string_view spec) {
  spec = trim(spec);
  Constraint c = Constraint::Free;
  std::string_view name = spec;
  if (auto pos = spec.find("!="); pos != std::string_view::npos) {
    if (trim(spec.substr(pos + 2)) != "0") throw std::invalid_argument("expected 'name!=0', got '" + std::string(spec) + "'");
    name = trim(spec.substr(0, pos));
    c = Constraint::NonZero;
  } else if (auto gt = spec.find('>'); gt != std::string_view::npos) {
    if (trim(spec.substr(gt + 1)) != "0") throw std::invalid_argument("expected 'name>0', got '" + std::string(spec) + "'");
    name = trim(spec.substr(0, gt));
    c = Constraint::Positive;
  }
  if (!valid_identifier(name)) throw std::invalid_argument("invalid parameter name '" + std::string(name) + "'");
  declare(SymbolTable::intern(name), c);
}

std::optional<Constraint> ParamEnv::constraint(SymbolId id) const {
  auto it = constraints_.find(id);
  if (it == constraints_.end()) return std::nullopt;
  return it->second;
}

void ParamEnv::require_declared(std::uint32_t symbols) const {
  for (SymbolId v = 0; v < kMaxSymbols; ++v) {
    if (!((symbols >> v) & 1u) || is_base_variable(v)) continue;
    if (!declared(v)) throw UndeclaredSymbol("undeclared symbol '" + SymbolTable::name(v) + "'");
  }
}

}  // namespace painleve::expr
