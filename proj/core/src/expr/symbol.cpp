#include "painleve/expr/symbol.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

namespace painleve::expr {
namespace {

struct Registry {
  std::mutex mutex;
  std::deque<std::string> names;
  std::unordered_map<std::string, SymbolId> ids;

  Registry() {
    for (const char* n : {"x", "y", "p"}) {
      ids.emplace(n, static_cast<SymbolId>(names.size()));
      names.emplace_back(n);
    }
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

SymbolId SymbolTable::intern(std::string_view name) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  std::string key(name);
  if (auto it = r.ids.find(key); it != r.ids.end()) return it->second;
  if (r.names.size() >= kMaxSymbols) {
    throw SymbolLimitError("too many distinct symbols (limit " + std::to_string(kMaxSymbols) +
                           ") while interning '" + key + "'");
  }
  auto id = static_cast<SymbolId>(r.names.size());
  r.names.push_back(key);
  r.ids.emplace(std::move(key), id);
  return id;
}

const std::string& SymbolTable::name(SymbolId id) {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  return r.names.at(id);
}

std::size_t SymbolTable::size() {
  auto& r = registry();
  std::lock_guard lock(r.mutex);
  return r.names.size();
}

SymbolId SymbolTable::internal(std::string_view tag) {
  std::string name = "%";
  name += tag;
  return intern(name);
}

}  // namespace painleve::expr
