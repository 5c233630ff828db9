#include "nlh/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "nlh/errors.hpp"

namespace nlh {

bool is_valid_letter_name(std::string_view name) {
  if (name.empty() || name == "N") return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && head != '_') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Alphabet::Alphabet(std::vector<std::string> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw SymbolError("alphabet must not be empty");
  std::unordered_set<std::string> seen;
  for (const auto& l : letters_) {
    if (!is_valid_letter_name(l)) throw SymbolError("invalid letter name '" + l + "'");
    if (!seen.insert(l).second) throw SymbolError("duplicate letter '" + l + "'");
  }
}

const std::string& Alphabet::name(Symbol s) const {
  static const std::string star = "*";
  if (s == kStar) return star;
  if (s >= letters_.size()) throw SymbolError("symbol " + std::to_string(s) + " outside alphabet");
  return letters_[s];
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  auto it = std::find(letters_.begin(), letters_.end(), name);
  if (it == letters_.end()) return std::nullopt;
  return static_cast<Symbol>(it - letters_.begin());
}

Symbol Alphabet::symbol(std::string_view name) const {
  if (auto s = find(name)) return *s;
  throw SymbolError("unknown symbol '" + std::string(name) + "'");
}

}  // namespace nlh
