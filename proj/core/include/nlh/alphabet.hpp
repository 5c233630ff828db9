#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nlh {

/// Letters are identified by their rank in the alphabet: rank 0 is the
/// greatest letter.
using Symbol = std::uint32_t;

/// Placeholder letter of star words. Never part of an Alphabet.
inline constexpr Symbol kStar = std::numeric_limits<Symbol>::max();

/// Finite totally ordered set of generator names, listed greatest first.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  const std::vector<std::string>& letters() const noexcept { return letters_; }

  /// Name of a symbol; kStar prints as `*`.
  const std::string& name(Symbol s) const;
  std::optional<Symbol> find(std::string_view name) const;
  /// Like find() but throws SymbolError for unknown names.
  Symbol symbol(std::string_view name) const;
  bool contains(Symbol s) const noexcept { return s < letters_.size(); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> letters_;
};

/// Identifier rule for letter names: [A-Za-z_][A-Za-z0-9_]*, except `N`.
bool is_valid_letter_name(std::string_view name);

}  // namespace nlh
