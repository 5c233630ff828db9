#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nlh/alphabet.hpp"

namespace nlh {

class NWord;

/// A letter or a single application of the operator to a nonempty word.
/// Op primes cache their degree, operator count and letter erasure.
class Prime {
 public:
  static Prime letter(Symbol s) noexcept;
  static Prime op(NWord body);

  bool is_letter() const noexcept { return op_ == nullptr; }
  bool is_op() const noexcept { return op_ != nullptr; }

  /// Letter primes only.
  Symbol symbol() const;
  /// Op primes only.
  const NWord& body() const;

  std::size_t degree() const noexcept;
  std::size_t op_count() const noexcept;
  std::size_t depth() const noexcept;
  /// Letter sequence with every operator removed.
  std::span<const Symbol> erasure() const noexcept;
  bool contains_star() const noexcept;
  std::size_t hash() const noexcept;

  friend bool operator==(const Prime& a, const Prime& b) noexcept;

 private:
  struct OpData;

  Symbol symbol_ = 0;
  std::shared_ptr<const OpData> op_;
};

/// Associative Nijenhuis word: a sequence of primes. The empty word is
/// allowed as a value (it is the unit used for the a/b parts of a
/// decomposition) but most operations require nonempty words.
class NWord {
 public:
  NWord() = default;
  explicit NWord(std::vector<Prime> primes);

  /// Plain word from a list of letters.
  static NWord from_symbols(std::span<const Symbol> letters);
  static NWord from_symbols(std::initializer_list<Symbol> letters);
  static NWord of(const Prime& p) { return NWord(std::vector<Prime>{p}); }

  const std::vector<Prime>& primes() const noexcept { return primes_; }
  const Prime& operator[](std::size_t i) const { return primes_[i]; }
  bool empty() const noexcept { return primes_.empty(); }

  std::size_t breadth() const noexcept { return primes_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  std::size_t depth() const noexcept;
  /// True when no prime is an operator application.
  bool is_plain() const noexcept;
  bool contains_star() const noexcept;
  /// Number of kStar letters at any nesting level.
  std::size_t star_count() const noexcept;

  /// `length` primes starting at `pos`.
  NWord slice(std::size_t pos, std::size_t length) const;
  /// Primes from `pos` to the end.
  NWord suffix(std::size_t pos) const { return slice(pos, breadth() - pos); }
  NWord prefix(std::size_t length) const { return slice(0, length); }

  std::size_t hash() const noexcept;

  friend NWord operator*(const NWord& a, const NWord& b);
  friend bool operator==(const NWord& a, const NWord& b) noexcept;

 private:
  std::vector<Prime> primes_;
  std::size_t degree_ = 0;
};

struct NWordHash {
  std::size_t operator()(const NWord& w) const noexcept { return w.hash(); }
};

/// Canonical text form: primes separated by `.`, operator as `N(...)`,
/// e.g. `x.N(x.y).y`. The empty word prints as `1`.
std::string to_string(const NWord& w, const Alphabet& alphabet);
std::string to_string(const Prime& p, const Alphabet& alphabet);

/// Inverse of to_string. Whitespace is ignored. `*` is accepted only when
/// `allow_star` is set. Throws ParseError / SymbolError.
NWord parse_word(std::string_view text, const Alphabet& alphabet, bool allow_star = false);

}  // namespace nlh

template <>
struct std::hash<nlh::NWord> {
  std::size_t operator()(const nlh::NWord& w) const noexcept { return w.hash(); }
};
