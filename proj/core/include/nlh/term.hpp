#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "nlh/alphabet.hpp"
#include "nlh/word.hpp"

namespace nlh {

/// Bracketed (non-associative) Nijenhuis term: a letter, an operator
/// application, or a bracket [left, right].
class NTerm {
 public:
  enum class Kind { leaf, op, pair };

  static NTerm leaf(Symbol s);
  static NTerm op(NTerm body);
  static NTerm pair(NTerm left, NTerm right);

  Kind kind() const noexcept;
  bool is_leaf() const noexcept { return kind() == Kind::leaf; }
  bool is_op() const noexcept { return kind() == Kind::op; }
  bool is_pair() const noexcept { return kind() == Kind::pair; }

  Symbol symbol() const;
  const NTerm& body() const;
  const NTerm& left() const;
  const NTerm& right() const;

  /// Number of top-level primes of flatten(*this).
  std::size_t breadth() const noexcept;
  std::size_t degree() const noexcept;

  friend bool operator==(const NTerm& a, const NTerm& b) noexcept;

 private:
  struct Node;
  explicit NTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// The bracket-forgetting map: drops every bracket, keeps operators.
NWord flatten(const NTerm& t);

/// Canonical bracket notation: `x`, `[x,[x,y]]`, `N([x,y])`.
std::string to_string(const NTerm& t, const Alphabet& alphabet);

}  // namespace nlh
