#pragma once

#include <compare>
#include <cstddef>
#include <string_view>
#include <vector>

#include "nlh/word.hpp"

namespace nlh {

/// How a letter compares with an operator prime.
///
/// `erasure` compares the operator-erased letter sequences lexicographically
/// (a proper prefix is greater); on a tie the prime with more operators is
/// greater, and remaining ties between two operator primes are broken by
/// comparing their bodies with cmp_weight. Under this rule x > N(y) > z when
/// x > y > z.
///
/// `nested` puts every letter above every operator prime and compares two
/// operator primes by cmp_weight of their bodies.
enum class PrimeOrder { erasure, nested };

std::string_view to_string(PrimeOrder order) noexcept;
/// Throws PreconditionError for unknown names.
PrimeOrder parse_prime_order(std::string_view name);

std::strong_ordering cmp_prime(const Prime& a, const Prime& b,
                               PrimeOrder order = PrimeOrder::erasure);

/// Lexicographic order on prime sequences. The empty word is greater than
/// any nonempty word, so a proper prefix is greater than its extensions.
std::strong_ordering cmp_lex(const NWord& u, const NWord& v,
                             PrimeOrder order = PrimeOrder::erasure);

/// Degree first, then cmp_lex. Intended for plain words.
std::strong_ordering cmp_deglex(const NWord& u, const NWord& v,
                                PrimeOrder order = PrimeOrder::erasure);

/// Deg-lex order on Nijenhuis words: the weight tuples
/// (deg, breadth, u_1, ..., u_n) compared component-wise.
std::strong_ordering cmp_weight(const NWord& u, const NWord& v,
                                PrimeOrder order = PrimeOrder::erasure);

struct Weight {
  std::size_t degree = 0;
  std::size_t breadth = 0;
  std::vector<Prime> primes;
};

Weight weight(const NWord& u);

/// Strict-weak-order functor placing cmp_weight-greater words first.
struct WeightDescending {
  PrimeOrder order = PrimeOrder::erasure;
  bool operator()(const NWord& a, const NWord& b) const {
    return cmp_weight(a, b, order) == std::strong_ordering::greater;
  }
};

}  // namespace nlh
