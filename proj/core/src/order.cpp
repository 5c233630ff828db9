#include "nlh/order.hpp"

#include <algorithm>

#include "nlh/errors.hpp"

namespace nlh {
namespace {

// Rank 0 is the greatest letter.
std::strong_ordering cmp_symbol(Symbol a, Symbol b) noexcept { return b <=> a; }

template <class Seq, class Cmp>
std::strong_ordering lex_prefix_greatest(const Seq& a, const Seq& b, Cmp cmp) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto c = cmp(a[i], b[i]);
    if (c != std::strong_ordering::equal) return c;
  }
  // The shorter sequence is a prefix of the longer one, and the empty
  // remainder is the greatest word.
  return b.size() <=> a.size();
}

}  // namespace

std::string_view to_string(PrimeOrder order) noexcept {
  return order == PrimeOrder::erasure ? "erasure" : "nested";
}

PrimeOrder parse_prime_order(std::string_view name) {
  if (name == "erasure") return PrimeOrder::erasure;
  if (name == "nested") return PrimeOrder::nested;
  throw PreconditionError("unknown prime order '" + std::string(name) + "'");
}

std::strong_ordering cmp_prime(const Prime& a, const Prime& b, PrimeOrder order) {
  if (a == b) return std::strong_ordering::equal;
  if (order == PrimeOrder::nested) {
    if (a.is_letter() && b.is_letter()) return cmp_symbol(a.symbol(), b.symbol());
    if (a.is_letter()) return std::strong_ordering::greater;
    if (b.is_letter()) return std::strong_ordering::less;
    return cmp_weight(a.body(), b.body(), order);
  }
  auto c = lex_prefix_greatest(a.erasure(), b.erasure(), cmp_symbol);
  if (c != std::strong_ordering::equal) return c;
  c = a.op_count() <=> b.op_count();
  if (c != std::strong_ordering::equal) return c;
  // Same erasure and operator count: both are operator primes.
  return cmp_weight(a.body(), b.body(), order);
}

std::strong_ordering cmp_lex(const NWord& u, const NWord& v, PrimeOrder order) {
  return lex_prefix_greatest(u.primes(), v.primes(),
                             [order](const Prime& a, const Prime& b) { return cmp_prime(a, b, order); });
}

std::strong_ordering cmp_deglex(const NWord& u, const NWord& v, PrimeOrder order) {
  if (auto c = u.degree() <=> v.degree(); c != std::strong_ordering::equal) return c;
  return cmp_lex(u, v, order);
}

std::strong_ordering cmp_weight(const NWord& u, const NWord& v, PrimeOrder order) {
  if (auto c = u.degree() <=> v.degree(); c != std::strong_ordering::equal) return c;
  if (auto c = u.breadth() <=> v.breadth(); c != std::strong_ordering::equal) return c;
  for (std::size_t i = 0; i < u.breadth(); ++i) {
    auto c = cmp_prime(u[i], v[i], order);
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

Weight weight(const NWord& u) { return Weight{u.degree(), u.breadth(), u.primes()}; }

}  // namespace nlh
