#include "nlh/freealg.hpp"

#include <unordered_map>

#include "nlh/errors.hpp"
#include "nlh/lyndon.hpp"

namespace nlh {
namespace {

struct PairKey {
  NWord u;
  NWord v;
  PrimeOrder order;
  friend bool operator==(const PairKey&, const PairKey&) = default;
};

struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const noexcept {
    return k.u.hash() * 31 + k.v.hash() * 7 + static_cast<std::size_t>(k.order);
  }
};

// Per-thread memo for basis brackets; bounded so long runs stay small.
constexpr std::size_t kMemoLimit = 1 << 18;

std::unordered_map<PairKey, Poly, PairKeyHash>& memo() {
  thread_local std::unordered_map<PairKey, Poly, PairKeyHash> table;
  if (table.size() > kMemoLimit) table.clear();
  return table;
}

Poly bracket_ordered(const NWord& u, const NWord& v, PrimeOrder order);

}  // namespace

Poly bracket_basis(const NWord& u, const NWord& v, PrimeOrder order) {
  auto c = cmp_lex(u, v, order);
  if (c == std::strong_ordering::equal) return Poly(order);
  if (c == std::strong_ordering::less) return -bracket_ordered(v, u, order);
  return bracket_ordered(u, v, order);
}

namespace {

// [[u],[v]] with u > v.
Poly bracket_ordered(const NWord& u, const NWord& v, PrimeOrder order) {
  PairKey key{u, v, order};
  if (auto it = memo().find(key); it != memo().end()) return it->second;

  Poly result(order);
  if (u.breadth() == 1) {
    result.add_term(u * v, 1);
  } else {
    auto [u1, u2] = ls_factorize(u, order);
    if (cmp_lex(u2, v, order) != std::strong_ordering::greater) {
      result.add_term(u * v, 1);
    } else {
      // [[u1,u2],v] = [u1,[u2,v]] + [[u1,v],u2]
      result = bracket(Poly::basis(u1, 1, order), bracket_basis(u2, v, order));
      result += bracket(bracket_basis(u1, v, order), Poly::basis(u2, 1, order));
    }
  }
  memo().emplace(std::move(key), result);
  return result;
}

}  // namespace

Poly bracket(const Poly& p, const Poly& q) {
  if (p.order() != q.order()) throw PreconditionError("polynomials use different prime orders");
  Poly result(p.order());
  for (const auto& [u, a] : p.terms())
    for (const auto& [v, b] : q.terms()) result += (a * b) * bracket_basis(u, v, p.order());
  return result;
}

Poly apply_op(const Poly& p) {
  Poly result(p.order());
  for (const auto& [w, c] : p.terms()) result.add_term(NWord::of(Prime::op(w)), c);
  return result;
}

Poly rewrite_to_basis(const NTerm& t, PrimeOrder order) {
  switch (t.kind()) {
    case NTerm::Kind::leaf: {
      Poly p(order);
      p.add_term(NWord::of(Prime::letter(t.symbol())), 1);
      return p;
    }
    case NTerm::Kind::op:
      return apply_op(rewrite_to_basis(t.body(), order));
    case NTerm::Kind::pair:
      break;
  }
  return bracket(rewrite_to_basis(t.left(), order), rewrite_to_basis(t.right(), order));
}

std::pair<NWord, Rational> leading(const Poly& p) {
  if (p.is_zero()) throw PreconditionError("leading term of the zero polynomial");
  const auto& [w, c] = *p.terms().begin();
  return {w, c};
}

Poly make_monic(const Poly& p) {
  auto [w, c] = leading(p);
  Poly out = p;
  out *= Rational(1) / c;
  return out;
}

}  // namespace nlh
