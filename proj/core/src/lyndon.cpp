#include "nlh/lyndon.hpp"

#include <algorithm>
#include <functional>

#include "nlh/errors.hpp"

namespace nlh {
namespace {

// u compared with its rotation starting at k, both of breadth n.
std::strong_ordering cmp_rotation(const NWord& u, std::size_t k, PrimeOrder order) {
  const std::size_t n = u.breadth();
  for (std::size_t i = 0; i < n; ++i) {
    auto c = cmp_prime(u[i], u[(i + k) % n], order);
    if (c != std::strong_ordering::equal) return c;
  }
  return std::strong_ordering::equal;
}

NTerm bracket_unchecked(const NWord& u, PrimeOrder order) {
  if (u.breadth() == 1) {
    const Prime& p = u[0];
    if (p.is_letter()) return NTerm::leaf(p.symbol());
    return NTerm::op(bracket_unchecked(p.body(), order));
  }
  auto [left, right] = ls_factorize(u, order);
  return NTerm::pair(bracket_unchecked(left, order), bracket_unchecked(right, order));
}

}  // namespace

bool is_ls_word(const NWord& u, PrimeOrder order) {
  if (u.empty()) return false;
  for (std::size_t k = 1; k < u.breadth(); ++k)
    if (cmp_rotation(u, k, order) != std::strong_ordering::greater) return false;
  return true;
}

bool is_ls_nword(const NWord& u, PrimeOrder order) {
  if (!is_ls_word(u, order)) return false;
  return std::all_of(u.primes().begin(), u.primes().end(), [order](const Prime& p) {
    return p.is_letter() || is_ls_nword(p.body(), order);
  });
}

std::pair<NWord, NWord> ls_factorize(const NWord& u, PrimeOrder order) {
  if (u.breadth() < 2) throw PreconditionError("factorization needs at least two primes");
  if (!is_ls_word(u, order)) throw PreconditionError("factorization of a non-LS word");
  for (std::size_t k = 1; k < u.breadth(); ++k) {
    NWord right = u.suffix(k);
    if (is_ls_word(right, order)) return {u.prefix(k), std::move(right)};
  }
  // The last prime alone is always LS.
  throw PreconditionError("no LS suffix");
}

NTerm shirshov_bracket(const NWord& u, PrimeOrder order) {
  if (!is_ls_nword(u, order)) throw PreconditionError("Shirshov bracketing of a non-LS word");
  return bracket_unchecked(u, order);
}

bool is_ls_term(const NTerm& t, PrimeOrder order) {
  switch (t.kind()) {
    case NTerm::Kind::leaf:
      return true;
    case NTerm::Kind::op:
      return is_ls_term(t.body(), order);
    case NTerm::Kind::pair:
      break;
  }
  if (!is_ls_word(flatten(t), order)) return false;
  if (!is_ls_term(t.left(), order) || !is_ls_term(t.right(), order)) return false;
  if (t.left().is_pair() &&
      cmp_lex(flatten(t.left().right()), flatten(t.right()), order) == std::strong_ordering::greater)
    return false;
  return true;
}

std::vector<NWord> enumerate_ls_nwords(std::span<const Symbol> letters, std::size_t max_deg,
                                       bool allow_ops, PrimeOrder order) {
  if (max_deg < 1) throw PreconditionError("max_deg must be at least 1");
  // primes[d] holds the primes of degree d, words[d] the LS words of degree d.
  std::vector<std::vector<Prime>> primes(max_deg + 1);
  std::vector<std::vector<NWord>> words(max_deg + 1);
  for (Symbol s : letters) primes[1].push_back(Prime::letter(s));

  for (std::size_t d = 1; d <= max_deg; ++d) {
    if (allow_ops && d >= 2)
      for (const auto& w : words[d - 1]) primes[d].push_back(Prime::op(w));

    std::vector<Prime> current;
    std::function<void(std::size_t)> extend = [&](std::size_t remaining) {
      if (remaining == 0) {
        NWord w(current);
        if (is_ls_word(w, order)) words[d].push_back(std::move(w));
        return;
      }
      for (std::size_t pd = 1; pd <= remaining; ++pd) {
        for (const auto& p : primes[pd]) {
          current.push_back(p);
          extend(remaining - pd);
          current.pop_back();
        }
      }
    };
    extend(d);
  }

  std::vector<NWord> out;
  for (auto& ws : words) std::move(ws.begin(), ws.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end(), WeightDescending{order});
  return out;
}

std::vector<NWord> enumerate_ls_nwords(const Alphabet& alphabet, std::size_t max_deg,
                                       bool allow_ops, PrimeOrder order) {
  std::vector<Symbol> letters(alphabet.size());
  for (std::size_t i = 0; i < letters.size(); ++i) letters[i] = static_cast<Symbol>(i);
  return enumerate_ls_nwords(letters, max_deg, allow_ops, order);
}

std::vector<NWord> unique_decomposition(const NWord& u, PrimeOrder order) {
  std::vector<NWord> parts;
  std::size_t i = 0;
  while (i < u.breadth()) {
    // Longest LS prefix of the remainder; a single prime always qualifies.
    std::size_t best = 1;
    for (std::size_t len = u.breadth() - i; len > 1; --len) {
      if (is_ls_word(u.slice(i, len), order)) {
        best = len;
        break;
      }
    }
    parts.push_back(u.slice(i, best));
    i += best;
  }
  return parts;
}

const NTerm& subterm(const NTerm& t, std::span<const std::uint8_t> path) {
  const NTerm* node = &t;
  for (auto step : path) {
    if (node->is_pair())
      node = step == 0 ? &node->left() : &node->right();
    else if (node->is_op())
      node = &node->body();
    else
      throw PreconditionError("path leads below a leaf");
  }
  return *node;
}

}  // namespace nlh
