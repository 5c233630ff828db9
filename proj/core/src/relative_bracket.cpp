#include <functional>
#include <optional>

#include "nlh/errors.hpp"
#include "nlh/freealg.hpp"
#include "nlh/lyndon.hpp"

namespace nlh {
namespace {

struct Located {
  const NTerm* node;
  std::vector<std::uint8_t> path;
  std::size_t begin;  // first prime covered by node
};

// Smallest subterm of t covering primes [start, start + length).
Located covering_subterm(const NTerm& t, std::size_t start, std::size_t length) {
  Located at{&t, {}, 0};
  while (at.node->is_pair()) {
    const NTerm& l = at.node->left();
    std::size_t mid = at.begin + l.breadth();
    if (start + length <= mid) {
      at.node = &l;
      at.path.push_back(0);
    } else if (start >= mid) {
      at.node = &at.node->right();
      at.path.push_back(1);
      at.begin = mid;
    } else {
      break;
    }
  }
  return at;
}

NTerm replace_at(const NTerm& t, std::span<const std::uint8_t> path, const NTerm& replacement) {
  if (path.empty()) return replacement;
  if (path.front() == 0) return NTerm::pair(replace_at(t.left(), path.subspan(1), replacement), t.right());
  return NTerm::pair(t.left(), replace_at(t.right(), path.subspan(1), replacement));
}

bool has_leading(const NTerm& candidate, const NWord& u, PrimeOrder order) {
  Poly p = rewrite_to_basis(candidate, order);
  if (p.is_zero()) return false;
  auto [w, c] = leading(p);
  return w == u && c == 1;
}

// [..[[v],[c1]],..,[ck]] where c = c1...ck is the LS factorization.
std::pair<NTerm, std::size_t> left_comb(const NTerm& v_term, const NWord& c, PrimeOrder order) {
  NTerm out = v_term;
  auto parts = unique_decomposition(c, order);
  for (const auto& part : parts) out = NTerm::pair(out, shirshov_bracket(part, order));
  return {out, parts.size()};
}

// Every order-preserving bracketing of the blocks, with the block at index
// `marked` kept atomic. Yields (term, path to marked block).
void all_bracketings(const std::vector<NTerm>& blocks, std::size_t lo, std::size_t hi,
                     std::size_t marked,
                     const std::function<void(const NTerm&, const std::vector<std::uint8_t>&)>& sink) {
  if (hi - lo == 1) {
    sink(blocks[lo], {});
    return;
  }
  for (std::size_t mid = lo + 1; mid < hi; ++mid) {
    all_bracketings(blocks, lo, mid, marked, [&](const NTerm& l, const std::vector<std::uint8_t>& lp) {
      all_bracketings(blocks, mid, hi, marked, [&](const NTerm& r, const std::vector<std::uint8_t>& rp) {
        std::vector<std::uint8_t> path;
        if (marked >= lo && marked < mid) {
          path.push_back(0);
          path.insert(path.end(), lp.begin(), lp.end());
        } else if (marked >= mid && marked < hi) {
          path.push_back(1);
          path.insert(path.end(), rp.begin(), rp.end());
        }
        sink(NTerm::pair(l, r), path);
      });
    });
  }
}

}  // namespace

RelativeBracketing relative_bracket(const NWord& u, std::size_t start, std::size_t length,
                                    PrimeOrder order) {
  if (length == 0 || start > u.breadth() || length > u.breadth() - start)
    throw PreconditionError("occurrence out of range");
  if (!is_ls_nword(u, order)) throw PreconditionError("relative bracketing of a non-LS word");
  NWord v = u.slice(start, length);
  if (!is_ls_word(v, order)) throw PreconditionError("marked subword is not LS");

  NTerm whole = shirshov_bracket(u, order);
  NTerm v_term = shirshov_bracket(v, order);

  // Shirshov's construction: [u] has a subterm [v c] starting at v; replace
  // it by the left comb of [v] with the factors of c.
  Located at = covering_subterm(whole, start, length);
  if (at.begin == start) {
    std::size_t end = at.begin + at.node->breadth();
    NWord c = u.slice(start + length, end - start - length);
    auto [comb, depth] = left_comb(v_term, c, order);
    NTerm candidate = replace_at(whole, at.path, comb);
    std::vector<std::uint8_t> path = at.path;
    path.insert(path.end(), depth, 0);
    if (has_leading(candidate, u, order)) return {candidate, path};
  }

  // Fallback: search the order-preserving bracketings for one with the
  // required leading word.
  std::vector<NTerm> blocks;
  for (std::size_t i = 0; i < start; ++i) blocks.push_back(shirshov_bracket(u.slice(i, 1), order));
  std::size_t marked = blocks.size();
  blocks.push_back(v_term);
  for (std::size_t i = start + length; i < u.breadth(); ++i)
    blocks.push_back(shirshov_bracket(u.slice(i, 1), order));

  std::optional<RelativeBracketing> found;
  all_bracketings(blocks, 0, blocks.size(), marked,
                  [&](const NTerm& t, const std::vector<std::uint8_t>& path) {
                    if (!found && has_leading(t, u, order)) found = RelativeBracketing{t, path};
                  });
  if (!found) throw OrderingConflict("no bracketing of the word has the required leading term");
  return *found;
}

}  // namespace nlh
