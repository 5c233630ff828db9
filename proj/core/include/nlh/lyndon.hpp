#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "nlh/alphabet.hpp"
#include "nlh/order.hpp"
#include "nlh/term.hpp"
#include "nlh/word.hpp"

namespace nlh {

/// Lyndon-Shirshov test at the prime level: u is strictly cmp_lex-greater
/// than each of its proper rotations. Operator bodies are not inspected.
bool is_ls_word(const NWord& u, PrimeOrder order = PrimeOrder::erasure);

/// Full Nijenhuis LS test: is_ls_word holds for u and, recursively, for the
/// body of every operator prime.
bool is_ls_nword(const NWord& u, PrimeOrder order = PrimeOrder::erasure);

/// Standard factorization u = p.q where q is the longest proper LS suffix.
/// Requires an LS word of breadth >= 2; throws PreconditionError otherwise.
std::pair<NWord, NWord> ls_factorize(const NWord& u, PrimeOrder order = PrimeOrder::erasure);

/// Shirshov bracketing of an LS Nijenhuis word. Single primes map to a leaf
/// or to an operator node over the bracketing of the body.
NTerm shirshov_bracket(const NWord& u, PrimeOrder order = PrimeOrder::erasure);

/// Checks the three LS-term conditions recursively; operator nodes are
/// checked on their body.
bool is_ls_term(const NTerm& t, PrimeOrder order = PrimeOrder::erasure);

/// All LS Nijenhuis words of degree <= max_deg over `letters` (operators
/// only when allow_ops), sorted descending by cmp_weight.
std::vector<NWord> enumerate_ls_nwords(std::span<const Symbol> letters, std::size_t max_deg,
                                       bool allow_ops, PrimeOrder order = PrimeOrder::erasure);
std::vector<NWord> enumerate_ls_nwords(const Alphabet& alphabet, std::size_t max_deg,
                                       bool allow_ops, PrimeOrder order = PrimeOrder::erasure);

/// Factorization u = u_1 ... u_m into LS words with u_j <= u_{j+1} under
/// cmp_lex. The factorization is unique.
std::vector<NWord> unique_decomposition(const NWord& u, PrimeOrder order = PrimeOrder::erasure);

/// A bracketing of an LS word u that contains [v] as a subterm, where v is
/// the LS subword of u occupying primes [start, start + length). `path`
/// leads from the root of `term` to that subterm (0 = left, 1 = right).
struct RelativeBracketing {
  NTerm term;
  std::vector<std::uint8_t> path;
};

/// Builds [u]_v: its expansion in the free algebra has leading word u with
/// coefficient 1 and has the shape a[v]b plus terms a_i[v]b_i below u.
/// Candidates are checked by expansion; throws PreconditionError when u or
/// v is not LS or the range is out of bounds.
RelativeBracketing relative_bracket(const NWord& u, std::size_t start, std::size_t length,
                                    PrimeOrder order = PrimeOrder::erasure);

/// The subterm of `t` reached by `path`.
const NTerm& subterm(const NTerm& t, std::span<const std::uint8_t> path);

}  // namespace nlh
