#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nlh/alphabet.hpp"
#include "nlh/order.hpp"
#include "nlh/poly.hpp"
#include "nlh/rational.hpp"
#include "nlh/term.hpp"
#include "nlh/word.hpp"

namespace nlh {

/// Nijenhuis word with exactly one kStar letter, possibly under operators.
class StarWord {
 public:
  /// Throws PreconditionError unless `w` has exactly one star.
  explicit StarWord(NWord w);
  /// The bare placeholder.
  static StarWord star();

  const NWord& word() const noexcept { return word_; }
  bool is_bare() const noexcept;
  /// pi|_w : the star replaced by the primes of w.
  NWord substitute(const NWord& w) const;

  friend bool operator==(const StarWord&, const StarWord&) = default;

 private:
  NWord word_;
};

std::string to_string(const StarWord& pi, const Alphabet& alphabet);

/// Position of a subword: `path` lists the prime indices of the operator
/// primes to descend through, then [start, start + length) are primes of
/// the word reached.
struct Occurrence {
  std::vector<std::size_t> path;
  std::size_t start = 0;
  std::size_t length = 0;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// All occurrences of `needle` as a run of consecutive primes in `haystack`
/// or inside any operator body, in reading order: the occurrences inside an
/// operator prime are listed at that prime's position.
std::vector<Occurrence> find_occurrences(const NWord& haystack, const NWord& needle);

/// The star word obtained by replacing the occurrence by the placeholder.
StarWord star_word_at(const NWord& haystack, const Occurrence& occ);

/// pi|_s with pi's primes bracketed right-normed, [p1,[p2,[...,pn]]]; the
/// operator is applied linearly where the star is nested. Linear in s.
Poly star_substitute(const StarWord& pi, const Poly& s);

/// Special normal s-word [pi|_f]_{lead(f)}: a combination of f-words whose
/// leading word is pi|_{lead(f)} with coefficient 1. Requires f monic and
/// pi|_{lead(f)} an LS Nijenhuis word (PreconditionError otherwise).
/// Throws OrderingConflict if the constructed element does not have the
/// predicted leading word.
Poly special_normal_sword(const StarWord& pi, const Poly& f);

struct Relation {
  std::string name;
  Poly poly;
};

/// Ordered finite set of monic relations with LS leading words.
class RelationSet {
 public:
  RelationSet() = default;
  /// Throws PreconditionError for a zero, non-monic relation or mixed
  /// prime orders.
  explicit RelationSet(std::vector<Relation> relations);

  std::size_t size() const noexcept { return relations_.size(); }
  bool empty() const noexcept { return relations_.empty(); }
  const Relation& operator[](std::size_t i) const { return relations_[i]; }
  const std::vector<Relation>& relations() const noexcept { return relations_; }
  const NWord& leading_word(std::size_t i) const { return leading_[i]; }
  PrimeOrder order() const noexcept { return order_; }
  std::optional<std::size_t> find(std::string_view name) const;

 private:
  std::vector<Relation> relations_;
  std::vector<NWord> leading_;
  PrimeOrder order_ = PrimeOrder::erasure;
};

enum class ReductionStrategy {
  /// Greatest reducible support word; first relation; leftmost occurrence.
  greatest_first,
  /// Least reducible support word; last relation; rightmost occurrence.
  leftmost_first,
};

/// One elimination: coefficient * special_normal_sword(pi, S[relation]) was
/// subtracted to remove `word`.
struct ReductionStep {
  std::size_t relation = 0;
  StarWord pi = StarWord::star();
  NWord word;
  Rational coefficient;
};

struct Reduction {
  Poly remainder;
  std::vector<ReductionStep> steps;
};

inline constexpr std::size_t kDefaultMaxSteps = 200000;

/// Reduces p modulo S until no support word contains the leading word of a
/// relation. Throws ReductionBudgetExceeded after max_steps eliminations.
Reduction reduce(const Poly& p, const RelationSet& s, std::size_t max_steps = kDefaultMaxSteps,
                 ReductionStrategy strategy = ReductionStrategy::greatest_first);

/// Sum of coefficient * special normal s-word over a certificate; equals
/// p - reduce(p).remainder.
Poly replay(std::span<const ReductionStep> steps, const RelationSet& s);

/// True iff some support word of p contains the leading word of a relation.
bool is_reducible(const NWord& w, const RelationSet& s);

struct Composition {
  enum class Kind { intersection, inclusion };

  Kind kind = Kind::intersection;
  /// Ambiguity word.
  NWord w;
  /// Intersection: w = lead(f).a = b.lead(g).
  NWord a;
  NWord b;
  /// Inclusion: lead(f) = pi|_{lead(g)}.
  std::optional<StarWord> pi;
  Poly value;
};

std::string_view to_string(Composition::Kind kind) noexcept;

/// Proper prime-level overlaps of lead(f) and lead(g) whose ambiguity word
/// is LS; value = [f a]_{lead f} - [b g]_{lead g}.
std::vector<Composition> intersection_compositions(const Poly& f, const Poly& g);

/// Occurrences pi of lead(g) inside lead(f), including under operators;
/// value = f - [pi|_g]_{lead g}. The bare placeholder is skipped when f == g.
std::vector<Composition> inclusion_compositions(const Poly& f, const Poly& g);

/// True iff h reduces to zero modulo S with every elimination below w.
/// Throws PreconditionError if a support word of h is not below w.
bool is_trivial_mod(const Poly& h, const RelationSet& s, const NWord& w,
                    std::size_t max_steps = kDefaultMaxSteps);

struct CompositionRecord {
  std::size_t f = 0;
  std::size_t g = 0;
  Composition composition;
  Poly residual;
  std::vector<ReductionStep> steps;
  /// Set when reduction failed (budget or ordering conflict).
  std::string error;

  bool trivial() const noexcept { return error.empty() && residual.is_zero(); }
};

struct GsbReport {
  bool pass = true;
  std::size_t max_deg = 0;
  std::vector<CompositionRecord> compositions;
  /// Compositions whose ambiguity word exceeds max_deg.
  std::size_t skipped_above_degree = 0;
};

/// Enumerates every intersection and inclusion composition among pairs of
/// S (including a relation with itself) with ambiguity degree <= max_deg
/// and reduces each. Pairs are processed concurrently; the report order is
/// (f, g, kind, position) regardless of scheduling. `threads` = 0 uses the
/// hardware concurrency.
GsbReport gsb_check(const RelationSet& s, std::size_t max_deg = 6, std::size_t threads = 0);

/// LS Nijenhuis words of degree <= max_deg over `letters` that contain no
/// leading word of S, descending by cmp_weight.
std::vector<NWord> irr_words(const RelationSet& s, std::span<const Symbol> letters,
                             std::size_t max_deg, bool allow_ops = true);

/// Shirshov-bracketed irr_words over the whole alphabet.
std::vector<NTerm> irr_basis(const RelationSet& s, const Alphabet& alphabet, std::size_t max_deg);

}  // namespace nlh
