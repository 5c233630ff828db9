#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nlh/alphabet.hpp"
#include "nlh/order.hpp"
#include "nlh/poly.hpp"
#include "nlh/rational.hpp"
#include "nlh/rewrite.hpp"
#include "nlh/word.hpp"

namespace nlh {

/// Coordinates with respect to the generator basis X.
using Vec = std::vector<Rational>;

struct HnnOptions {
  /// Add r_t = N(t) - t to the relation families I-V.
  bool include_nt = true;
  std::size_t max_deg = 6;
};

/// Finite-dimensional Nijenhuis Lie algebra with a distinguished subalgebra
/// and a derivation on it, all by structure constants. Generator i is the
/// i-th greatest basis element.
struct AlgebraSpec {
  std::vector<std::string> generators;
  /// Bracket entries as given: key (i, j) holds the coordinates of [x_i, x_j].
  /// Missing pairs are zero; the opposite pair is filled in by antisymmetry.
  std::map<std::pair<std::size_t, std::size_t>, Vec> bracket;
  /// Row i holds the coordinates of N(x_i).
  std::vector<Vec> nijenhuis;
  /// Basis of the subalgebra, as generator indices in ascending order.
  std::vector<std::size_t> subalgebra;
  /// D(a) for a in the subalgebra.
  std::map<std::size_t, Vec> derivation;
  HnnOptions options;

  std::size_t dimension() const noexcept { return generators.size(); }
  Vec zero() const { return Vec(dimension()); }
  Vec unit(std::size_t i) const;
  /// Coordinates of [x_i, x_j] with antisymmetric completion.
  Vec alpha(std::size_t i, std::size_t j) const;
  Vec bracket_of(const Vec& a, const Vec& b) const;
  Vec apply_nijenhuis(const Vec& a) const;
  bool in_subalgebra(std::size_t i) const;
  std::size_t index_of(std::string_view name) const;
};

struct Violation {
  /// Which identity failed, e.g. "jacobi", "derivation-commutes-n".
  std::string identity;
  std::vector<std::string> args;
  std::string detail;
};

struct CheckReport {
  std::string check;
  bool pass = true;
  std::vector<Violation> violations;
};

/// Antisymmetry and the Jacobi identity in coordinates.
CheckReport validate_lie(const AlgebraSpec& spec);
/// [N x, N y] = N([N x, y] + [x, N y] - N [x, y]) for all basis pairs.
CheckReport validate_nijenhuis(const AlgebraSpec& spec);
/// Closure of the subalgebra under the bracket and N.
CheckReport validate_subalgebra(const AlgebraSpec& spec);
/// Derivation rule on [a, b] and on [N a, N b], and D N = N D, for a, b in
/// the subalgebra. Evaluating D outside the subalgebra is reported as
/// "derivation-domain".
CheckReport validate_derivation(const AlgebraSpec& spec);
/// The four validators in order.
std::vector<CheckReport> validate_all(const AlgebraSpec& spec);

struct HnnRelation {
  std::string name;
  /// One of "f", "fN", "hN", "g", "gN", "rt".
  std::string family;
  NWord expected_leading;
};

struct HnnPresentation {
  /// t followed by the generators of X.
  Alphabet alphabet;
  Symbol t = 0;
  std::vector<Symbol> generators;
  std::vector<Symbol> subalgebra;
  std::vector<HnnRelation> families;
  RelationSet relations;
  bool strict = false;
};

struct BuildOptions {
  bool include_nt = true;
  PrimeOrder order = PrimeOrder::erasure;
  /// Run validate_all first and throw SpecError when anything fails.
  bool validate = true;
};

/// Relation families I-V (and r_t unless strict), each made monic, with the
/// leading word of each verified against its family pattern. Throws
/// OrderingConflict when a leading word differs from the pattern.
HnnPresentation build_relations(const AlgebraSpec& spec, const BuildOptions& opts = {});

GsbReport hnn_gsb_check(const HnnPresentation& pres, std::size_t max_deg = 6);

struct NormalFormResult {
  Poly value;
  /// Set when the relation set did not pass gsb_check at the given degree,
  /// so the result is a reduced form but not certified unique.
  bool advisory = false;
};

NormalFormResult normal_form(const Poly& expr, const HnnPresentation& pres,
                             std::size_t max_deg = 6);

struct EmbeddingEntry {
  std::string generator;
  Poly normal_form;
  bool fixed = false;
};

struct EmbeddingReport {
  bool pass = true;
  std::vector<EmbeddingEntry> entries;
  /// Rank of the matrix of normal-form coordinates of X.
  std::size_t rank = 0;
};

EmbeddingReport embedding_check(const HnnPresentation& pres);

struct FreeSubalgebraReport {
  bool pass = true;
  std::string generator;
  std::size_t max_deg = 0;
  std::size_t words_checked = 0;
  std::vector<NWord> reducible;
};

/// Every LS Nijenhuis word on {t, x} up to max_deg must be irreducible.
/// Throws PreconditionError when x is in the subalgebra or unknown.
FreeSubalgebraReport free_subalgebra_check(const HnnPresentation& pres, std::string_view x,
                                           std::size_t max_deg);

}  // namespace nlh
