#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "nlh/alphabet.hpp"
#include "nlh/order.hpp"
#include "nlh/rational.hpp"
#include "nlh/term.hpp"
#include "nlh/word.hpp"

namespace nlh {

/// Element of the free Nijenhuis Lie algebra in the LS-term basis.
///
/// A basis term is identified by its LS Nijenhuis word; the term itself is
/// the Shirshov bracketing of that word. Terms are kept in descending
/// cmp_weight order under the polynomial's PrimeOrder, so the first term is
/// the leading one. Zero coefficients are never stored.
class Poly {
 public:
  using Terms = std::map<NWord, Rational, WeightDescending>;

  Poly() : Poly(PrimeOrder::erasure) {}
  explicit Poly(PrimeOrder order) : terms_(WeightDescending{order}) {}

  /// c * [w]. Throws PreconditionError unless w is an LS Nijenhuis word.
  static Poly basis(const NWord& w, const Rational& c = 1,
                    PrimeOrder order = PrimeOrder::erasure);

  PrimeOrder order() const noexcept { return terms_.key_comp().order; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  /// Maximal degree over the support; 0 for the zero polynomial.
  std::size_t degree() const noexcept;
  Rational coefficient(const NWord& w) const;

  /// Adds c * [w]; w must already be an LS Nijenhuis word (not re-checked).
  void add_term(const NWord& w, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Rational& c, Poly p) { return p *= c; }
  friend Poly operator-(Poly p) { return p *= -1; }
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void check_compatible(const Poly& other) const;

  Terms terms_;
};

/// Text form `c1*term1 + c2*term2 - ...` in descending order, with terms in
/// bracket notation and coefficients as `p/q`. A coefficient of 1 is
/// omitted. The zero polynomial prints as `0`.
std::string to_string(const Poly& p, const Alphabet& alphabet);

}  // namespace nlh
