#pragma once

#include <utility>

#include "nlh/order.hpp"
#include "nlh/poly.hpp"
#include "nlh/rational.hpp"
#include "nlh/term.hpp"
#include "nlh/word.hpp"

namespace nlh {

/// Straightens an arbitrary bracketed term into the LS basis using
/// antisymmetry and the Jacobi identity. Operator nodes are linear and
/// opaque: no operator identity is applied.
Poly rewrite_to_basis(const NTerm& t, PrimeOrder order = PrimeOrder::erasure);

/// Lie bracket, bilinear, result in the LS basis.
Poly bracket(const Poly& p, const Poly& q);

/// [[u],[v]] for LS Nijenhuis words u and v.
Poly bracket_basis(const NWord& u, const NWord& v, PrimeOrder order = PrimeOrder::erasure);

/// Linear extension of [w] -> N([w]).
Poly apply_op(const Poly& p);

/// Leading word and leading coefficient. Throws PreconditionError on zero.
std::pair<NWord, Rational> leading(const Poly& p);

/// p / lc(p). Throws PreconditionError on zero.
Poly make_monic(const Poly& p);

}  // namespace nlh
