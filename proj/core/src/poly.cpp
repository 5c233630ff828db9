#include "nlh/poly.hpp"

#include <algorithm>

#include "nlh/errors.hpp"
#include "nlh/lyndon.hpp"

namespace nlh {

Poly Poly::basis(const NWord& w, const Rational& c, PrimeOrder order) {
  if (!is_ls_nword(w, order)) throw PreconditionError("basis word is not an LS Nijenhuis word");
  Poly p(order);
  p.add_term(w, c);
  return p;
}

std::size_t Poly::degree() const noexcept {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.degree());
  return d;
}

Rational Poly::coefficient(const NWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const NWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

void Poly::check_compatible(const Poly& other) const {
  if (order() != other.order()) throw PreconditionError("polynomials use different prime orders");
}

Poly& Poly::operator+=(const Poly& other) {
  check_compatible(other);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_compatible(other);
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, coeff] : terms_) coeff *= c;
  return *this;
}

bool operator==(const Poly& a, const Poly& b) {
  return a.order() == b.order() && a.terms_ == b.terms_;
}

std::string to_string(const Poly& p, const Alphabet& alphabet) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    Rational magnitude = abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (magnitude != 1) out += to_string(magnitude) + "*";
    out += to_string(shirshov_bracket(w, p.order()), alphabet);
    first = false;
  }
  return out;
}

}  // namespace nlh
