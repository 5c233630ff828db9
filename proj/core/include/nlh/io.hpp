#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "nlh/alphabet.hpp"
#include "nlh/hnn.hpp"
#include "nlh/order.hpp"
#include "nlh/poly.hpp"
#include "nlh/term.hpp"

namespace nlh {

/// Reads an algebra file. Throws SpecError with the offending key (or the
/// JSON parser's line/column) on malformed input.
AlgebraSpec parse_algebra(const std::filesystem::path& path);
AlgebraSpec parse_algebra_text(std::string_view text, std::string_view source = "<input>");
AlgebraSpec parse_algebra_json(const nlohmann::ordered_json& doc);
nlohmann::ordered_json to_json(const AlgebraSpec& spec);

/// Parses a bracket expression into an NTerm-free linear combination and
/// straightens it into the LS basis.
///
///   expr := ['+'|'-'] term (('+'|'-') term)*
///   term := [rational '*'] atom | rational
///   atom := letter | 'N(' expr ')' | '[' expr ',' expr ']' | '(' expr ')'
///
/// Throws ParseError (with position) or SymbolError.
Poly parse_expr(std::string_view text, const Alphabet& alphabet,
                PrimeOrder order = PrimeOrder::erasure);

/// Parses a single bracketed term (no sums or coefficients).
NTerm parse_term(std::string_view text, const Alphabet& alphabet);

}  // namespace nlh
