#pragma once

#include <cstdint>
#include <string_view>

#include "asl/gf2f.hpp"
#include "asl/laurent.hpp"

namespace asl {

// Input grammar (whitespace-insensitive):
//
//   series  := term ("+" term)*
//   term    := factor ("*" factor)*
//   factor  := primary ("^" integer)?
//   primary := digits | "g" | "x" | "a0" | "(" series ")"
//   integer := "-"? digits
//
// Digits are read mod 2; "g" is the field generator, "x" the uniformizer and
// "a0" the distinguished trace-one constant. Binary "-" is accepted and
// means "+". Rendered series ("x^-3 + g*x^-1 + 1") are a subset of this.

/// Throws ParseError (with the offending position) or UnknownSymbol.
LaurentSeries parse_series(std::string_view text, const FieldPtr &field,
                           std::int64_t precision = LaurentSeries::kDefaultPrecision);

/// A residue-field literal such as "g^2+g+1"; must not involve x.
FqElem parse_element(std::string_view text, const FieldPtr &field);

/// A defining polynomial as a bit-vector: "g^4+g+1", "0x13" or "0b10011".
std::uint32_t parse_modulus(std::string_view text);

} // namespace asl
