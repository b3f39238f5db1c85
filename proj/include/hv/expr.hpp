#pragma once

#include <string>
#include <string_view>

#include "hv/algebra.hpp"

namespace hv {

/// Parses the element grammar (whitespace-insensitive):
///
///   element := ['+'|'-'] term (('+'|'-') term)*
///   term    := coeff '*' atom | atom | coeff
///   coeff   := digits ['/' digits]
///   atom    := 'L[' int ']' | 'I[' int ']' | 'C_L' | 'C_LI' | 'C_I'
///   int     := ['+'|'-'] digits
///
/// A bare coeff term has no basis symbol to attach to, so only the value 0
/// is accepted there. Throws ParseError.
Element parse(std::string_view text);

/// Parses a single basis symbol such as "L[-3]" or "C_LI".
BasisSymbol parse_symbol(std::string_view text);

/// Canonical text: "3/2*L[2] + I[-1] - C_L", "0" for the zero element.
std::string format(const Element& x);

}  // namespace hv
