#pragma once

#include <cmi/ideal.hpp>

#include <string>
#include <string_view>

namespace cmi {

// Monomial grammar: term ("*" term)*, term := VAR ("^" POSINT)?.
// "1" denotes the unit monomial. Whitespace between tokens is ignored.
// Errors carry the offending position (0-based offset into the text).
Monomial parse_monomial(const VariableSet& vars, std::string_view text);
std::string format_monomial(const VariableSet& vars, const Monomial& m);

// Ideal text: monomials separated by commas; "0" is the zero ideal.
MonomialIdeal parse_ideal(VarsPtr vars, std::string_view text);
std::string format_ideal(const MonomialIdeal& ideal);

// Parses ideal text that declares or implies its own variable set. An
// optional leading line "vars: x1,x2,..." (or "vars: x1..x9") fixes the
// ambient; otherwise the labels are inferred: if every label is
// prefix+integer with one prefix, the ambient runs over the full integer
// range seen, else the distinct labels in order of first use.
MonomialIdeal parse_ideal_text(std::string_view text);

// Parses a "vars" declaration value: comma-separated labels, or a range
// "x1..x9" (shared prefix, inclusive integer bounds).
VarsPtr parse_vars_decl(std::string_view text);

} // namespace cmi
