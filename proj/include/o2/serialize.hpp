#ifndef O2_SERIALIZE_HPP
#define O2_SERIALIZE_HPP

#include <string>

#include "o2/grammar.hpp"

namespace o2 {

// Derivation tree wire formats. Both round-trip losslessly:
//   JSON:   {"rule": "<label>", "args": ["<word>", ...], "children": [...]}
//   s-expr: (<label> "<arg>" ... (<child>) ...)
// Words use the ASCII surface syntax. Parsers throw std::invalid_argument
// on malformed input.

std::string tree_to_json(const DerivationTree& t);
DerivationTree tree_from_json(const std::string& text);

std::string tree_to_sexp(const DerivationTree& t);
DerivationTree tree_from_sexp(const std::string& text);

}  // namespace o2

#endif
