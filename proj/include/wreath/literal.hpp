#pragma once

#include <string>

#include "wreath/groth_ring.hpp"
#include "wreath/partition.hpp"

namespace wreath {

// The literal grammar shared by every command:
//   element := ['+'|'-'] term (('+'|'-') term)*
//   term    := coeff | [coeff ['*']] 'Z{' [entry (';' entry)*] '}'
//   coeff   := integer ['/' integer]
//   entry   := label ':' '[' [int (',' int)*] ']'
// Whitespace is free between tokens. The label "𝟏" names the unit when the
// unit is a basis element and no basis element is literally called that.
Multipartition parse_key(const BaseRing& ring, const std::string& text);
GrothElement parse_groth_element(const GrothRing& ring, const std::string& text);

}  // namespace wreath
