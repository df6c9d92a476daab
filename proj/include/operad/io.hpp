#pragma once

#include <string>

#include "operad/opoly.hpp"

namespace operad {

// Line-oriented presentation files (.oprd):
//   operad <name>
//   kind shuffle|nonsymmetric|symmetric
//   generator <id> arity <k> degree <0|1> [weight <w>]
//             [action sign(+1)|sign(-1)|table s1=+g s2=-g ...]
//   relation <rational combination of monomials>
//   # comment
presentation parse_presentation(const std::string& text, const order_spec& os);

std::string serialize_presentation(const presentation& p);

// Parses a polynomial in the relation syntax against an existing presentation.
opoly parse_polynomial(const std::string& text, const presentation& p, const order_spec& os);

}  // namespace operad
