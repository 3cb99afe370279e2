#ifndef RLCM_REP_PARSER_HPP_
#define RLCM_REP_PARSER_HPP_

#include <string_view>

#include "rlcm/presentation.hpp"
#include "rlcm/replab.hpp"

namespace rlcm {

// Representation file, '#' starts a comment:
//
//   dim d
//   generator <name>     followed by d rows of d rationals (p or p/q)
//   generator <name>     ...
//
// Generators not listed have no matrix. Throws ParseError for malformed
// text and ValidationError if a defining relation is violated.
Representation<Rational> parse_representation(std::string_view text,
                                              const HomogeneousPresentation& pres);

}  // namespace rlcm

#endif  // RLCM_REP_PARSER_HPP_
