#ifndef QUADCDR_LITERAL_HPP
#define QUADCDR_LITERAL_HPP

#include <string_view>
#include <vector>

#include "quadcdr/ideal.hpp"

namespace quadcdr {

/// Parses a comma-separated list of integer linear expressions in `w`
/// (standing for theta), e.g. "2, 1+w" or "3-2*w". Surrounding brackets are
/// accepted, so rendered ideals "[a, b+c*w]" parse back.
///
/// Throws Error(ParseError) with the 0-based offset of the problem.
std::vector<Element> parse_generators(std::string_view text);

/// Throws ParseError, or ZeroIdeal when every generator is zero.
Ideal parse_ideal_literal(const RingSpec& ring, std::string_view text);

}  // namespace quadcdr

#endif
