#pragma once

#include <array>
#include <string>
#include <vector>

#include "alexdimer/diagram.hpp"

namespace alexdimer {

// Closure of a braid word on `strands` strands, oriented downward.  Letter
// +k is the positive generator crossing strands k and k+1 (1-based), -k its
// inverse.  Crossing ids follow word order; edge ids are 1-based in creation
// order.  Every strand must meet at least one crossing.
LinkDiagram braid_closure(std::string name, int strands,
                          const std::vector<int>& word);

// Best-effort converter from a classic knot PD code: each crossing is
// (a,b,c,d) counterclockwise starting at the incoming under-strand, with
// edges numbered consecutively along the knot.  The over-strand direction is
// recovered from the consecutive numbering; codes where both readings are
// consistent (or neither) are rejected.
LinkDiagram from_pd_code(std::string name,
                         const std::vector<std::array<int, 4>>& code);

}  // namespace alexdimer
