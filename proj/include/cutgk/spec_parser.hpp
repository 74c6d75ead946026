#pragma once

#include <string_view>

#include "cutgk/constructors.hpp"

namespace cutgk {

/// Parses the group-spec DSL, e.g. "DP(MM, SD(Cyc(7),Cyc(3),pow=2))".
/// Whitespace between tokens is ignored. Every node records its source span.
/// Throws SyntaxError (position of the offending character, or one past the
/// end of input) and SemanticError from validate().
GroupSpec parse_spec(std::string_view text);

}  // namespace cutgk
