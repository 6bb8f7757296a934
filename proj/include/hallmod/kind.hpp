#pragma once

#include <string>

namespace hallmod {

/// Which pairing a module carries. Classical is also called "nopairing" for measures.
enum class Kind { Classical, Alternating, Hermitian };

std::string to_string(Kind k);  // "classical", "alternating", "hermitian"
/// Accepts the three names above plus "nopairing"; throws ParseError.
Kind parse_kind(const std::string& s);

}  // namespace hallmod
