#pragma once

#include "turanlab/graph.hpp"

#include <string>

namespace turanlab {

// Standard graph6 (printable ASCII, bytes 63..126). Short form covers
// n <= 62; n = 63..64 uses the long form (126 'n' prefix + 18-bit order).
std::string graph6_encode(const Graph& g);

// Strict decode: rejects truncation, trailing bytes, out-of-range bytes and
// nonzero padding bits, naming the byte offset. Orders above the process
// vertex cap raise CapacityError.
Graph graph6_decode(const std::string& text);

} // namespace turanlab
