#pragma once

#include <string>
#include <string_view>

#include "isolation/graph.hpp"

namespace isolab {

/// graph6 text for g, without a trailing newline. Orders up to 62 use the
/// one-byte header, 63 and 64 the four-byte "~" form.
std::string graph6_encode(const Graph& g);

/// Parses one graph6 line. A trailing '\n' or "\r\n" and a leading
/// ">>graph6<<" header are accepted. Throws Graph6Error on a malformed header,
/// characters outside '?'..'~', a wrong body length, or nonzero padding; throws
/// SizeCapError for orders above 64.
Graph graph6_decode(std::string_view text);

}  // namespace isolab
