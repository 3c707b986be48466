#pragma once

#include <string>
#include <string_view>

#include "eigmult/graph.hpp"

namespace eigmult {

inline constexpr int kMaxGraph6Order = 62;

// Decodes one graph6 record (short form, n <= 62). A leading ">>graph6<<" header and
// a trailing newline are accepted. Throws ParseError naming the offending byte offset.
Graph parse_graph6(std::string_view text);

// Canonical encoding: no header, zero padding, no trailing newline.
std::string emit_graph6(const Graph& g);

}  // namespace eigmult
