#pragma once

#include <string>
#include <string_view>

#include "nsd/graph.hpp"

namespace nsd {

// graph6, short form only (n < 63). The adjacency upper triangle is read
// column by column: (0,1),(0,2),(1,2),(0,3),... packed six bits per byte,
// each byte offset by 63, final group zero-padded.

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

/// Accepts one line with an optional header and an optional trailing newline.
/// Throws Error with InvalidChar, TruncatedBits, TrailingGarbage or
/// Unsupported (long-form size prefix).
Graph parse_graph6(std::string_view text);

/// No header, no newline. Throws Error(TooLarge) for n >= 63.
std::string emit_graph6(const Graph& g);

}  // namespace nsd
