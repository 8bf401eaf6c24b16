#pragma once

#include <string>
#include <string_view>

#include "hamcon/multigraph.hpp"

namespace hamcon {

// graph6 and sparse6 follow the byte formats published with nauty. Decoders
// accept an optional >>graph6<< / >>sparse6<< header and a trailing newline;
// failures throw Error(Parse).

std::string encode_graph6(const SimpleGraph& g);
SimpleGraph decode_graph6(std::string_view line);

// Edges are written sorted by (larger endpoint, smaller endpoint), so decode
// returns them in that order. Loops and parallel edges survive.
std::string encode_sparse6(const Multigraph& g);
Multigraph decode_sparse6(std::string_view line);

// "n m" header, then m lines "u v". '#' starts a comment. Repeated lines are
// parallel edges and "u u" is a loop. Edge order is preserved.
std::string encode_edgelist(const Multigraph& g);
Multigraph decode_edgelist(std::string_view text);

}  // namespace hamcon
