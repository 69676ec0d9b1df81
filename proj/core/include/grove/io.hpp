#pragma once

#include <iosfwd>
#include <string>

#include "grove/digraph.hpp"

namespace grove {

class OrientedTree;

// Edge-list text format: first non-comment line "n m", then m lines "u v"
// (0-indexed, single space), '#' lines ignored, trailing newline required.
// Duplicate or loop lines are a parse error. Writing emits edges in
// lexicographic order, so output is byte-stable.
std::string to_edge_list(const Digraph& g);
Digraph read_edge_list(std::istream& in);
Digraph read_edge_list(const std::string& text);

// Same format plus the oriented-tree validation pass.
OrientedTree read_oriented_tree(std::istream& in);

// One directed edge per line, vertices named v0..v(n-1), lexicographic order.
std::string to_dot(const Digraph& g);

}  // namespace grove
