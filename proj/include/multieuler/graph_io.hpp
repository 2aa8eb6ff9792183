#ifndef MULTIEULER_GRAPH_IO_HPP
#define MULTIEULER_GRAPH_IO_HPP

#include <string>

#include "multieuler/graph.hpp"

namespace multieuler {

// Edge-list text format:
//   - blank lines and lines whose first non-space character is '#' are skipped
//   - every other line is `TAIL HEAD [MULT]`, whitespace separated
//   - TAIL/HEAD are tokens over [A-Za-z0-9_], MULT a positive integer (default 1)
// Vertices are registered in first-appearance order; edge ids follow record
// order, with multiplicities expanding to consecutive ids.
// Throws SyntaxError (with line number), BadMultiplicity, EmptyGraph.
DirectedMultigraph parse_graph_file(const std::string& text);

// Inverse of parse_graph_file up to multiplicity grouping: one `TAIL HEAD`
// line per edge in id order. parse_graph_file(dump_graph(g)) reproduces g
// exactly for any g that came from a file (isolated vertices are not
// representable in the format).
std::string dump_graph(const DirectedMultigraph& g);

} // namespace multieuler

#endif // MULTIEULER_GRAPH_IO_HPP
