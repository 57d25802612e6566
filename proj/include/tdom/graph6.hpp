#pragma once

// graph6 exchange format (as used by nauty's geng/showg) and a plain
// edge-list text format for hand-written fixtures.

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "tdom/graph.hpp"

namespace tdom {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Decodes one graph6 string. An optional ">>graph6<<" header and trailing
/// whitespace are accepted; anything else malformed throws ParseError.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// Reads every non-empty line of `in` as graph6.
std::vector<Graph> read_graph6_lines(std::istream& in);

/// "u v" per line, 0-indexed; '#' starts a comment. The order is one more
/// than the largest vertex id mentioned.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// Picks graph6 or edge-list decoding by looking at the first content line.
Graph parse_graph_text(std::string_view text);

}  // namespace tdom
