#pragma once

#include <string>
#include <string_view>

#include "plumb/graph.hpp"

namespace plumb {

/// Reads the JSON graph format
///   {"vertices": [{"id": 1, "genus": 0, "self_int": -2}, ...],
///    "edges": [[1, 2], ...]}
/// where self_int may also be the string "inf". Syntax errors throw
/// ParseError with "line L, column C"; shape and graph errors throw
/// ValidationError naming the JSON path or the vertices involved.
PlumbingGraph parse_graph(std::string_view text);

/// Throws std::runtime_error if the file cannot be read.
std::string read_file(const std::string& path);

/// Canonical text: one vertex per line, edges on one line, trailing newline.
std::string emit_graph(const PlumbingGraph& g);

}  // namespace plumb
