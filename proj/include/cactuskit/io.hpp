#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cactuskit/graph.hpp"
#include "cactuskit/spanning_tree.hpp"

namespace cactus {

// Graph file:
//   # comment
//   p <n> <m>
//   e <u> <v>      (exactly m lines, 0-based)
// Throws SyntaxError("line N: ...") or the build errors of Graph.
Graph parse_graph_file(std::string_view text);

// Canonical form: header then one edge line per edge, in id order.
std::string write_graph_file(const Graph& g);

// Tree file: n-1 lines "e <u> <v>", each an edge of g; comments allowed.
SpanningTree parse_tree_file(std::string_view text, const Graph& g);

std::string write_tree_file(const SpanningTree& t);

std::string read_text_file(const std::filesystem::path& path);

// Writes to a sibling temporary file, then renames over `path`.
void write_text_file_atomic(const std::filesystem::path& path, std::string_view text);

}  // namespace cactus
