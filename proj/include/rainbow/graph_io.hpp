#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Parse the edge-list format: first non-comment line "n m", then m lines "u v".
/// Lines starting with '#' and blank lines are skipped. Throws ParseError.
Graph parse_graph(std::string_view text);

/// Canonical serialisation: header, then edges in lexicographic order, u < v.
std::string format_graph(const Graph& g);

std::string read_text_file(const std::filesystem::path& path);

/// Write via a sibling temp file and rename, so readers never see a partial file.
void write_text_file_atomic(const std::filesystem::path& path, std::string_view content);

Graph read_graph_file(const std::filesystem::path& path);

}  // namespace rainbow
