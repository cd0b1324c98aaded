#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "copsrob/graph.hpp"

namespace copsrob {

/// Text edge-list format:
///
///     # optional comment lines anywhere
///     n m
///     u v        (m lines, 0 <= u < v < n)
///
/// Repeated edge lines are merged and reported as warnings.
struct LoadedGraph {
  Graph graph;
  std::vector<std::string> warnings;
};

/// Throws ParseError carrying the 1-based line number.
LoadedGraph read_graph(std::istream& in);
LoadedGraph load_graph(const std::filesystem::path& path);

void write_graph(std::ostream& out, const Graph& g);
void save_graph(const Graph& g, const std::filesystem::path& path);

}  // namespace copsrob
