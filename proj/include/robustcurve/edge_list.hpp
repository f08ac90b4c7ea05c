#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "robustcurve/graph.hpp"

namespace robustcurve {

struct EdgeListImport {
    Graph graph;
    /// Original label of each node, indexed by remapped id.
    std::vector<std::string> labels;
    std::size_t duplicates_dropped = 0;
    std::size_t self_loops_dropped = 0;
};

/// Parses whitespace-separated "u v" lines. Lines starting with '#' or '%'
/// and blank lines are skipped; columns after the second are ignored. Labels
/// are remapped to 0..N-1 in order of first appearance.
/// Throws FormatError for a line with fewer than two fields or when no edge
/// line is present.
EdgeListImport read_edge_list(std::istream& in);
EdgeListImport read_edge_list(const std::filesystem::path& path);

/// Writes a "# nodes N edges M" comment followed by one "u v" line per edge.
/// Isolated nodes are not representable in this format.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace robustcurve
