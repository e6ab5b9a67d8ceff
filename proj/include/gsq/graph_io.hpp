#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsq/coloring.hpp"
#include "gsq/extremal.hpp"
#include "gsq/graph.hpp"

namespace gsq {

/// An edge-list graph file: `#` comment lines, a line `n m`, then m lines
/// `u v` with 0 <= u < v < n. Blank lines and later comments are ignored.
struct GraphFile {
    Graph graph;
    /// Leading comment lines, text after the '#', kept verbatim.
    std::vector<std::string> header;
};

/// Throws ParseError (1-based line and column) on malformed input, loops,
/// duplicate edges, out-of-range ids and a wrong edge count.
GraphFile parse_graph(const std::string& text);
std::string format_graph(const GraphFile& file);

GraphFile load_graph(const std::string& path);
void save_graph(const std::string& path, const GraphFile& file);

/// One line per vertex, its colors separated by spaces.
ListAssignment parse_lists(const std::string& text);
std::string format_lists(const ListAssignment& lists);

ListAssignment load_lists(const std::string& path);
void save_lists(const std::string& path, const ListAssignment& lists);

/// Comment block describing a construction: a `recipe` line with the
/// parameters, then one `step` line per log entry.
std::vector<std::string> provenance_header(const ConstructionRecipe& recipe);

/// The recipe named by a header's `recipe` line, if any.
std::optional<ConstructionRecipe> recipe_from_header(const std::vector<std::string>& header);

}  // namespace gsq
