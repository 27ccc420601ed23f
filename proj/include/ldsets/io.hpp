#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ldsets/digraph.hpp"

namespace ldsets {

// Instance text: first non-comment line holds n, then one "u v" arc per
// line. Lines starting with '#' and blank lines are skipped. Throws
// ParseError with the offending line number.
Digraph parse_instance(std::string_view text);

Digraph read_instance_file(const std::string& path);

// Header line n, then arcs in lexicographic order.
std::string render_instance(const Digraph& d);

// Graphviz digraph; members of `highlight` are filled grey.
std::string render_dot(const Digraph& d, const std::optional<VertexList>& highlight = std::nullopt);

std::string join_vertices(const VertexList& set);

}  // namespace ldsets
