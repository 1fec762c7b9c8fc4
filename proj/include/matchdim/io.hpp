#pragma once

#include <string>

#include "matchdim/graph.hpp"

namespace matchdim {

enum class GraphFormat { Json, EdgeList, Dot };

/// Parses "json", "edgelist" or "dot" (dot is export-only and rejected by the
/// parsers). Throws on anything else.
GraphFormat parse_format(const std::string& name);

/// Canonical JSON document: {"edges":[[u,v],...],"labels":{...},"n":N} with
/// sorted keys, edge pairs u < v in lexicographic order, no insignificant
/// whitespace. "labels" is omitted when the graph carries none. Byte-identical
/// across runs for equal graphs.
std::string to_json(const Graph& g);

/// Plain text: first line "n <count>", then one "e <u> <v>" line per edge.
/// Labels are not representable in this format.
std::string to_edge_list(const Graph& g);

/// Graphviz export (output only). Every vertex gets a node statement so
/// isolated vertices survive; labels render the display names.
std::string to_dot(const Graph& g);

std::string serialize(const Graph& g, GraphFormat format);

/// Strict parser for the canonical JSON document.
/// Throws std::runtime_error on malformed input.
Graph parse_json(const std::string& text);

/// Parser for the edge-list format; '#' starts a comment, blank lines are
/// ignored, the "n" line must precede all "e" lines.
Graph parse_edge_list(const std::string& text);

/// Auto-detects the format (JSON iff the first significant byte is '{').
Graph parse_graph(const std::string& text);

Graph load_graph_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace matchdim
