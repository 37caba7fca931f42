#pragma once

#include <string>
#include <string_view>

#include "mapforge/rotation_map.hpp"
#include "mapforge/simple_graph.hpp"

namespace mapforge {

/// {"sigma":[...],"root":0}
std::string map_to_json(const RotationMap& m);
RotationMap map_from_json(std::string_view text);

/// "n m" header, then one "u v" line per edge with u <= v, sorted.
std::string graph_to_edge_list(const SimpleGraph& g);
SimpleGraph graph_from_edge_list(std::string_view text, bool multigraph = false);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace mapforge
