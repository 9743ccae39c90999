#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "chipfire/graph.hpp"
#include "chipfire/quotient.hpp"
#include "chipfire/words.hpp"

namespace chipfire::io {

using Json = nlohmann::ordered_json;

std::string read_file(const std::filesystem::path& path);

/// {"vertices":[{"id":"v1","weight":2},...],"edges":[{"u":"v1","v":"v3","weight":1,"mult":1},...]}
/// "weight" and "mult" default to 1; unknown keys are ignored.
GraphDescription parse_graph(std::string_view text);
WeightedGraph load_graph(const std::filesystem::path& path);
Json graph_to_json(const WeightedGraph& g);

/// {"v1":1,"v2":0,...}: every vertex id exactly once.
Divisor parse_divisor(const WeightedGraph& g, std::string_view text);
Divisor load_divisor(const WeightedGraph& g, const std::filesystem::path& path);
Json divisor_to_json(const WeightedGraph& g, const IntVector& d);

/// {"generators":[{"vertices":{"v1":"v4",...},"half_edges":{"e0a":"e3b",...}}]}
ActionDescription parse_action(std::string_view text);
ActionDescription load_action(const std::filesystem::path& path);

Json word_to_json(const WeightedGraph& g, const Word& w);

/// Undirected DOT with vertex size and edge penwidth growing with weight;
/// divisor values, when given, become part of the vertex labels.
std::string to_dot(const WeightedGraph& g, const IntVector* divisor = nullptr, std::string_view name = "G");

}  // namespace chipfire::io
