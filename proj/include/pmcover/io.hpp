#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "pmcover/instance.hpp"
#include "pmcover/interval.hpp"
#include "pmcover/objectives.hpp"

namespace pmcover {

// Instance files are UTF-8 JSON objects:
//
//   {"version": 1, "n": 3, "sets": [[0, 1], [1, 2]],
//    "weights": [2, 0.5, "1/3"], "names": ["a", "b", "c"]}
//
// "version", "weights" and "names" are optional. Weights may be integers,
// decimals or "p/q" strings and are kept as exact fractions. When "names"
// is present, set members may be given by name instead of id.
// Parse problems throw ParseError, invariant violations ValidationError.
SetSystem setsystem_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const SetSystem& sys);
SetSystem load_instance(const std::filesystem::path& path);
void save_instance(const SetSystem& sys, const std::filesystem::path& path);

// Graph files: {"n": 5, "edges": [[0, 1], ...]} or a DIMACS edge list
// ("p edge n m" then "e u v" lines, 1-based; repeated edges collapse).
Graph graph_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const Graph& g);
Graph parse_dimacs(const std::string& text);
Graph load_graph(const std::filesystem::path& path);

// Interval files: {"intervals": [[l, r], ...]}.
IntervalSet intervals_from_json(const nlohmann::json& doc);
nlohmann::json to_json(const IntervalSet& intervals);
IntervalSet load_intervals(const std::filesystem::path& path);

// Model specs: pmean:<p> (p may be inf or -inf), entropy, unit,
// rob:<beta>, table:<path>, maxmin, max. A table file is a JSON array of
// f(1), f(2), ... or {"values": [...]}.
CostModel parse_model_spec(const std::string& spec);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace pmcover
