#pragma once

#include <string>

#include <json.hpp>

#include "rookmaze/core.hpp"
#include "rookmaze/maze.hpp"

namespace rookmaze {

using Json = nlohmann::ordered_json;

// Canonical JSON. Walls are written in canonical order; type-IV paths are written from their left end,
// all other kinds from their upper or right end.
Json to_json(const Maze& m);
Json to_json(const RookPlacement& r);
Json to_json(const ColoredPermutation& c);

// Decoders throw DomainError naming the offending field. Maze decoding performs structural checks only.
Maze maze_from_json(const Json& j);
RookPlacement rooks_from_json(const Json& j);
ColoredPermutation cperm_from_json(const Json& j);

std::string encode(const Maze& m);
std::string encode(const RookPlacement& r);
std::string encode(const ColoredPermutation& c);

Maze decode_maze(const std::string& text);
RookPlacement decode_rooks(const std::string& text);
ColoredPermutation decode_cperm(const std::string& text);

// Parses text into JSON, converting syntax errors to DomainError with the byte offset.
Json parse_json(const std::string& text);

}  // namespace rookmaze
