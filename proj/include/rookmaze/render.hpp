#pragma once

#include <string>

#include "rookmaze/maze.hpp"

namespace rookmaze {

enum class RenderFormat { Ascii, Svg };

RenderFormat render_format_from_string(const std::string& s);

// Deterministic drawing of a valid maze. ASCII uses one character per cell:
// '|' and '-' for straight pieces, 'x'/'o' for corners, '.' for empty cells.
std::string render(const Maze& m, RenderFormat format);

}  // namespace rookmaze
