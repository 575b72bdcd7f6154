#pragma once

#include <string>
#include <vector>

#include "symdyn/gluing.hpp"
#include "symdyn/nillab.hpp"

namespace symdyn {

// P2 with gray level floor(255 i / (k - 1)); image row r is diagram row r.
std::string render_pgm(const Diagram& d, int symbols);
// One rect per nonzero cell, same gray levels, `cell` pixels per cell.
std::string render_svg(const Diagram& d, int symbols, int cell = 4);

// Rows of a finite window of a Z^2 pattern, top row = largest y; missing cells are 0.
Diagram window_rows(const Pattern& p, const Rect& window);

}  // namespace symdyn
