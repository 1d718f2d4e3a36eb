#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "fi1/element.hpp"

namespace fi1 {

// The Munn tree of an element: a directed path of left + right + 1 vertices.
struct MunnDiagram {
  std::int64_t vertices;
  std::int64_t initial;   // offset of the initial vertex from the left end
  std::int64_t terminal;  // offset of the terminal vertex from the left end
  std::string dot;
  // One character per vertex joined by '-': 'i' initial, 't' terminal,
  // '*' both, 'o' otherwise.
  std::string ascii;
};

MunnDiagram render_munn(Element const& e);

// The idempotents (-a, 0, b) with a <= amax, b <= bmax as a Hasse diagram,
// one rank per D-class. Idempotents in `marked` are filled red.
std::string render_lattice_dot(std::int64_t amax, std::int64_t bmax,
                               std::set<Element> const& marked = {});

}  // namespace fi1
