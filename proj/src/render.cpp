#include "fi1/render.hpp"

#include <map>
#include <sstream>

#include "fi1/errors.hpp"

namespace fi1 {

MunnDiagram render_munn(Element const& e) {
  MunnDiagram d;
  d.vertices = dclass_index(e) + 1;
  d.initial = e.left();
  d.terminal = e.left() + e.shift();

  std::ostringstream dot;
  dot << "digraph munn {\n";
  dot << "  rankdir=LR;\n";
  dot << "  node [shape=circle, label=\"\", width=0.2];\n";
  dot << "  in [shape=point, style=invis];\n";
  dot << "  out [shape=point, style=invis];\n";
  for (std::int64_t v = 0; v < d.vertices; ++v) {
    dot << "  v" << v;
    if (v == d.initial || v == d.terminal) {
      dot << " [style=filled, fillcolor=black]";
    }
    dot << ";\n";
  }
  for (std::int64_t v = 0; v + 1 < d.vertices; ++v) {
    dot << "  v" << v << " -> v" << v + 1 << ";\n";
  }
  dot << "  in -> v" << d.initial << ";\n";
  dot << "  v" << d.terminal << " -> out;\n";
  dot << "}\n";
  d.dot = dot.str();

  for (std::int64_t v = 0; v < d.vertices; ++v) {
    if (v > 0) {
      d.ascii.push_back('-');
    }
    bool const ini = v == d.initial, ter = v == d.terminal;
    d.ascii.push_back(ini && ter ? '*' : ini ? 'i' : ter ? 't' : 'o');
  }
  return d;
}

std::string render_lattice_dot(std::int64_t amax, std::int64_t bmax,
                               std::set<Element> const& marked) {
  if (amax < 0 || bmax < 0 || amax + bmax == 0) {
    throw DomainError("lattice region must contain an idempotent");
  }
  auto name = [](std::int64_t a, std::int64_t b) {
    return "e_" + std::to_string(a) + "_" + std::to_string(b);
  };
  std::ostringstream dot;
  dot << "graph semilattice {\n";
  dot << "  rankdir=TB;\n";
  dot << "  node [shape=circle, width=0.12, fixedsize=true, label=\"\"];\n";
  std::map<std::int64_t, std::vector<std::string>> ranks;
  for (std::int64_t a = 0; a <= amax; ++a) {
    for (std::int64_t b = 0; b <= bmax; ++b) {
      if (a + b == 0) {
        continue;
      }
      Element const e(a, 0, b);
      dot << "  " << name(a, b) << " [xlabel=\"" << to_string(e) << "\"";
      if (marked.count(e) != 0) {
        dot << ", style=filled, fillcolor=red";
      }
      dot << "];\n";
      ranks[a + b].push_back(name(a, b));
    }
  }
  for (auto const& [level, names] : ranks) {
    dot << "  { rank=same;";
    for (auto const& n : names) {
      dot << " " << n << ";";
    }
    dot << " }\n";
  }
  // Covering pairs: (a, b) lies directly above (a + 1, b) and (a, b + 1).
  for (std::int64_t a = 0; a <= amax; ++a) {
    for (std::int64_t b = 0; b <= bmax; ++b) {
      if (a + b == 0) {
        continue;
      }
      if (a + 1 <= amax) {
        dot << "  " << name(a, b) << " -- " << name(a + 1, b) << ";\n";
      }
      if (b + 1 <= bmax) {
        dot << "  " << name(a, b) << " -- " << name(a, b + 1) << ";\n";
      }
    }
  }
  dot << "}\n";
  return dot.str();
}

}  // namespace fi1
