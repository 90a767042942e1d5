#pragma once

#include "flatlab/triangulation.hpp"

namespace flatlab {

// Delaunay cell decomposition: triangles merged across cocircular interior
// edges into maximal inscribed polygons.  Flip-choice independent, which is
// what makes the canonical code well-defined on cocircular configurations.
struct CellComplex {
  struct Edge {
    Vec2 vec;
    int partner_cell;
    int partner_pos;
  };
  std::vector<std::vector<Edge>> cells;  // counter-clockwise boundary cycles
};

CellComplex delaunay_cells(const MarkedTriangulation& tri);

// Breadth-first edge-labeled code of the cell complex, minimized over all
// (cell, edge) starting flags.  Encodes translation equivalence only.
std::string canonical_code(const TranslationSurface& s);

// True iff a translation equivalence exists between the two surfaces.
bool equivalent(const TranslationSurface& a, const TranslationSurface& b);

}  // namespace flatlab
