#pragma once

#include <vector>

#include "heptaknot/geometry.hpp"

namespace heptaknot {

// Closed polygonal cycle: edge i runs from vertices[i] to
// vertices[(i+1) % n].
struct Polygon {
  std::vector<Point3> vertices;

  int size() const { return static_cast<int>(vertices.size()); }
};

constexpr int kMaxPolygonVertices = 12;

// A polygon is accepted as a knot when it has 3..12 vertices and its
// vertex set is in general position (no four coplanar; for a triangle,
// not collinear). General position already forces all vertices distinct
// and edges meeting only at shared endpoints.
void validate_knot_polygon(const Polygon& p);

}  // namespace heptaknot
