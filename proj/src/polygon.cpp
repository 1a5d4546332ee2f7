#include "heptaknot/polygon.hpp"

#include <string>

#include "heptaknot/errors.hpp"

namespace heptaknot {

void validate_knot_polygon(const Polygon& p) {
  const int n = p.size();
  if (n < 3) {
    fail(ErrorCode::validation, "a polygonal knot needs at least 3 vertices");
  }
  if (n > kMaxPolygonVertices) {
    fail(ErrorCode::unsupported_size,
         "polygons above " + std::to_string(kMaxPolygonVertices) +
             " vertices are not supported");
  }
  if (n == 3) {
    const Vec3 normal =
        cross(sub(p.vertices[1], p.vertices[0]),
              sub(p.vertices[2], p.vertices[0]));
    if (sign_int(normal.x) == 0 && sign_int(normal.y) == 0 &&
        sign_int(normal.z) == 0) {
      fail(ErrorCode::validation, "triangle vertices are collinear");
    }
    return;
  }
  if (auto violation = general_position_violation(p.vertices)) {
    const auto& v = *violation;
    fail(ErrorCode::validation,
         "vertices not in general position: coplanar 4-subset {" +
             std::to_string(v[0]) + ", " + std::to_string(v[1]) + ", " +
             std::to_string(v[2]) + ", " + std::to_string(v[3]) + "}");
  }
}

}  // namespace heptaknot
