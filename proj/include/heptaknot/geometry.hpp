#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "heptaknot/rational.hpp"

namespace heptaknot {

enum Sign : int {
  sign_negative = -1,
  sign_zero = 0,
  sign_positive = 1,
};

inline Sign sign_of_int(int v) {
  return v > 0 ? sign_positive : (v < 0 ? sign_negative : sign_zero);
}

struct Point3 {
  Rational x, y, z;

  bool operator==(const Point3& other) const {
    return x == other.x && y == other.y && z == other.z;
  }
};

using Vec3 = Point3;

Vec3 sub(const Point3& a, const Point3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
Rational dot(const Vec3& a, const Vec3& b);

// Sign of det[b-a, c-a, d-a]; zero exactly when the four points are
// coplanar. Antisymmetric under swapping any two arguments.
Sign orient3d(const Point3& a, const Point3& b, const Point3& c,
              const Point3& d);

// Side of p relative to the plane through a, b, c, oriented by the normal
// (b-a) x (c-a). Throws collinear_triangle when a, b, c span no plane.
Sign side_of_plane(const Point3& a, const Point3& b, const Point3& c,
                   const Point3& p);

// Signed crossing of segment jk through triangle t1 t2 t3: zero when the
// closed segment misses the closed triangle, otherwise the sign of the
// triangle normal dotted with the segment direction k-j. Any boundary
// contact (some orientation test evaluating to zero) is reported as
// degenerate_input rather than resolved by convention; inputs in general
// position never hit it.
Sign penetration_sign(const Point3& t1, const Point3& t2, const Point3& t3,
                      const Point3& j, const Point3& k);

// nullopt when every 4-subset is non-coplanar; otherwise the
// lexicographically first offending 4-subset. Throws too_few_points for
// fewer than 4 points.
std::optional<std::array<int, 4>> general_position_violation(
    std::span<const Point3> points);

inline bool in_general_position(std::span<const Point3> points) {
  return !general_position_violation(points).has_value();
}

}  // namespace heptaknot
