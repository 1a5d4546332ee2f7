#include "heptaknot/geometry.hpp"

#include <cstdint>

#include "heptaknot/errors.hpp"

namespace heptaknot {

namespace {

using int128 = __int128;

// Integer coordinates below this magnitude keep the 3x3 difference
// determinant inside 128 bits with room to spare.
constexpr long kFastPathLimit = 1LL << 40;

bool small_integer(const Rational& q, long& out) {
  if (mpz_cmp_ui(q.get_den().get_mpz_t(), 1) != 0) return false;
  const mpz_class& num = q.get_num();
  if (!num.fits_slong_p()) return false;
  long v = num.get_si();
  if (v >= kFastPathLimit || v <= -kFastPathLimit) return false;
  out = v;
  return true;
}

bool gather_small(const Point3& p, long* out) {
  return small_integer(p.x, out[0]) && small_integer(p.y, out[1]) &&
         small_integer(p.z, out[2]);
}

Sign sign_of_int128(int128 v) {
  return v > 0 ? sign_positive : (v < 0 ? sign_negative : sign_zero);
}

}  // namespace

Vec3 sub(const Point3& a, const Point3& b) {
  return Vec3{a.x - b.x, a.y - b.y, a.z - b.z};
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return Vec3{a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z,
              a.x * b.y - a.y * b.x};
}

Rational dot(const Vec3& a, const Vec3& b) {
  Rational r = a.x * b.x;
  r += a.y * b.y;
  r += a.z * b.z;
  return r;
}

Sign orient3d(const Point3& a, const Point3& b, const Point3& c,
              const Point3& d) {
  long pa[3], pb[3], pc[3], pd[3];
  if (gather_small(a, pa) && gather_small(b, pb) && gather_small(c, pc) &&
      gather_small(d, pd)) {
    const int128 ux = pb[0] - pa[0], uy = pb[1] - pa[1], uz = pb[2] - pa[2];
    const int128 vx = pc[0] - pa[0], vy = pc[1] - pa[1], vz = pc[2] - pa[2];
    const int128 wx = pd[0] - pa[0], wy = pd[1] - pa[1], wz = pd[2] - pa[2];
    const int128 det = ux * (vy * wz - vz * wy) - uy * (vx * wz - vz * wx) +
                       uz * (vx * wy - vy * wx);
    return sign_of_int128(det);
  }

  const Vec3 u = sub(b, a);
  const Vec3 v = sub(c, a);
  const Vec3 w = sub(d, a);
  Rational det = dot(u, cross(v, w));
  return static_cast<Sign>(sign_int(det));
}

Sign side_of_plane(const Point3& a, const Point3& b, const Point3& c,
                   const Point3& p) {
  const Vec3 n = cross(sub(b, a), sub(c, a));
  if (sign_int(n.x) == 0 && sign_int(n.y) == 0 && sign_int(n.z) == 0) {
    fail(ErrorCode::collinear_triangle,
         "plane-side query against collinear triangle");
  }
  return orient3d(a, b, c, p);
}

Sign penetration_sign(const Point3& t1, const Point3& t2, const Point3& t3,
                      const Point3& j, const Point3& k) {
  const Sign side_j = orient3d(t1, t2, t3, j);
  const Sign side_k = orient3d(t1, t2, t3, k);
  if (side_j == sign_zero || side_k == sign_zero) {
    fail(ErrorCode::degenerate_input,
         "segment endpoint lies on the triangle plane");
  }
  if (side_j == side_k) return sign_zero;

  // The segment crosses the plane; it pierces the triangle interior
  // exactly when the segment sees the three triangle edges with one
  // consistent orientation.
  const Sign e1 = orient3d(t1, t2, j, k);
  const Sign e2 = orient3d(t2, t3, j, k);
  const Sign e3 = orient3d(t3, t1, j, k);
  if (e1 == sign_zero || e2 == sign_zero || e3 == sign_zero) {
    fail(ErrorCode::degenerate_input, "segment meets triangle boundary");
  }
  if (e1 != e2 || e2 != e3) return sign_zero;

  // Sign of normal . (k - j); the endpoint sides already encode it.
  return side_k;
}

std::optional<std::array<int, 4>> general_position_violation(
    std::span<const Point3> points) {
  const int n = static_cast<int>(points.size());
  if (n < 4) {
    fail(ErrorCode::too_few_points,
         "general position needs at least 4 points");
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          if (orient3d(points[a], points[b], points[c], points[d]) ==
              sign_zero) {
            return std::array<int, 4>{a, b, c, d};
          }
        }
  return std::nullopt;
}

}  // namespace heptaknot
