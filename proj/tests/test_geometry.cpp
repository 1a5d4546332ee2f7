#include <doctest.h>

#include <array>

#include "heptaknot/errors.hpp"
#include "heptaknot/geometry.hpp"
#include "heptaknot/rng.hpp"
#include "support/oracles.hpp"

using namespace heptaknot;
using heptaknot::testing::epsilon_oracle;
using heptaknot::testing::random_int_point;
using heptaknot::testing::random_rational_point;

namespace {

const Point3 kOrigin{0, 0, 0};
const Point3 kEx{1, 0, 0};
const Point3 kEy{0, 1, 0};
const Point3 kEz{0, 0, 1};

}  // namespace

TEST_CASE("orient3d on the unit tetrahedron") {
  CHECK(orient3d(kOrigin, kEx, kEy, kEz) == sign_positive);
  CHECK(orient3d(kOrigin, kEy, kEx, kEz) == sign_negative);
  CHECK(orient3d(kOrigin, kEx, kEy, Point3{1, 1, 0}) == sign_zero);
}

TEST_CASE("orient3d is antisymmetric under any transposition") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::array<Point3, 4> pts;
    for (auto& p : pts) p = random_rational_point(rng, 20, 6);
    const Sign base = orient3d(pts[0], pts[1], pts[2], pts[3]);
    auto swapped = [&](int i, int j) {
      std::array<Point3, 4> q = pts;
      std::swap(q[i], q[j]);
      return orient3d(q[0], q[1], q[2], q[3]);
    };
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        CHECK(static_cast<int>(swapped(i, j)) == -static_cast<int>(base));
      }
    }
  }
}

TEST_CASE("fast integer path agrees with rational arithmetic") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    std::array<Point3, 4> pts;
    for (auto& p : pts) p = random_int_point(rng, -1000, 1000);
    const Sign fast = orient3d(pts[0], pts[1], pts[2], pts[3]);
    // Scaling all coordinates by 1/3 forces the slow path and must not
    // change any sign.
    std::array<Point3, 4> scaled = pts;
    for (auto& p : scaled) {
      p.x /= 3;
      p.y /= 3;
      p.z /= 3;
    }
    CHECK(orient3d(scaled[0], scaled[1], scaled[2], scaled[3]) == fast);
  }
}

TEST_CASE("side_of_plane basics") {
  CHECK(side_of_plane(kOrigin, kEx, kEy, Point3{0, 0, 1}) == sign_positive);
  CHECK(side_of_plane(kOrigin, kEx, kEy, Point3{0, 0, -1}) == sign_negative);
  CHECK(side_of_plane(kOrigin, kEx, kEy, Point3{5, 7, 0}) == sign_zero);
  CHECK_THROWS_AS(
      side_of_plane(kOrigin, kEx, Point3{2, 0, 0}, kEz), Error);
}

TEST_CASE("penetration sign on a concrete piercing segment") {
  const Point3 t1{0, 0, 0}, t2{4, 0, 0}, t3{0, 4, 0};
  const Point3 j{1, 1, -1}, k{1, 1, 2};
  CHECK(penetration_sign(t1, t2, t3, j, k) == sign_positive);
  CHECK(epsilon_oracle(t1, t2, t3, j, k) == sign_positive);
  CHECK(penetration_sign(t1, t2, t3, k, j) == sign_negative);

  // Both endpoints above the plane: no crossing.
  CHECK(penetration_sign(t1, t2, t3, Point3{1, 1, 1}, Point3{2, 1, 3}) ==
        sign_zero);
}

TEST_CASE("penetration sign symmetries") {
  SplitMix64 rng(23);
  int checked = 0;
  while (checked < 200) {
    std::array<Point3, 5> p;
    for (auto& q : p) q = random_int_point(rng, -40, 40);
    if (!in_general_position(p)) continue;
    ++checked;
    const int base =
        static_cast<int>(penetration_sign(p[0], p[1], p[2], p[3], p[4]));
    // Segment reversal flips the sign.
    CHECK(static_cast<int>(penetration_sign(p[0], p[1], p[2], p[4], p[3])) ==
          -base);
    // Cyclic triangle permutations keep it.
    CHECK(static_cast<int>(penetration_sign(p[1], p[2], p[0], p[3], p[4])) ==
          base);
    CHECK(static_cast<int>(penetration_sign(p[2], p[0], p[1], p[3], p[4])) ==
          base);
    // Transpositions flip it.
    CHECK(static_cast<int>(penetration_sign(p[1], p[0], p[2], p[3], p[4])) ==
          -base);
  }
}

TEST_CASE("penetration sign agrees with the parametric oracle") {
  SplitMix64 rng(42);
  int checked = 0;
  long long hits = 0;
  while (checked < 100000) {
    std::array<Point3, 5> p;
    for (auto& q : p) q = random_int_point(rng, -50, 50);
    if (!in_general_position(p)) continue;
    ++checked;
    const Sign lhs = penetration_sign(p[0], p[1], p[2], p[3], p[4]);
    const Sign rhs = epsilon_oracle(p[0], p[1], p[2], p[3], p[4]);
    if (lhs != rhs) {
      REQUIRE(lhs == rhs);  // report the first mismatch loudly
    }
    if (lhs != sign_zero) ++hits;
  }
  CHECK(checked == 100000);
  CHECK(hits > 0);  // the sample must exercise both outcomes
}

TEST_CASE("degenerate contacts are reported, not guessed") {
  const Point3 t1{0, 0, 0}, t2{4, 0, 0}, t3{0, 4, 0};
  // Endpoint exactly on the triangle plane.
  CHECK_THROWS_AS(
      penetration_sign(t1, t2, t3, Point3{1, 1, 0}, Point3{1, 1, 2}), Error);
  // Crossing through the triangle edge x=0..4, y=0.
  CHECK_THROWS_AS(
      penetration_sign(t1, t2, t3, Point3{2, 0, -1}, Point3{2, 0, 1}), Error);
}

TEST_CASE("general position check") {
  SUBCASE("moment curve points pass") {
    std::vector<Point3> pts;
    for (long t = 1; t <= 7; ++t) {
      pts.push_back(Point3{Rational(t), Rational(t * t), Rational(t * t * t)});
    }
    CHECK(!general_position_violation(pts).has_value());
  }
  SUBCASE("a repeated point violates") {
    std::vector<Point3> pts = {kOrigin, kEx, kEy, kEz, kEx};
    auto v = general_position_violation(pts);
    REQUIRE(v.has_value());
    CHECK(*v == std::array<int, 4>{0, 1, 2, 4});
  }
  SUBCASE("four coplanar points are reported lexicographically first") {
    std::vector<Point3> pts = {kOrigin, kEx, kEy, Point3{1, 1, 0},
                               Point3{3, 5, 7}};
    auto v = general_position_violation(pts);
    REQUIRE(v.has_value());
    CHECK(*v == std::array<int, 4>{0, 1, 2, 3});
  }
  SUBCASE("too few points") {
    std::vector<Point3> pts = {kOrigin, kEx, kEy};
    CHECK_THROWS_AS(general_position_violation(pts), Error);
  }
}
