#include <doctest.h>

#include "heptaknot/census.hpp"
#include "heptaknot/diagram.hpp"
#include "heptaknot/errors.hpp"
#include "support/fixtures.hpp"

using namespace heptaknot;
using heptaknot::testing::load_polygon;
using heptaknot::testing::moment_curve;

TEST_CASE("convex planar polygon seen from above has no crossings") {
  // Convex hexagon with small distinct heights keeping the vertex set in
  // general position.
  Polygon p;
  p.vertices = {Point3{2, 0, Rational(1, 101)},
                Point3{1, 2, Rational(2, 103)},
                Point3{-1, 2, Rational(3, 107)},
                Point3{-2, 0, Rational(4, 109)},
                Point3{-1, -2, Rational(5, 113)},
                Point3{1, -2, Rational(6, 127)}};
  REQUIRE(in_general_position(p.vertices));
  const Diagram d = project_to_diagram(p, Vec3{0, 0, 1});
  CHECK(d.crossings.empty());
  CHECK(d.arc_count == 1);
  CHECK(d.component_count() == 1);
}

TEST_CASE("direction picking is deterministic and self-checking") {
  const Polygon m = moment_curve(7);
  const Vec3 d1 = pick_generic_direction(m, 0);
  const Vec3 d2 = pick_generic_direction(m, 0);
  CHECK(d1.x == d2.x);
  CHECK(d1.y == d2.y);
  CHECK(d1.z == d2.z);
  // The accepted direction projects to a diagram without complaint.
  CHECK_NOTHROW(project_to_diagram(m, d1));
}

TEST_CASE("a direction parallel to an edge is rejected") {
  Polygon p;
  p.vertices = {Point3{0, 0, 0}, Point3{4, 0, 0}, Point3{1, 3, 1},
                Point3{2, 1, 5}};
  REQUIRE(in_general_position(p.vertices));
  // Along the first edge the two endpoints collide in the image.
  CHECK_THROWS_AS(project_to_diagram(p, Vec3{1, 0, 0}), Error);
  try {
    project_to_diagram(p, Vec3{1, 0, 0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::non_generic_direction);
  }
}

TEST_CASE("trefoil diagrams have at least three crossings") {
  const Diagram d =
      project_with_seed({load_polygon("trefoil_hexagon.json")}, 0);
  CHECK(d.crossings.size() >= 3);
}

TEST_CASE("degenerate polygons exhaust the candidate directions") {
  // A repeated vertex collides in every projection.
  Polygon p;
  p.vertices = {Point3{0, 0, 0}, Point3{4, 0, 1}, Point3{0, 0, 0},
                Point3{1, 5, 2}};
  CHECK_THROWS_AS(pick_generic_direction(p, 0), Error);
  try {
    pick_generic_direction(p, 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::exhausted_candidates);
  }
}

TEST_CASE("heptagon diagrams stay within the pair bound") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Polygon p{sample_embedding(7, seed).points};
    const Diagram d = project_with_seed({p}, 0);
    CHECK(d.crossings.size() <= 14);
    if (!d.crossings.empty()) {
      CHECK(d.arc_count == static_cast<int>(d.crossings.size()));
    } else {
      CHECK(d.arc_count == 1);
    }
    for (const Crossing& c : d.crossings) {
      CHECK(c.over_arc >= 0);
      CHECK(c.over_arc < d.arc_count);
      CHECK(c.under_in_arc >= 0);
      CHECK(c.under_in_arc < d.arc_count);
      CHECK(c.under_out_arc >= 0);
      CHECK(c.under_out_arc < d.arc_count);
      CHECK((c.sign == 1 || c.sign == -1));
    }
  }
}

TEST_CASE("figure-8 fixture diagram dump is stable") {
  const Polygon f8 = load_polygon("figure8_heptagon.json");
  Vec3 dir;
  const Diagram d = project_with_seed({f8}, 0, &dir);
  CHECK(rational_to_string(dir.x) == "-15");
  CHECK(rational_to_string(dir.y) == "5");
  CHECK(rational_to_string(dir.z) == "-15");
  CHECK(render_diagram(d) ==
        "arcs 8\n"
        "arc 0 component 0\n"
        "arc 1 component 0\n"
        "arc 2 component 0\n"
        "arc 3 component 0\n"
        "arc 4 component 0\n"
        "arc 5 component 0\n"
        "arc 6 component 0\n"
        "arc 7 component 0\n"
        "crossings 8\n"
        "crossing 0 over 4 under_in 0 under_out 1 sign -1\n"
        "crossing 1 over 0 under_in 1 under_out 2 sign +1\n"
        "crossing 2 over 1 under_in 2 under_out 3 sign -1\n"
        "crossing 3 over 4 under_in 3 under_out 4 sign +1\n"
        "crossing 4 over 0 under_in 4 under_out 5 sign -1\n"
        "crossing 5 over 1 under_in 5 under_out 6 sign +1\n"
        "crossing 6 over 1 under_in 6 under_out 7 sign -1\n"
        "crossing 7 over 1 under_in 7 under_out 0 sign +1\n");
}

TEST_CASE("two-component scenes carry a component map") {
  std::vector<Polygon> hopf(2);
  hopf[0].vertices = {Point3{0, 0, 0}, Point3{4, 0, 0}, Point3{0, 4, 0}};
  hopf[1].vertices = {Point3{1, 1, 1}, Point3{1, 1, -1}, Point3{10, 10, 1}};
  const Diagram d = project_with_seed(hopf, 0);
  CHECK(d.component_count() == 2);
  int mixed = 0;
  for (const Crossing& c : d.crossings) {
    if (d.arc_component[c.over_arc] != d.arc_component[c.under_in_arc]) {
      ++mixed;
    }
  }
  CHECK(mixed >= 2);  // linked circles must cross in any diagram
}
