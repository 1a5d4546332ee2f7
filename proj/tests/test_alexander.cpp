#include <doctest.h>

#include "heptaknot/alexander.hpp"
#include "heptaknot/census.hpp"
#include "heptaknot/errors.hpp"
#include "support/fixtures.hpp"

using namespace heptaknot;
using heptaknot::testing::load_polygon;
using heptaknot::testing::moment_curve;

namespace {

const IntPolynomial kOne{{1}};
const IntPolynomial kTrefoilPoly{{1, -1, 1}};
const IntPolynomial kFigure8Poly{{1, -3, 1}};

std::vector<Polygon> hopf_link() {
  std::vector<Polygon> link(2);
  link[0].vertices = {Point3{0, 0, 0}, Point3{4, 0, 0}, Point3{0, 4, 0}};
  link[1].vertices = {Point3{1, 1, 1}, Point3{1, 1, -1}, Point3{10, 10, 1}};
  return link;
}

}  // namespace

TEST_CASE("crossing-free diagram gives the constant polynomial") {
  const Diagram d = project_with_seed({moment_curve(7)}, 0);
  REQUIRE(d.crossings.empty());
  CHECK(alexander_polynomial(d) == kOne);
  CHECK(knot_determinant(d) == 1);
}

TEST_CASE("trefoil and figure-8 fixtures have the pinned invariants") {
  const Diagram t6 = project_with_seed({load_polygon("trefoil_hexagon.json")}, 0);
  CHECK(alexander_polynomial(t6) == kTrefoilPoly);
  CHECK(polynomial_text(alexander_polynomial(t6)) == "1-t+t^2");
  CHECK(knot_determinant(t6) == 3);

  const Diagram f8 =
      project_with_seed({load_polygon("figure8_heptagon.json")}, 0);
  CHECK(alexander_polynomial(f8) == kFigure8Poly);
  CHECK(polynomial_text(alexander_polynomial(f8)) == "1-3t+t^2");
  CHECK(knot_determinant(f8) == 5);
}

TEST_CASE("deleted row and column do not matter") {
  for (const char* name : {"trefoil_hexagon.json", "figure8_heptagon.json",
                           "trefoil_heptagon.json"}) {
    const Diagram d = project_with_seed({load_polygon(name)}, 0);
    const IntPolynomial reference = alexander_polynomial(d);
    const int n = static_cast<int>(d.crossings.size());
    for (int col = 0; col < n; ++col) {
      for (int row : {0, n / 2, n - 1}) {
        CHECK(alexander_polynomial(d, col, row) == reference);
      }
    }
  }
}

TEST_CASE("classification is projection independent") {
  const Polygon f8 = load_polygon("figure8_heptagon.json");
  long long reference = -1;
  int accepted = 0;
  for (std::uint64_t seed = 0; accepted < 6; ++seed) {
    const Diagram d = project_with_seed({f8}, seed);
    const long long det = knot_determinant(d);
    if (reference < 0) reference = det;
    CHECK(det == reference);
    ++accepted;
  }
  CHECK(reference == 5);
}

TEST_CASE("classify_knot on the fixtures") {
  CHECK(classify_knot(moment_curve(7)) == KnotClass::unknot);
  CHECK(classify_knot(load_polygon("trefoil_hexagon.json")) ==
        KnotClass::trefoil);
  CHECK(classify_knot(load_polygon("trefoil_heptagon.json")) ==
        KnotClass::trefoil);
  CHECK(classify_knot(load_polygon("figure8_heptagon.json")) ==
        KnotClass::figure8);
  CHECK(classify_knot(load_polygon("pentagon.json")) == KnotClass::unknot);
}

TEST_CASE("mirror images classify identically") {
  for (const char* name : {"trefoil_hexagon.json", "figure8_heptagon.json"}) {
    Polygon p = load_polygon(name);
    const KnotClass expected = classify_knot(p);
    for (auto& v : p.vertices) v.x = -v.x;
    CHECK(classify_knot(p) == expected);
  }
}

TEST_CASE("polygons beyond 7 vertices are not classified") {
  Polygon p = moment_curve(8);
  CHECK_THROWS_AS(classify_knot(p), Error);
}

TEST_CASE("polygon size limits") {
  CHECK_THROWS_AS(validate_knot_polygon(moment_curve(13)), Error);
  Polygon two;
  two.vertices = {Point3{0, 0, 0}, Point3{1, 0, 0}};
  CHECK_THROWS_AS(validate_knot_polygon(two), Error);
  CHECK_NOTHROW(validate_knot_polygon(moment_curve(12)));
}

TEST_CASE("unexpected determinants are reported as bugs") {
  CHECK_THROWS_AS(knot_class_from_determinant(7), Error);
  CHECK_THROWS_AS(knot_class_from_determinant(0), Error);
}

TEST_CASE("hexagons are unknot or trefoil") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Polygon p{sample_embedding(6, seed).points};
    const KnotClass c = classify_knot(p);
    CHECK((c == KnotClass::unknot || c == KnotClass::trefoil));
  }
}

TEST_CASE("linking number of the hopf configuration") {
  const auto link = hopf_link();
  CHECK(linking_number(project_with_seed(link, 0)) == -1);

  // Reversing one component negates the number.
  auto reversed = link;
  std::swap(reversed[1].vertices[0], reversed[1].vertices[1]);
  CHECK(linking_number(project_with_seed(reversed, 0)) == 1);

  // Symmetric in the two components.
  auto swapped = link;
  std::swap(swapped[0], swapped[1]);
  CHECK(linking_number(project_with_seed(swapped, 0)) == -1);
}

TEST_CASE("split components do not link") {
  std::vector<Polygon> split(2);
  split[0].vertices = {Point3{0, 0, 0}, Point3{4, 0, 1}, Point3{0, 4, 2}};
  split[1].vertices = {Point3{100, 100, 50}, Point3{104, 100, 51},
                       Point3{100, 104, 53}};
  CHECK(linking_number(project_with_seed(split, 0)) == 0);
}

TEST_CASE("linking number needs exactly two components") {
  const Diagram knot = project_with_seed({moment_curve(7)}, 0);
  CHECK_THROWS_AS(linking_number(knot), Error);
}

TEST_CASE("alexander polynomial rejects links") {
  const Diagram d = project_with_seed(hopf_link(), 0);
  CHECK_THROWS_AS(alexander_polynomial(d), Error);
  try {
    alexander_polynomial(d);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_a_knot);
  }
}

TEST_CASE("polynomial text rendering") {
  CHECK(polynomial_text(IntPolynomial{{1}}) == "1");
  CHECK(polynomial_text(IntPolynomial{{1, -1, 1}}) == "1-t+t^2");
  CHECK(polynomial_text(IntPolynomial{{2, 0, -5, 1}}) == "2-5t^2+t^3");
}
