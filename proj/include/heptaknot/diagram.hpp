#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heptaknot/polygon.hpp"

namespace heptaknot {

// Crossing sign, viewed from the positive side of the projection
// direction, both strands read along their orientation:
//
//        ^   ^                     ^   ^
//         \ /                       \ /
//          \                         /
//         / \                       / \     (strands enter from below)
//
//       sign -1                   sign +1
//
// The over strand is the unbroken diagonal. The sign is +1 exactly when
// the under strand passes right-to-left beneath the over strand, i.e.
// when the 2D frame (over direction, under direction) is positively
// oriented.
struct Crossing {
  int over_arc = 0;
  int under_in_arc = 0;
  int under_out_arc = 0;
  int sign = 0;  // +1 or -1
};

// Combinatorial diagram of a projected polygonal link: arcs are maximal
// overstrand runs, indexed per component in walk order. A knot diagram
// with c >= 1 crossings has exactly c arcs.
struct Diagram {
  int arc_count = 0;
  std::vector<Crossing> crossings;
  std::vector<int> arc_component;

  int component_count() const;
};

// First direction from a seed-determined sequence of integer vectors for
// which the projection of every edge is regular: distinct vertex images,
// no vertex image on another edge's image, no overlapping edge images,
// all crossings transversal double points. All checks are exact.
// Throws exhausted_candidates after 1000 rejections.
Vec3 pick_generic_direction(const Polygon& polygon, std::uint64_t seed);
Vec3 pick_generic_direction(const std::vector<Polygon>& components,
                            std::uint64_t seed);

// Builds the diagram for a direction that passes the checks above;
// throws non_generic_direction on any exact degeneracy.
Diagram project_to_diagram(const Polygon& polygon, const Vec3& direction);
Diagram project_to_diagram(const std::vector<Polygon>& components,
                           const Vec3& direction);

// pick + project in one pass (the seed-picked direction is evaluated only
// once). Used by the classifiers.
Diagram project_with_seed(const std::vector<Polygon>& components,
                          std::uint64_t seed, Vec3* chosen_direction = nullptr);

// Deterministic text dump for golden tests.
std::string render_diagram(const Diagram& diagram);

}  // namespace heptaknot
