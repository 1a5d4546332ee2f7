#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "heptaknot/json_io.hpp"
#include "heptaknot/polygon.hpp"

namespace heptaknot::testing {

inline std::string read_file(const std::string& name) {
  std::ifstream in(std::string(TEST_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline Polygon load_polygon(const std::string& name) {
  return parse_points_json(read_file(name));
}

inline Polygon moment_curve(int n) {
  Polygon p;
  for (long t = 1; t <= n; ++t) {
    p.vertices.push_back(Point3{Rational(t), Rational(t * t),
                                Rational(t * t * t)});
  }
  return p;
}

}  // namespace heptaknot::testing
