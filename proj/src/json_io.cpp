#include "heptaknot/json_io.hpp"

#include <cstdint>

#include "heptaknot/errors.hpp"

namespace heptaknot {

namespace {

Rational parse_coordinate(const Json& value) {
  if (value.is_string()) {
    return parse_rational(value.get<std::string>());
  }
  if (value.is_number_integer()) {
    return Rational(static_cast<long>(value.get<std::int64_t>()));
  }
  if (value.is_number_unsigned()) {
    const std::uint64_t u = value.get<std::uint64_t>();
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(u), 0, 0, &u);
    return Rational(z);
  }
  if (value.is_number_float()) {
    return rational_from_double(value.get<double>());
  }
  fail(ErrorCode::parse_error, "coordinate must be a number or string");
}

}  // namespace

Polygon parse_points_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") ||
      !doc["points"].is_array()) {
    fail(ErrorCode::parse_error, "expected an object with a \"points\" array");
  }
  Polygon p;
  for (const Json& row : doc["points"]) {
    if (!row.is_array() || row.size() != 3) {
      fail(ErrorCode::parse_error, "each point must be an [x, y, z] triple");
    }
    p.vertices.push_back(Point3{parse_coordinate(row[0]),
                                parse_coordinate(row[1]),
                                parse_coordinate(row[2])});
  }
  return p;
}

Json points_to_json(std::span<const Point3> points) {
  Json rows = Json::array();
  for (const Point3& p : points) {
    rows.push_back(Json::array({rational_to_string(p.x),
                                rational_to_string(p.y),
                                rational_to_string(p.z)}));
  }
  Json out;
  out["points"] = std::move(rows);
  return out;
}

std::string fingerprint_hex(std::span<const Point3> points) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= static_cast<unsigned char>(';');
    h *= 1099511628211ull;
  };
  for (const Point3& p : points) {
    mix(rational_to_string(p.x));
    mix(rational_to_string(p.y));
    mix(rational_to_string(p.z));
  }
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

Json census_report_to_json(const CensusReport& report) {
  Json out;
  out["n"] = report.n;
  out["fingerprint"] = report.fingerprint;
  out["counts"] = {{"unknot", report.unknot_count},
                   {"trefoil", report.trefoil_count},
                   {"figure8", report.figure8_count}};
  out["c"] = report.stick_knot_count();

  std::string classes;
  classes.reserve(report.cycle_classes.size());
  for (KnotClass c : report.cycle_classes) {
    classes += knot_class_name(c)[0];  // U / T / F
  }
  out["classes"] = std::move(classes);

  Json nontrivial = Json::array();
  const auto cycles = enumerate_cycles(report.n);
  for (std::size_t i = 0; i < report.cycle_classes.size(); ++i) {
    if (report.cycle_classes[i] == KnotClass::unknot) continue;
    nontrivial.push_back({{"cycle", cycles[i]},
                          {"class", knot_class_name(report.cycle_classes[i])}});
  }
  out["nontrivial"] = std::move(nontrivial);
  return out;
}

}  // namespace heptaknot
