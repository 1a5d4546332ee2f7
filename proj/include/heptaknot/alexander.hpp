#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heptaknot/diagram.hpp"
#include "heptaknot/polygon.hpp"

namespace heptaknot {

// Integer polynomial, coefficients by ascending degree, normalized by a
// unit +-t^k so the constant term is the lowest term and positive.
struct IntPolynomial {
  std::vector<long long> coefficients;

  bool operator==(const IntPolynomial&) const = default;
};

std::string polynomial_text(const IntPolynomial& p);  // e.g. "1-3t+t^2"

enum class KnotClass { unknot, trefoil, figure8 };

const char* knot_class_name(KnotClass c);

// Alexander polynomial from the crossing/arc presentation: one row per
// crossing, one column per arc. A positive crossing with over-arc k,
// incoming under-arc i and outgoing under-arc j contributes t to column
// i, -1 to column j and 1-t to column k; a negative crossing contributes
// 1, -t and t-1. One column and one redundant row are deleted before the
// determinant; the result is deletion-independent up to the unit
// normalization. A 0-crossing diagram yields the constant 1.
IntPolynomial alexander_polynomial(const Diagram& d);
IntPolynomial alexander_polynomial(const Diagram& d, int deleted_column,
                                   int deleted_row);

// |alexander at t = -1|, computed directly as an integer determinant.
long long knot_determinant(const Diagram& d);

// Half the signed count of crossings between the two components.
int linking_number(const Diagram& d);

// Complete classification for polygons with at most 7 edges, where the
// determinant values 1, 3, 5 decide unknot / trefoil / figure-8 (either
// chirality). Any other value reports unexpected_determinant: it cannot
// come from a valid input, only from a bug.
KnotClass knot_class_from_determinant(long long det);
KnotClass classify_knot(const Polygon& p, std::uint64_t seed = 0);

// Census-internal variant that skips re-validating the polygon.
KnotClass classify_knot_prevalidated(const Polygon& p, std::uint64_t seed = 0);

}  // namespace heptaknot
