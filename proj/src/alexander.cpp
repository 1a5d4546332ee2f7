#include "heptaknot/alexander.hpp"

#include <algorithm>
#include <utility>

#include "heptaknot/errors.hpp"

namespace heptaknot {

namespace {

using int128 = __int128;

// Fraction-free elimination; exact over the integers.
mpz_class det_bareiss(std::vector<std::vector<mpz_class>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  int sign = 1;
  mpz_class prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r) {
        if (a[r][k] != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : mpz_class(-a[n - 1][n - 1]);
}

long long det_bareiss_int(std::vector<std::vector<long long>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  int sign = 1;
  long long prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < n; ++r) {
        if (a[r][k] != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return 0;
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        const int128 v = static_cast<int128>(a[i][j]) * a[k][k] -
                         static_cast<int128>(a[i][k]) * a[k][j];
        a[i][j] = static_cast<long long>(v / prev);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

void require_knot(const Diagram& d) {
  if (d.component_count() != 1) {
    fail(ErrorCode::not_a_knot, "diagram has more than one component");
  }
}

// Crossing row at an integer value of t: (under_in, under_out, over)
// receive (t, -1, 1-t) at a positive crossing and (1, -t, t-1) at a
// negative one.
void add_row(std::vector<mpz_class>& row, const Crossing& c, long t_value) {
  if (c.sign > 0) {
    row[c.under_in_arc] += t_value;
    row[c.under_out_arc] += -1;
    row[c.over_arc] += 1 - t_value;
  } else {
    row[c.under_in_arc] += 1;
    row[c.under_out_arc] += -t_value;
    row[c.over_arc] += t_value - 1;
  }
}

mpz_class presentation_determinant(const Diagram& d, long t_value,
                                   int deleted_column, int deleted_row) {
  const int n = static_cast<int>(d.crossings.size());
  std::vector<std::vector<mpz_class>> m;
  m.reserve(n - 1);
  for (int r = 0; r < n; ++r) {
    if (r == deleted_row) continue;
    std::vector<mpz_class> full(n, 0);
    add_row(full, d.crossings[r], t_value);
    std::vector<mpz_class> row;
    row.reserve(n - 1);
    for (int c = 0; c < n; ++c) {
      if (c != deleted_column) row.push_back(std::move(full[c]));
    }
    m.push_back(std::move(row));
  }
  return det_bareiss(std::move(m));
}

IntPolynomial normalize(std::vector<mpz_class> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  std::size_t low = 0;
  while (low < coeffs.size() && coeffs[low] == 0) ++low;
  if (low == coeffs.size()) {
    fail(ErrorCode::internal, "vanishing knot polynomial");
  }
  IntPolynomial out;
  out.coefficients.reserve(coeffs.size() - low);
  const bool flip = coeffs[low] < 0;
  for (std::size_t i = low; i < coeffs.size(); ++i) {
    mpz_class v = flip ? mpz_class(-coeffs[i]) : coeffs[i];
    if (!v.fits_slong_p()) {
      fail(ErrorCode::internal, "polynomial coefficient overflow");
    }
    out.coefficients.push_back(v.get_si());
  }
  return out;
}

}  // namespace

const char* knot_class_name(KnotClass c) {
  switch (c) {
    case KnotClass::unknot:
      return "Unknot";
    case KnotClass::trefoil:
      return "Trefoil";
    case KnotClass::figure8:
      return "Figure8";
  }
  return "?";
}

IntPolynomial alexander_polynomial(const Diagram& d, int deleted_column,
                                   int deleted_row) {
  require_knot(d);
  const int n = static_cast<int>(d.crossings.size());
  if (n == 0) return IntPolynomial{{1}};
  if (d.arc_count != n) {
    fail(ErrorCode::internal, "knot diagram arc/crossing count mismatch");
  }
  if (deleted_column < 0 || deleted_column >= n || deleted_row < 0 ||
      deleted_row >= n) {
    fail(ErrorCode::validation, "deleted row/column out of range");
  }

  // The determinant has degree at most n-1; recover it by exact
  // interpolation from n integer evaluations.
  std::vector<long> t_points(n);
  std::vector<mpz_class> values(n);
  for (int i = 0; i < n; ++i) {
    t_points[i] = i + 2;
    values[i] =
        presentation_determinant(d, t_points[i], deleted_column, deleted_row);
  }

  std::vector<mpq_class> acc(n, 0);
  for (int i = 0; i < n; ++i) {
    // Lagrange basis for node i, built as a running product.
    std::vector<mpq_class> basis = {1};
    mpq_class scale = 1;
    for (int jn = 0; jn < n; ++jn) {
      if (jn == i) continue;
      std::vector<mpq_class> next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k] += basis[k] * mpq_class(-t_points[jn]);
        next[k + 1] += basis[k];
      }
      basis = std::move(next);
      scale *= mpq_class(t_points[i] - t_points[jn]);
    }
    mpq_class weight = mpq_class(values[i]) / scale;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      acc[k] += basis[k] * weight;
    }
  }

  std::vector<mpz_class> coeffs(n);
  for (int k = 0; k < n; ++k) {
    acc[k].canonicalize();
    if (acc[k].get_den() != 1) {
      fail(ErrorCode::internal, "non-integer interpolated coefficient");
    }
    coeffs[k] = acc[k].get_num();
  }
  return normalize(std::move(coeffs));
}

IntPolynomial alexander_polynomial(const Diagram& d) {
  const int n = static_cast<int>(d.crossings.size());
  if (n == 0) return alexander_polynomial(d, 0, 0);
  return alexander_polynomial(d, n - 1, n - 1);
}

long long knot_determinant(const Diagram& d) {
  require_knot(d);
  const int n = static_cast<int>(d.crossings.size());
  if (n == 0) return 1;
  if (d.arc_count != n) {
    fail(ErrorCode::internal, "knot diagram arc/crossing count mismatch");
  }
  std::vector<std::vector<long long>> m(n - 1,
                                        std::vector<long long>(n - 1, 0));
  for (int r = 0; r + 1 < n; ++r) {
    const Crossing& c = d.crossings[r];
    // Row at t = -1, skipping the deleted last column.
    auto bump = [&](int column, long long v) {
      if (column != n - 1) m[r][column] += v;
    };
    if (c.sign > 0) {
      bump(c.under_in_arc, -1);
      bump(c.under_out_arc, -1);
      bump(c.over_arc, 2);
    } else {
      bump(c.under_in_arc, 1);
      bump(c.under_out_arc, 1);
      bump(c.over_arc, -2);
    }
  }
  const long long det = det_bareiss_int(std::move(m));
  return det < 0 ? -det : det;
}

int linking_number(const Diagram& d) {
  if (d.component_count() != 2) {
    fail(ErrorCode::not_two_components,
         "linking number needs exactly 2 components");
  }
  int sum = 0;
  for (const Crossing& c : d.crossings) {
    if (d.arc_component[c.over_arc] != d.arc_component[c.under_in_arc]) {
      sum += c.sign;
    }
  }
  if (sum % 2 != 0) {
    fail(ErrorCode::internal, "odd signed count of mixed crossings");
  }
  return sum / 2;
}

KnotClass knot_class_from_determinant(long long det) {
  switch (det) {
    case 1:
      return KnotClass::unknot;
    case 3:
      return KnotClass::trefoil;
    case 5:
      return KnotClass::figure8;
    default:
      fail(ErrorCode::unexpected_determinant,
           "determinant " + std::to_string(det) +
               " is impossible for polygons with at most 7 edges");
  }
}

KnotClass classify_knot_prevalidated(const Polygon& p, std::uint64_t seed) {
  const Diagram d = project_with_seed({p}, seed);
  return knot_class_from_determinant(knot_determinant(d));
}

KnotClass classify_knot(const Polygon& p, std::uint64_t seed) {
  validate_knot_polygon(p);
  if (p.size() > 7) {
    fail(ErrorCode::validation,
         "determinant classification covers polygons with at most 7 edges");
  }
  return classify_knot_prevalidated(p, seed);
}

std::string polynomial_text(const IntPolynomial& p) {
  std::string out;
  bool first = true;
  for (std::size_t deg = 0; deg < p.coefficients.size(); ++deg) {
    const long long c = p.coefficients[deg];
    if (c == 0) continue;
    const long long mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += '-';
      first = false;
    } else {
      out += c < 0 ? '-' : '+';
    }
    if (deg == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag);
      out += 't';
      if (deg > 1) out += '^' + std::to_string(deg);
    }
  }
  if (first) out = "0";
  return out;
}

}  // namespace heptaknot
