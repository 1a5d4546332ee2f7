#include "heptaknot/heptaknot.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "heptaknot/alexander.hpp"
#include "heptaknot/census.hpp"
#include "heptaknot/diagram.hpp"
#include "heptaknot/errors.hpp"
#include "heptaknot/json_io.hpp"
#include "heptaknot/radon.hpp"

using namespace heptaknot;

struct hk_points {
  std::vector<Point3> points;
};

namespace {

thread_local std::string t_error_message;

hk_status map_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error:
      return HK_ERR_PARSE;
    case ErrorCode::validation:
    case ErrorCode::too_few_points:
    case ErrorCode::collinear_triangle:
    case ErrorCode::unsupported_size:
    case ErrorCode::not_a_knot:
    case ErrorCode::not_two_components:
      return HK_ERR_VALIDATION;
    case ErrorCode::degenerate_input:
    case ErrorCode::non_generic_direction:
    case ErrorCode::exhausted_candidates:
      return HK_ERR_DEGENERATE;
    case ErrorCode::sampling_failure:
      return HK_ERR_SAMPLING;
    case ErrorCode::agreement_failure:
      return HK_ERR_DISAGREEMENT;
    case ErrorCode::unexpected_determinant:
    case ErrorCode::internal:
      return HK_ERR_INTERNAL;
  }
  return HK_ERR_INTERNAL;
}

template <typename Fn>
hk_status guarded(Fn&& fn) {
  try {
    fn();
    t_error_message.clear();
    return HK_OK;
  } catch (const AgreementError& e) {
    t_error_message = std::string(e.what()) + "; repro: " + e.repro_json();
    return HK_ERR_DISAGREEMENT;
  } catch (const Error& e) {
    t_error_message = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    t_error_message = e.what();
    return HK_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Polygon as_polygon(const hk_points* points) {
  Polygon p;
  p.vertices = points->points;
  return p;
}

void require_heptagon_points(const hk_points* points) {
  if (points->points.size() != 7) {
    fail(ErrorCode::validation, "expected exactly 7 points, got " +
                                    std::to_string(points->points.size()));
  }
}

Json rs_match_to_json(const RsMatch& m) {
  return Json{{"pattern", rs_pattern_name(m.pattern)},
              {"base", m.labeling.base},
              {"direction", m.labeling.direction},
              {"sign", m.sign}};
}

Json table_to_json(const PenetrationTable& table) {
  Json rows = Json::array();
  const std::string text = render_table(table);
  std::size_t start = 0;
  for (int r = 0; r < 7; ++r) {
    rows.push_back(text.substr(start, 3));
    start += 4;
  }
  return rows;
}

Json classify_json(const std::vector<Point3>& pts, hk_classify_mode mode,
                   std::uint64_t seed) {
  const int n = static_cast<int>(pts.size());
  Polygon poly{pts};

  Json out;
  out["n"] = n;
  out["seed"] = seed;
  out["fingerprint"] = fingerprint_hex(pts);
  out["knot_class"] = nullptr;
  out["determinant"] = nullptr;
  out["alexander"] = nullptr;
  out["rs_match"] = nullptr;
  out["penetration_table"] = nullptr;

  const bool run_oracle = mode != HK_CLASSIFY_RADON;
  const bool run_radon = mode != HK_CLASSIFY_ORACLE;

  if (mode == HK_CLASSIFY_FULL) {
    out["mode"] = "full";
    if (n < 6) {
      fail(ErrorCode::validation,
           "expected >= 6 points for heptagon/hexagon modes, got " +
               std::to_string(n) + " (use oracle-only mode for smaller polygons)");
    }
    if (n > 7) {
      fail(ErrorCode::validation,
           "full classification covers hexagons and heptagons; use "
           "oracle-only mode for larger polygons");
    }
  } else if (mode == HK_CLASSIFY_ORACLE) {
    out["mode"] = "oracle-only";
  } else {
    out["mode"] = "radon-only";
  }

  validate_knot_polygon(poly);

  std::optional<RsMatch> match;
  if (run_radon) {
    if (n != 7) {
      if (mode == HK_CLASSIFY_RADON) {
        fail(ErrorCode::validation,
             "sign-table classification needs exactly 7 points, got " +
                 std::to_string(n));
      }
    } else {
      match = classify_by_radon(poly);
      out["rs_match"] = match ? rs_match_to_json(*match) : Json(nullptr);
      out["radon_class"] = match ? "Figure8" : "NotFigure8";
      const Labeling shown = match ? match->labeling : Labeling{0, 1};
      out["penetration_table"] = table_to_json(build_table(poly, shown));
      out["table_labeling"] = {{"base", shown.base},
                               {"direction", shown.direction}};
    }
  }

  if (run_oracle) {
    const Diagram d = project_with_seed({poly}, seed);
    const long long det = knot_determinant(d);
    out["determinant"] = det;
    const IntPolynomial alex = alexander_polynomial(d);
    out["alexander"] = {{"coeffs", alex.coefficients},
                        {"text", polynomial_text(alex)}};
    if (n <= 7) {
      const KnotClass cls = knot_class_from_determinant(det);
      out["knot_class"] = knot_class_name(cls);
      if (mode == HK_CLASSIFY_FULL && n == 7) {
        const bool oracle_fig8 = cls == KnotClass::figure8;
        if (oracle_fig8 != match.has_value()) {
          Json repro;
          repro["points"] = points_to_json(pts)["points"];
          repro["oracle_class"] = knot_class_name(cls);
          repro["radon_class"] = match ? "Figure8" : "NotFigure8";
          throw AgreementError(
              "sign-table and invariant classifiers disagree", repro.dump());
        }
      }
    }
  }
  return out;
}

}  // namespace

extern "C" {

hk_status hk_points_parse_json(const char* text, hk_points** out) {
  if (!text || !out) {
    t_error_message = "null argument";
    return HK_ERR_ARGUMENT;
  }
  return guarded([&] {
    Polygon p = parse_points_json(text);
    *out = new hk_points{std::move(p.vertices)};
  });
}

hk_status hk_points_from_strings(const char* const* coords, size_t count,
                                 hk_points** out) {
  if (!coords || !out) {
    t_error_message = "null argument";
    return HK_ERR_ARGUMENT;
  }
  return guarded([&] {
    auto points = std::make_unique<hk_points>();
    points->points.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      points->points.push_back(Point3{parse_rational(coords[3 * i]),
                                      parse_rational(coords[3 * i + 1]),
                                      parse_rational(coords[3 * i + 2])});
    }
    *out = points.release();
  });
}

size_t hk_points_count(const hk_points* points) {
  return points ? points->points.size() : 0;
}

hk_status hk_points_to_json(const hk_points* points, char** out_json) {
  if (!points || !out_json) {
    t_error_message = "null argument";
    return HK_ERR_ARGUMENT;
  }
  return guarded(
      [&] { *out_json = dup_string(points_to_json(points->points).dump()); });
}

void hk_points_free(hk_points* points) { delete points; }

hk_status hk_classify(const hk_points* points, hk_classify_mode mode,
                      uint64_t seed, char** out_json) {
  if (!points || !out_json) {
    t_error_message = "null argument";
    return HK_ERR_ARGUMENT;
  }
  return guarded([&] {
    *out_json = dup_string(classify_json(points->points, mode, seed).dump());
  });
}

hk_status hk_table_text(const hk_points* points, int base, int direction,
                        char** out_text) {
  if (!points || !out_text) {
    t_error_message = "null argument";
    return HK_ERR_ARGUMENT;
  }
  return guarded([&] {
    require_heptagon_points(points);
    if (base < 0 || base > 6 || (direction != 1 && direction != -1)) {
      fail(ErrorCode::validation,
           "labeling needs base in 0..6 and direction +1 or -1");
    }
    Polygon poly = as_polygon(points);
    validate_knot_polygon(poly);
    *out_text =
        dup_string(render_table(build_table(poly, Labeling{base, direction})));
  });
}

hk_status hk_table(const hk_points* points, int base, int direction,
                   char** out_json) {
  if (!points || !out_json) {
    t_error_message = "null argument";
    return HK_ERR_ARGUMENT;
  }
  return guarded([&] {
    require_heptagon_points(points);
    if (base < 0 || base > 6 || (direction != 1 && direction != -1)) {
      fail(ErrorCode::validation,
           "labeling needs base in 0..6 and direction +1 or -1");
    }
    Polygon poly = as_polygon(points);
    validate_knot_polygon(poly);
    const Labeling lab{base, direction};
    const PenetrationTable table = build_table(poly, lab);
    Json out;
    out["labeling"] = {{"base", base}, {"direction", direction}};
    out["table"] = table_to_json(table);
    const auto m = match_rs(table);
    out["match"] = m ? Json{{"pattern", rs_pattern_name(m->first)},
                            {"sign", m->second}}
                     : Json(nullptr);
    out["fingerprint"] = fingerprint_hex(poly.vertices);
    *out_json = dup_string(out.dump());
  });
}

hk_status hk_census(const hk_points* points, int jobs, char** out_json) {
  if (!points || !out_json) {
    t_error_message = "null argument";
    return HK_ERR_ARGUMENT;
  }
  return guarded([&] {
    LinearEmbedding e{static_cast<int>(points->points.size()),
                      points->points};
    const CensusReport report = census(e, jobs < 1 ? 1 : jobs);
    *out_json = dup_string(census_report_to_json(report).dump());
  });
}

hk_status hk_sample(int n, uint64_t seed, hk_points** out) {
  if (!out) {
    t_error_message = "null argument";
    return HK_ERR_ARGUMENT;
  }
  return guarded([&] {
    LinearEmbedding e = sample_embedding(n, seed);
    *out = new hk_points{std::move(e.points)};
  });
}

hk_status hk_max_search(int n, int count, uint64_t seed, int jobs,
                        char** out_json) {
  if (!out_json) {
    t_error_message = "null argument";
    return HK_ERR_ARGUMENT;
  }
  return guarded([&] {
    const MaxSearchResult r = max_search(n, count, seed, jobs < 1 ? 1 : jobs);
    Json hist = Json::object();
    for (const auto& [c, k] : r.histogram) hist[std::to_string(c)] = k;
    Json out;
    out["n"] = n;
    out["count"] = count;
    out["seed"] = seed;
    out["best_c"] = r.best_c;
    out["best_fingerprint"] = r.best_fingerprint;
    out["best_seed"] = r.best_seed;
    out["histogram"] = std::move(hist);
    out["note"] =
        "empirical lower bound over sampled embeddings; the exact maximum "
        "over all embeddings is not established by sampling";
    *out_json = dup_string(out.dump());
  });
}

const char* hk_status_name(hk_status status) {
  switch (status) {
    case HK_OK:
      return "ok";
    case HK_ERR_ARGUMENT:
      return "argument";
    case HK_ERR_PARSE:
      return "parse";
    case HK_ERR_VALIDATION:
      return "validation";
    case HK_ERR_DEGENERATE:
      return "degenerate";
    case HK_ERR_DISAGREEMENT:
      return "disagreement";
    case HK_ERR_SAMPLING:
      return "sampling";
    case HK_ERR_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* hk_error_message(void) { return t_error_message.c_str(); }

void hk_string_free(char* text) { std::free(text); }

}  // extern "C"
