#include "heptaknot/diagram.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "heptaknot/errors.hpp"
#include "heptaknot/rng.hpp"

namespace heptaknot {

namespace {

using int128 = __int128;

constexpr int kMaxDirectionCandidates = 1000;
constexpr long kFastLimit = 1LL << 60;

bool small_integer(const Rational& q, long& out) {
  if (mpz_cmp_ui(q.get_den().get_mpz_t(), 1) != 0) return false;
  const mpz_class& num = q.get_num();
  if (!num.fits_slong_p()) return false;
  long v = num.get_si();
  if (v >= kFastLimit || v <= -kFastLimit) return false;
  out = v;
  return true;
}

// Projected vertex: image coordinates plus depth along the direction.
struct Planar {
  Rational a, b, depth;
};

Sign orient2d(const Planar& p, const Planar& q, const Planar& r) {
  long pa, pb, qa, qb, ra, rb;
  if (small_integer(p.a, pa) && small_integer(p.b, pb) &&
      small_integer(q.a, qa) && small_integer(q.b, qb) &&
      small_integer(r.a, ra) && small_integer(r.b, rb)) {
    const int128 det = static_cast<int128>(qa - pa) * (rb - pb) -
                       static_cast<int128>(qb - pb) * (ra - pa);
    return det > 0 ? sign_positive : (det < 0 ? sign_negative : sign_zero);
  }
  Rational det = (q.a - p.a) * (r.b - p.b);
  det -= (q.b - p.b) * (r.a - p.a);
  return static_cast<Sign>(sign_int(det));
}

bool same_image(const Planar& p, const Planar& q) {
  return p.a == q.a && p.b == q.b;
}

// True when r (known collinear with segment pq) lies on the closed
// segment.
bool on_closed_span(const Planar& p, const Planar& q, const Planar& r) {
  Rational d = (p.a - r.a) * (q.a - r.a);
  d += (p.b - r.b) * (q.b - r.b);
  return sign_int(d) <= 0;
}

struct Edge {
  int component = 0;
  int index = 0;   // edge index within the component
  int from = 0;    // global vertex ids
  int to = 0;
};

struct RawCrossing {
  int over_edge = 0;
  int under_edge = 0;
  Rational t_over;   // parameter along the over edge
  Rational t_under;  // parameter along the under edge
  Rational x, y;     // exact image point
  int sign = 0;
};

struct Scene {
  std::vector<int> component_sizes;
  std::vector<int> vertex_offset;  // per component
  std::vector<Planar> vertices;    // global vertex order
  std::vector<Edge> edges;
  std::vector<RawCrossing> crossings;
};

bool edges_adjacent(const Scene& s, const Edge& e, const Edge& f) {
  if (e.component != f.component) return false;
  const int m = s.component_sizes[e.component];
  const int d = std::abs(e.index - f.index);
  return d == 1 || d == m - 1;
}

[[noreturn]] void reject(const std::string& what) {
  fail(ErrorCode::non_generic_direction, "non-generic direction: " + what);
}

// Projects the whole scene and runs every exact regularity check.
Scene project_scene(const std::vector<Polygon>& components,
                    const Vec3& direction) {
  if (sign_int(direction.x) == 0 && sign_int(direction.y) == 0 &&
      sign_int(direction.z) == 0) {
    fail(ErrorCode::validation, "projection direction must be nonzero");
  }

  // Basis of the image plane: u = dir x axis, w = dir x u. The frame
  // (u, w, dir) is right-handed, so image orientation agrees with the
  // view from the positive direction side.
  Vec3 u;
  for (const Vec3& axis : {Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}}) {
    u = cross(direction, axis);
    if (sign_int(u.x) != 0 || sign_int(u.y) != 0 || sign_int(u.z) != 0) break;
  }
  const Vec3 w = cross(direction, u);

  Scene s;
  for (int ci = 0; ci < static_cast<int>(components.size()); ++ci) {
    const auto& verts = components[ci].vertices;
    const int m = static_cast<int>(verts.size());
    if (m < 3) fail(ErrorCode::validation, "component with fewer than 3 vertices");
    s.component_sizes.push_back(m);
    s.vertex_offset.push_back(static_cast<int>(s.vertices.size()));
    for (const Point3& p : verts) {
      s.vertices.push_back(Planar{dot(u, p), dot(w, p), dot(direction, p)});
    }
    for (int i = 0; i < m; ++i) {
      s.edges.push_back(Edge{ci, i, s.vertex_offset[ci] + i,
                             s.vertex_offset[ci] + (i + 1) % m});
    }
  }

  const int nv = static_cast<int>(s.vertices.size());

  // Distinct vertex images.
  for (int i = 0; i < nv; ++i)
    for (int j = i + 1; j < nv; ++j)
      if (same_image(s.vertices[i], s.vertices[j]))
        reject("two vertices share an image point");

  // No vertex image on another edge's image.
  for (int vi = 0; vi < nv; ++vi) {
    for (const Edge& e : s.edges) {
      if (vi == e.from || vi == e.to) continue;
      const Planar& a = s.vertices[e.from];
      const Planar& b = s.vertices[e.to];
      const Planar& g = s.vertices[vi];
      if (orient2d(a, b, g) == sign_zero && on_closed_span(a, b, g))
        reject("vertex image on an edge image");
    }
  }

  // Adjacent edges must bend in the image; a straight or folded hinge
  // would merge or overlap their images.
  for (int ci = 0; ci < static_cast<int>(components.size()); ++ci) {
    const int m = s.component_sizes[ci];
    const int off = s.vertex_offset[ci];
    for (int i = 0; i < m; ++i) {
      if (orient2d(s.vertices[off + i], s.vertices[off + (i + 1) % m],
                   s.vertices[off + (i + 2) % m]) == sign_zero)
        reject("consecutive vertex images collinear");
    }
  }

  // Transversal crossings between non-adjacent edges.
  const int ne = static_cast<int>(s.edges.size());
  for (int i = 0; i < ne; ++i) {
    for (int j = i + 1; j < ne; ++j) {
      const Edge& e = s.edges[i];
      const Edge& f = s.edges[j];
      if (edges_adjacent(s, e, f)) continue;
      const Planar& p0 = s.vertices[e.from];
      const Planar& p1 = s.vertices[e.to];
      const Planar& q0 = s.vertices[f.from];
      const Planar& q1 = s.vertices[f.to];
      const Sign o1 = orient2d(p0, p1, q0);
      const Sign o2 = orient2d(p0, p1, q1);
      const Sign o3 = orient2d(q0, q1, p0);
      const Sign o4 = orient2d(q0, q1, p1);
      if (o1 == sign_zero || o2 == sign_zero || o3 == sign_zero ||
          o4 == sign_zero) {
        // Endpoint contacts were excluded above, so a zero here means a
        // collinear miss; no crossing either way.
        continue;
      }
      if (o1 == o2 || o3 == o4) continue;

      // Intersection parameters of the two image segments.
      const Rational dpa = p1.a - p0.a, dpb = p1.b - p0.b;
      const Rational dqa = q1.a - q0.a, dqb = q1.b - q0.b;
      Rational denom = dpa * dqb;
      denom -= dpb * dqa;
      Rational te = (q0.a - p0.a) * dqb;
      te -= (q0.b - p0.b) * dqa;
      te /= denom;
      Rational tf = (q0.a - p0.a) * dpb;
      tf -= (q0.b - p0.b) * dpa;
      tf /= denom;

      Rational depth_e = p0.depth + te * (p1.depth - p0.depth);
      Rational depth_f = q0.depth + tf * (q1.depth - q0.depth);
      const int depth_cmp = sign_int(Rational(depth_e - depth_f));
      if (depth_cmp == 0) reject("edges meet at equal depth");

      RawCrossing c;
      c.x = p0.a + te * dpa;
      c.y = p0.b + te * dpb;
      const bool e_over = depth_cmp > 0;
      c.over_edge = e_over ? i : j;
      c.under_edge = e_over ? j : i;
      c.t_over = e_over ? te : tf;
      c.t_under = e_over ? tf : te;
      // Orientation of (over direction, under direction) in the image.
      Rational turn;
      if (e_over) {
        turn = dpa * dqb;
        turn -= dpb * dqa;
      } else {
        turn = dqa * dpb;
        turn -= dqb * dpa;
      }
      c.sign = sign_int(turn);
      s.crossings.push_back(std::move(c));
    }
  }

  // Crossing images must be pairwise distinct, otherwise some multiple
  // point is not a transversal double point.
  const int nc = static_cast<int>(s.crossings.size());
  for (int i = 0; i < nc; ++i)
    for (int j = i + 1; j < nc; ++j)
      if (s.crossings[i].x == s.crossings[j].x &&
          s.crossings[i].y == s.crossings[j].y)
        reject("two crossings share an image point");

  return s;
}

struct WalkEvent {
  int crossing = 0;
  bool under = false;
};

Diagram assemble_diagram(const Scene& s) {
  const int component_count = static_cast<int>(s.component_sizes.size());
  const int nc = static_cast<int>(s.crossings.size());

  // Events per edge, ordered by parameter along the edge.
  std::vector<std::vector<std::pair<Rational, WalkEvent>>> edge_events(
      s.edges.size());
  for (int c = 0; c < nc; ++c) {
    const RawCrossing& rc = s.crossings[c];
    edge_events[rc.over_edge].push_back({rc.t_over, WalkEvent{c, false}});
    edge_events[rc.under_edge].push_back({rc.t_under, WalkEvent{c, true}});
  }
  for (auto& events : edge_events) {
    std::sort(events.begin(), events.end(),
              [](const auto& lhs, const auto& rhs) {
                return lhs.first < rhs.first;
              });
  }

  // Walk each component; an arc ends at every underpass. The piece
  // before the first underpass and the piece after the last one are the
  // same arc, which the mod-m arc numbering makes automatic.
  std::vector<int> unders_per_component(component_count, 0);
  for (const RawCrossing& rc : s.crossings) {
    ++unders_per_component[s.edges[rc.under_edge].component];
  }
  std::vector<int> arc_offset(component_count, 0);
  int arc_count = 0;
  for (int ci = 0; ci < component_count; ++ci) {
    arc_offset[ci] = arc_count;
    arc_count += std::max(unders_per_component[ci], 1);
  }

  struct Passes {
    int over_arc = -1;
    int under_in = -1;
    int under_out = -1;
    int under_component = 0;
    int under_position = 0;  // walk position, for deterministic ordering
  };
  std::vector<Passes> passes(nc);

  int edge_cursor = 0;
  for (int ci = 0; ci < component_count; ++ci) {
    const int m = s.component_sizes[ci];
    const int arcs_here = std::max(unders_per_component[ci], 1);
    int unders_seen = 0;
    int position = 0;
    for (int i = 0; i < m; ++i, ++edge_cursor) {
      for (const auto& [t, ev] : edge_events[edge_cursor]) {
        const int current_arc = arc_offset[ci] + (unders_seen % arcs_here);
        if (ev.under) {
          passes[ev.crossing].under_in = current_arc;
          ++unders_seen;
          passes[ev.crossing].under_out =
              arc_offset[ci] + (unders_seen % arcs_here);
          passes[ev.crossing].under_component = ci;
          passes[ev.crossing].under_position = position;
        } else {
          passes[ev.crossing].over_arc = current_arc;
        }
        ++position;
      }
    }
  }

  // Order crossings by their underpass along the walk.
  std::vector<int> order(nc);
  for (int i = 0; i < nc; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
    if (passes[lhs].under_component != passes[rhs].under_component)
      return passes[lhs].under_component < passes[rhs].under_component;
    return passes[lhs].under_position < passes[rhs].under_position;
  });

  Diagram d;
  d.arc_count = arc_count;
  d.arc_component.resize(arc_count);
  for (int ci = 0; ci < component_count; ++ci) {
    const int arcs_here = std::max(unders_per_component[ci], 1);
    for (int k = 0; k < arcs_here; ++k) d.arc_component[arc_offset[ci] + k] = ci;
  }
  d.crossings.reserve(nc);
  for (int idx : order) {
    const Passes& p = passes[idx];
    d.crossings.push_back(
        Crossing{p.over_arc, p.under_in, p.under_out, s.crossings[idx].sign});
  }
  return d;
}

Vec3 candidate_direction(SplitMix64& rng) {
  while (true) {
    const long x = static_cast<long>(rng.below(33)) - 16;
    const long y = static_cast<long>(rng.below(33)) - 16;
    const long z = static_cast<long>(rng.below(33)) - 16;
    if (x == 0 && y == 0 && z == 0) continue;
    return Vec3{Rational(x), Rational(y), Rational(z)};
  }
}

}  // namespace

int Diagram::component_count() const {
  int max_comp = -1;
  for (int c : arc_component) max_comp = std::max(max_comp, c);
  return max_comp + 1;
}

Vec3 pick_generic_direction(const std::vector<Polygon>& components,
                            std::uint64_t seed) {
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < kMaxDirectionCandidates; ++attempt) {
    const Vec3 dir = candidate_direction(rng);
    try {
      project_scene(components, dir);
      return dir;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::non_generic_direction) throw;
    }
  }
  fail(ErrorCode::exhausted_candidates,
       "no generic projection direction among 1000 candidates");
}

Vec3 pick_generic_direction(const Polygon& polygon, std::uint64_t seed) {
  return pick_generic_direction(std::vector<Polygon>{polygon}, seed);
}

Diagram project_to_diagram(const std::vector<Polygon>& components,
                           const Vec3& direction) {
  return assemble_diagram(project_scene(components, direction));
}

Diagram project_to_diagram(const Polygon& polygon, const Vec3& direction) {
  return project_to_diagram(std::vector<Polygon>{polygon}, direction);
}

Diagram project_with_seed(const std::vector<Polygon>& components,
                          std::uint64_t seed, Vec3* chosen_direction) {
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < kMaxDirectionCandidates; ++attempt) {
    const Vec3 dir = candidate_direction(rng);
    try {
      Scene scene = project_scene(components, dir);
      if (chosen_direction) *chosen_direction = dir;
      return assemble_diagram(scene);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::non_generic_direction) throw;
    }
  }
  fail(ErrorCode::exhausted_candidates,
       "no generic projection direction among 1000 candidates");
}

std::string render_diagram(const Diagram& d) {
  std::string out;
  out += "arcs " + std::to_string(d.arc_count) + "\n";
  for (int i = 0; i < d.arc_count; ++i) {
    out += "arc " + std::to_string(i) + " component " +
           std::to_string(d.arc_component[i]) + "\n";
  }
  out += "crossings " + std::to_string(d.crossings.size()) + "\n";
  for (std::size_t i = 0; i < d.crossings.size(); ++i) {
    const Crossing& c = d.crossings[i];
    out += "crossing " + std::to_string(i) + " over " +
           std::to_string(c.over_arc) + " under_in " +
           std::to_string(c.under_in_arc) + " under_out " +
           std::to_string(c.under_out_arc) + " sign " +
           (c.sign > 0 ? "+1" : "-1") + "\n";
  }
  return out;
}

}  // namespace heptaknot
