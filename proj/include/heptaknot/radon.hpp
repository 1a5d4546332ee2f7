#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "heptaknot/polygon.hpp"

namespace heptaknot {

// One of the 14 vertex labelings of a heptagonal cycle: label position
// l (0..6) names vertex (base + direction*l) mod 7.
struct Labeling {
  int base = 0;       // 0..6
  int direction = 1;  // +1 or -1

  bool operator==(const Labeling&) const = default;
};

inline int labeled_vertex(const Labeling& lab, int position) {
  int v = (lab.base + lab.direction * position) % 7;
  return v < 0 ? v + 7 : v;
}

// 7x3 grid of penetration signs. Row r describes the triangle on labels
// (r, r+1, r+2); its columns hold the signs of the three vertex-disjoint
// edges (r+3,r+4), (r+4,r+5), (r+5,r+6), all mod 7.
struct PenetrationTable {
  std::array<std::array<Sign, 3>, 7> rows;

  bool operator==(const PenetrationTable&) const = default;
};

enum class RsPatternId { rs1, rs2, rs3 };

const char* rs_pattern_name(RsPatternId id);  // "RS1", "RS2", "RS3"

struct RsMatch {
  Labeling labeling;
  RsPatternId pattern;
  int sign = 1;  // the global sign substituted into the template

  bool operator==(const RsMatch&) const = default;
};

PenetrationTable build_table(const Polygon& heptagon, const Labeling& lab);

// Number of edges penetrating the triangle of the given row (0..6).
int penetration_count(const PenetrationTable& table, int row);

// First template/sign pair reproducing the table, scanning RS1 < RS2 < RS3
// with sign +1 before -1; nullopt when none matches.
std::optional<std::pair<RsPatternId, int>> match_rs(
    const PenetrationTable& table);

// Scans the 14 labelings (base ascending, direction +1 then -1) and
// returns the first witness, or nullopt when the heptagon realizes no
// template under any labeling.
std::optional<RsMatch> classify_by_radon(const Polygon& heptagon);

// Exhaustive variant: every witness over all labelings, in scan order.
std::vector<RsMatch> all_rs_witnesses(const Polygon& heptagon);

// 7 lines of three symbols from {+, -, x}, one row per line.
std::string render_table(const PenetrationTable& table);

Polygon relabel(const Polygon& heptagon, const Labeling& lab);

// Memoized penetration signs over an indexed point set. Arguments may
// come in any order; the sign is canonicalized through the parity of the
// triangle permutation and of the segment direction. Point sets in
// general position never hit the degenerate error.
class PenetrationCache {
 public:
  explicit PenetrationCache(std::span<const Point3> points);

  Sign sign(int t1, int t2, int t3, int j, int k);

  // Computes every (triangle, vertex-disjoint segment) entry so that
  // later sign() calls never write; makes the cache safe to share among
  // concurrent readers.
  void fill_disjoint();

 private:
  std::span<const Point3> points_;
  std::vector<signed char> memo_;  // flat [a][b][c][j][k], 2 = unset
  int n_;

  Sign canonical_sign(int a, int b, int c, int j, int k);
};

// Cycle-indexed versions used by the census so that all Hamiltonian
// cycles of one embedding share a single sign cache.
PenetrationTable build_table_indexed(PenetrationCache& cache,
                                     std::span<const int> cycle,
                                     const Labeling& lab);
std::optional<RsMatch> classify_cycle_by_radon(PenetrationCache& cache,
                                               std::span<const int> cycle);

}  // namespace heptaknot
