#include "heptaknot/radon.hpp"

#include <algorithm>

#include "heptaknot/errors.hpp"

namespace heptaknot {

namespace {

using PatternRows = std::array<std::array<int, 3>, 7>;

// Cell values are relative to a global sign s: +1 means s, -1 means -s,
// 0 means the edge misses the triangle.
constexpr PatternRows kRs1 = {{
    {1, -1, 0},
    {-1, 0, 0},
    {0, 1, 0},
    {1, 0, 0},
    {0, -1, 0},
    {-1, 0, 0},
    {0, 1, 0},
}};

constexpr PatternRows with_row(PatternRows rows, int row,
                               std::array<int, 3> value) {
  rows[row] = value;
  return rows;
}

constexpr PatternRows kRs2 = with_row(kRs1, 5, {-1, 1, 0});
constexpr PatternRows kRs3 = with_row(kRs1, 1, {0, -1, 0});

const PatternRows& pattern_rows(RsPatternId id) {
  switch (id) {
    case RsPatternId::rs1:
      return kRs1;
    case RsPatternId::rs2:
      return kRs2;
    case RsPatternId::rs3:
      return kRs3;
  }
  fail(ErrorCode::internal, "unknown pattern id");
}

void require_heptagon(int n) {
  if (n != 7) {
    fail(ErrorCode::validation, "penetration tables need exactly 7 vertices");
  }
}

constexpr std::array<int, 7> kIdentityCycle = {0, 1, 2, 3, 4, 5, 6};

}  // namespace

const char* rs_pattern_name(RsPatternId id) {
  switch (id) {
    case RsPatternId::rs1:
      return "RS1";
    case RsPatternId::rs2:
      return "RS2";
    case RsPatternId::rs3:
      return "RS3";
  }
  return "?";
}

PenetrationTable build_table(const Polygon& heptagon, const Labeling& lab) {
  require_heptagon(heptagon.size());
  const auto& v = heptagon.vertices;
  PenetrationTable table;
  for (int r = 0; r < 7; ++r) {
    const Point3& t1 = v[labeled_vertex(lab, r)];
    const Point3& t2 = v[labeled_vertex(lab, r + 1)];
    const Point3& t3 = v[labeled_vertex(lab, r + 2)];
    for (int c = 0; c < 3; ++c) {
      const int j = r + 3 + c;
      table.rows[r][c] = penetration_sign(t1, t2, t3, v[labeled_vertex(lab, j)],
                                          v[labeled_vertex(lab, j + 1)]);
    }
  }
  return table;
}

int penetration_count(const PenetrationTable& table, int row) {
  if (row < 0 || row >= 7) fail(ErrorCode::validation, "row index out of range");
  int count = 0;
  for (Sign s : table.rows[row]) {
    if (s != sign_zero) ++count;
  }
  return count;
}

std::optional<std::pair<RsPatternId, int>> match_rs(
    const PenetrationTable& table) {
  for (RsPatternId id :
       {RsPatternId::rs1, RsPatternId::rs2, RsPatternId::rs3}) {
    const PatternRows& rows = pattern_rows(id);
    for (int s : {1, -1}) {
      bool ok = true;
      for (int r = 0; r < 7 && ok; ++r) {
        for (int c = 0; c < 3 && ok; ++c) {
          if (static_cast<int>(table.rows[r][c]) != s * rows[r][c]) ok = false;
        }
      }
      if (ok) return std::make_pair(id, s);
    }
  }
  return std::nullopt;
}

Polygon relabel(const Polygon& heptagon, const Labeling& lab) {
  require_heptagon(heptagon.size());
  Polygon out;
  out.vertices.reserve(7);
  for (int i = 0; i < 7; ++i) {
    out.vertices.push_back(heptagon.vertices[labeled_vertex(lab, i)]);
  }
  return out;
}

std::string render_table(const PenetrationTable& table) {
  std::string out;
  out.reserve(7 * 4);
  for (int r = 0; r < 7; ++r) {
    for (int c = 0; c < 3; ++c) {
      switch (table.rows[r][c]) {
        case sign_positive:
          out += '+';
          break;
        case sign_negative:
          out += '-';
          break;
        case sign_zero:
          out += 'x';
          break;
      }
    }
    out += '\n';
  }
  return out;
}

PenetrationCache::PenetrationCache(std::span<const Point3> points)
    : points_(points), n_(static_cast<int>(points.size())) {
  memo_.assign(static_cast<std::size_t>(n_) * n_ * n_ * n_ * n_, 2);
}

Sign PenetrationCache::canonical_sign(int a, int b, int c, int j, int k) {
  const std::size_t idx =
      ((((static_cast<std::size_t>(a) * n_ + b) * n_ + c) * n_) + j) * n_ + k;
  signed char& slot = memo_[idx];
  if (slot == 2) {
    slot = static_cast<signed char>(
        penetration_sign(points_[a], points_[b], points_[c], points_[j],
                         points_[k]));
  }
  return static_cast<Sign>(slot);
}

void PenetrationCache::fill_disjoint() {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      for (int c = b + 1; c < n_; ++c)
        for (int j = 0; j < n_; ++j) {
          if (j == a || j == b || j == c) continue;
          for (int k = j + 1; k < n_; ++k) {
            if (k == a || k == b || k == c) continue;
            canonical_sign(a, b, c, j, k);
          }
        }
}

Sign PenetrationCache::sign(int t1, int t2, int t3, int j, int k) {
  int parity = 1;
  int a = t1, b = t2, c = t3;
  if (a > b) {
    std::swap(a, b);
    parity = -parity;
  }
  if (b > c) {
    std::swap(b, c);
    parity = -parity;
  }
  if (a > b) {
    std::swap(a, b);
    parity = -parity;
  }
  if (j > k) {
    std::swap(j, k);
    parity = -parity;
  }
  return static_cast<Sign>(parity * canonical_sign(a, b, c, j, k));
}

PenetrationTable build_table_indexed(PenetrationCache& cache,
                                     std::span<const int> cycle,
                                     const Labeling& lab) {
  require_heptagon(static_cast<int>(cycle.size()));
  PenetrationTable table;
  for (int r = 0; r < 7; ++r) {
    const int t1 = cycle[labeled_vertex(lab, r)];
    const int t2 = cycle[labeled_vertex(lab, r + 1)];
    const int t3 = cycle[labeled_vertex(lab, r + 2)];
    for (int c = 0; c < 3; ++c) {
      const int j = r + 3 + c;
      table.rows[r][c] = cache.sign(t1, t2, t3, cycle[labeled_vertex(lab, j)],
                                    cycle[labeled_vertex(lab, j + 1)]);
    }
  }
  return table;
}

std::optional<RsMatch> classify_cycle_by_radon(PenetrationCache& cache,
                                               std::span<const int> cycle) {
  for (int base = 0; base < 7; ++base) {
    for (int direction : {1, -1}) {
      const Labeling lab{base, direction};
      const PenetrationTable table = build_table_indexed(cache, cycle, lab);
      if (auto m = match_rs(table)) {
        return RsMatch{lab, m->first, m->second};
      }
    }
  }
  return std::nullopt;
}

std::optional<RsMatch> classify_by_radon(const Polygon& heptagon) {
  require_heptagon(heptagon.size());
  PenetrationCache cache(heptagon.vertices);
  return classify_cycle_by_radon(cache, kIdentityCycle);
}

std::vector<RsMatch> all_rs_witnesses(const Polygon& heptagon) {
  require_heptagon(heptagon.size());
  PenetrationCache cache(heptagon.vertices);
  std::vector<RsMatch> out;
  for (int base = 0; base < 7; ++base) {
    for (int direction : {1, -1}) {
      const Labeling lab{base, direction};
      const PenetrationTable table =
          build_table_indexed(cache, kIdentityCycle, lab);
      if (auto m = match_rs(table)) {
        out.push_back(RsMatch{lab, m->first, m->second});
      }
    }
  }
  return out;
}

}  // namespace heptaknot
