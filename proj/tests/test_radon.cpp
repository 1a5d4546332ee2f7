#include <doctest.h>

#include <algorithm>

#include "heptaknot/census.hpp"
#include "heptaknot/errors.hpp"
#include "heptaknot/radon.hpp"
#include "support/fixtures.hpp"

using namespace heptaknot;
using heptaknot::testing::load_polygon;
using heptaknot::testing::moment_curve;

namespace {

PenetrationTable table_from_template(RsPatternId id, int s) {
  // Rebuild a table by substituting the global sign into the published
  // template shapes.
  auto row = [&](int c0, int c1, int c2) {
    return std::array<Sign, 3>{static_cast<Sign>(s * c0),
                               static_cast<Sign>(s * c1),
                               static_cast<Sign>(s * c2)};
  };
  PenetrationTable t;
  t.rows = {row(1, -1, 0), row(-1, 0, 0), row(0, 1, 0), row(1, 0, 0),
            row(0, -1, 0), row(-1, 0, 0), row(0, 1, 0)};
  if (id == RsPatternId::rs2) t.rows[5] = row(-1, 1, 0);
  if (id == RsPatternId::rs3) t.rows[1] = row(0, -1, 0);
  return t;
}

}  // namespace

TEST_CASE("template round trips through match_rs") {
  for (RsPatternId id :
       {RsPatternId::rs1, RsPatternId::rs2, RsPatternId::rs3}) {
    for (int s : {1, -1}) {
      auto m = match_rs(table_from_template(id, s));
      REQUIRE(m.has_value());
      CHECK(m->first == id);
      CHECK(m->second == s);
    }
  }
}

TEST_CASE("tables without template shape do not match") {
  PenetrationTable zero{};
  for (auto& row : zero.rows) row = {sign_zero, sign_zero, sign_zero};
  CHECK(!match_rs(zero).has_value());

  // A full row of three penetrations can never match: every template row
  // has at most two.
  PenetrationTable full = table_from_template(RsPatternId::rs1, 1);
  full.rows[3] = {sign_positive, sign_positive, sign_negative};
  CHECK(!match_rs(full).has_value());
}

TEST_CASE("penetration_count counts nonzero cells") {
  PenetrationTable t{};
  for (auto& row : t.rows) row = {sign_zero, sign_zero, sign_zero};
  CHECK(penetration_count(t, 0) == 0);
  t.rows[2] = {sign_positive, sign_negative, sign_zero};
  CHECK(penetration_count(t, 2) == 2);
  CHECK_THROWS_AS(penetration_count(t, 7), Error);
}

TEST_CASE("moment-curve heptagon has an empty table and no witness") {
  const Polygon m = moment_curve(7);
  const PenetrationTable t = build_table(m, Labeling{0, 1});
  for (int r = 0; r < 7; ++r) CHECK(penetration_count(t, r) == 0);
  CHECK(render_table(t) == "xxx\nxxx\nxxx\nxxx\nxxx\nxxx\nxxx\n");
  CHECK(!classify_by_radon(m).has_value());
}

TEST_CASE("figure-8 fixture matches RS2 with a unique witness") {
  const Polygon f8 = load_polygon("figure8_heptagon.json");
  auto m = classify_by_radon(f8);
  REQUIRE(m.has_value());
  CHECK(m->pattern == RsPatternId::rs2);
  CHECK(m->labeling == Labeling{4, -1});
  CHECK(m->sign == -1);

  CHECK(render_table(build_table(f8, m->labeling)) ==
        "-+x\n+xx\nx-x\n-xx\nx+x\n+-x\nx-x\n");
  CHECK(render_table(build_table(f8, Labeling{0, 1})) ==
        "x-x\nxx+\nx+-\nx-x\nx-+\nx+x\nxx-\n");

  const auto witnesses = all_rs_witnesses(f8);
  REQUIRE(witnesses.size() == 1);
  CHECK(witnesses.front() == *m);
}

TEST_CASE("trefoil heptagon fixture matches nothing") {
  CHECK(!classify_by_radon(load_polygon("trefoil_heptagon.json")).has_value());
  CHECK(all_rs_witnesses(load_polygon("trefoil_heptagon.json")).empty());
}

TEST_CASE("rotating the base shifts the rows") {
  const Polygon h{sample_embedding(7, 321).points};
  const PenetrationTable identity = build_table(h, Labeling{0, 1});
  for (int base = 0; base < 7; ++base) {
    const PenetrationTable rotated = build_table(h, Labeling{base, 1});
    for (int r = 0; r < 7; ++r) {
      CHECK(rotated.rows[r] == identity.rows[(r + base) % 7]);
    }
  }
}

TEST_CASE("relabeling commutes with table building") {
  for (std::uint64_t seed : {1u, 2u, 10626u}) {
    const Polygon h{sample_embedding(7, seed).points};
    for (int base = 0; base < 7; ++base) {
      for (int direction : {1, -1}) {
        const Labeling lab{base, direction};
        CHECK(build_table(h, lab) ==
              build_table(relabel(h, lab), Labeling{0, 1}));
      }
    }
  }
}

TEST_CASE("verdict is stable under relabeling of the vertex array") {
  for (const char* name : {"figure8_heptagon.json", "trefoil_heptagon.json"}) {
    const Polygon h = load_polygon(name);
    const bool expected = classify_by_radon(h).has_value();
    for (int base = 0; base < 7; ++base) {
      for (int direction : {1, -1}) {
        CHECK(classify_by_radon(relabel(h, Labeling{base, direction}))
                  .has_value() == expected);
      }
    }
  }
}

TEST_CASE("cached signs equal direct table construction") {
  const Polygon h{sample_embedding(7, 99).points};
  PenetrationCache cache(h.vertices);
  cache.fill_disjoint();
  constexpr std::array<int, 7> identity = {0, 1, 2, 3, 4, 5, 6};
  for (int base = 0; base < 7; ++base) {
    for (int direction : {1, -1}) {
      const Labeling lab{base, direction};
      CHECK(build_table_indexed(cache, identity, lab) == build_table(h, lab));
    }
  }
}

TEST_CASE("nonzero cells per row match the row penetration count") {
  const Polygon f8 = load_polygon("figure8_heptagon.json");
  const PenetrationTable t = build_table(f8, Labeling{0, 1});
  // Verified figure-8 rows carry 1 or 2 penetrations only.
  for (int r = 0; r < 7; ++r) {
    const int count = penetration_count(t, r);
    CHECK(count >= 1);
    CHECK(count <= 2);
  }
}
