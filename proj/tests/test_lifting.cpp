#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "ptile/constructions.hpp"
#include "ptile/errors.hpp"
#include "ptile/lifting.hpp"

using namespace ptile;

namespace {

// Row 0 of Y: a k(m)l copy at 1 and its mirror image l(m)k at 2k+l+1.
std::set<Coord> y_row0(Coord k, Coord m, Coord l) {
  std::set<Coord> out;
  const Tile1D t = PuncturedInterval{k, m, l}.tile();
  for (Coord o : oracle::offset_set(t)) out.insert(1 + o);
  for (Coord o : oracle::offset_set(t.reflected())) out.insert(2 * k + l + 1 + o);
  return out;
}

}  // namespace

TEST_CASE("Y for 2(1)2") {
  const YStructure y = build_Y(2, 1, 2);
  CHECK(y.period == 12);
  CHECK(y.rows[0] == std::vector<Coord>{1, 2, 4, 5, 7, 8, 10, 11});
  CHECK(y.tiling.box == Box{12, 3});
  CHECK(oracle::naive_verify(y.tiling).pass);
}

TEST_CASE("Y invariants for m < min(k, l) <= 10") {
  for (Coord k = 1; k <= 12; ++k)
    for (Coord l = 1; l <= 12; ++l)
      for (Coord m = 1; m < std::min(k, l) && std::min(k, l) <= 10; ++m) {
        INFO(k, " ", m, " ", l);
        const YStructure y = build_Y(k, m, l);
        const Coord P = 3 * (k + l);
        CHECK(y.period == P);
        const std::set<Coord> r0 = y_row0(k, m, l);
        CHECK(std::set<Coord>(y.rows[0].begin(), y.rows[0].end()) == r0);
        for (Coord z = 0; z < P; ++z) {
          int n = 0;
          for (Coord i = 0; i < 3; ++i) n += r0.count(((z - i * (k + l)) % P + P) % P) ? 1 : 0;
          REQUIRE(n == 2);
          const int h = y.hole_row(z);
          CHECK(r0.count(((z - h * (k + l)) % P + P) % P) == 0);
        }
        CHECK(oracle::naive_verify(y.tiling).pass);
        const auto [odd, even] = y_blocks(k, m, l);
        CHECK(covers_once(odd, k + l, P));
        CHECK(covers_once(even, k + l, P));
        for (const Placement& p : y.tiling.placements)
          if (k == l) CHECK_FALSE(p.reflected);
      }
}

TEST_CASE("Y needs a short gap") {
  CHECK_THROWS_AS(build_Y(2, 2, 3), ReductionRequired);
  CHECK_THROWS_AS(build_Y(3, 5, 4), ReductionRequired);
  CHECK(covers_once({0}, 1, 3));
  CHECK_FALSE(covers_once({0, 1}, 1, 3));
}

TEST_CASE("level classification is a partition") {
  const YStructure y = build_Y(3, 1, 5);
  for (Coord z = 0; z < y.period; ++z) {
    int missing = 0;
    for (const auto& row : y.rows) missing += std::binary_search(row.begin(), row.end(), z) ? 0 : 1;
    CHECK(missing == 1);
    CHECK(y.hole_row(z) == y.hole_row(z + y.period));
  }
}

TEST_CASE("lifting small triples") {
  CHECK(verify(build_Y(3, 1, 5).tiling).pass);
  for (auto [k, l] : std::vector<std::pair<Coord, Coord>>{{1, 1}, {1, 2}, {2, 3}, {1, 4}, {3, 3}}) {
    INFO(k, " ", l);
    const TilingDocument d = tile_Z3(k, l);
    CHECK(d.box.size() == 3);
    CHECK_FALSE(d.holes);
    CHECK(oracle::naive_verify(d).pass);
    for (const Placement& p : d.placements)
      if (k == l) CHECK_FALSE(p.reflected);
  }
  const TilingDocument d33 = tile_Z3(3, 3);
  CHECK(d33.box == Box{8, 8, 18});
}

TEST_CASE("lift rejects inconsistent triples") {
  Construction c = construct_case1(2, 3);
  TripleTiling t = c.triple;
  t.a = t.a | PeriodicPointSet({6, 6}, {{1, 0}});
  CHECK_THROWS_AS(lift_triple({2, 1, 3}, t), InvariantError);

  CHECK_THROWS_AS(lift_triple({3, 1, 2}, c.triple), StructuralError);
  CHECK_THROWS_AS(tile_Z3(4, 8), UnsupportedCase);
}
