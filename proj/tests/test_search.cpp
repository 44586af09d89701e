#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ptile/constructions.hpp"
#include "ptile/errors.hpp"
#include "ptile/search.hpp"

using namespace ptile;

TEST_CASE("search finds and refutes small tilings") {
  const SearchOutcome a = search_torus(parse_tile("1(1)1"), {4});
  CHECK(a.status == SearchStatus::Found);
  REQUIRE(a.witness);
  CHECK(oracle::naive_verify(*a.witness).pass);

  CHECK(search_torus(parse_tile("2"), {4}).status == SearchStatus::Found);
  CHECK(search_torus(parse_tile("2"), {5}).status == SearchStatus::ExhaustedNone);
  CHECK(search_torus(parse_tile("3(1)3"), {7, 7}).status == SearchStatus::ExhaustedNone);

  const SearchOutcome d = search_torus(parse_tile("2(1)2"), {8, 8});
  CHECK(d.status == SearchStatus::Found);
  CHECK(oracle::naive_verify(*d.witness).pass);
}

TEST_CASE("search respects holes and limits") {
  const PeriodicPointSet holes({5}, {{4}});
  const SearchOutcome r = search_torus(parse_tile("2"), {5}, {}, holes);
  CHECK(r.status == SearchStatus::Found);
  CHECK(oracle::naive_verify(*r.witness).pass);

  SearchConfig tiny;
  tiny.node_limit = 1;
  CHECK(search_torus(parse_tile("3(1)3"), {7, 12}, tiny).status == SearchStatus::NodeLimit);
  tiny.node_limit = 0;
  CHECK_THROWS_AS(search_torus(parse_tile("1"), {2}, tiny), DomainError);
}

TEST_CASE("search is deterministic") {
  for (Heuristic h : {Heuristic::FirstCell, Heuristic::MinCandidates}) {
    SearchConfig cfg;
    cfg.heuristic = h;
    const SearchOutcome a = search_torus(parse_tile("2(1)2"), {8, 8}, cfg);
    const SearchOutcome b = search_torus(parse_tile("2(1)2"), {8, 8}, cfg);
    CHECK(a.nodes == b.nodes);
    REQUIRE(a.witness);
    CHECK(a.witness->placements == b.witness->placements);
  }
}

TEST_CASE("search agrees with a plain backtracking oracle") {
  std::mt19937_64 rng(5);
  const std::vector<std::string> tiles = {"1", "2", "3", "1(1)1", "2(1)1", "1(2)1", "2(1)2"};
  for (int iter = 0; iter < 120; ++iter) {
    const Tile1D tile = parse_tile(tiles[rng() % tiles.size()]);
    Box box;
    const std::size_t dim = 1 + rng() % 2;
    for (std::size_t i = 0; i < dim; ++i) box.push_back(1 + static_cast<Coord>(rng() % 5));
    std::set<Point> hole_set;
    std::optional<PeriodicPointSet> holes;
    if (rng() % 3 == 0) {
      std::vector<Point> hs;
      for (const Point& c : oracle::all_cells(box))
        if (rng() % 5 == 0) {
          hs.push_back(c);
          hole_set.insert(c);
        }
      holes = PeriodicPointSet(box, hs);
    }
    SearchConfig cfg;
    cfg.allow_reflections = rng() % 2 == 0;
    cfg.heuristic = rng() % 2 ? Heuristic::FirstCell : Heuristic::MinCandidates;
    INFO(tile.format(), " dim ", dim);
    const SearchOutcome got = search_torus(tile, box, cfg, holes);
    const bool want = oracle::brute_force_tiles(tile, box, hole_set, cfg.allow_reflections);
    REQUIRE(got.status != SearchStatus::NodeLimit);
    CHECK((got.status == SearchStatus::Found) == want);
    if (got.witness) CHECK(oracle::naive_verify(*got.witness).pass);
  }
}

TEST_CASE("cross_check rediscovers small constructions") {
  for (const Construction& c : {construct_case1(1, 2), construct_case2(1, 1)})
    for (const TilingDocument* d : {&c.triple.ab, &c.triple.ac, &c.triple.bc}) CHECK(cross_check(*d));
  TilingDocument unit{{3, 2}, parse_tile("1"), std::nullopt, {}};
  CHECK(cross_check(unit));
}
