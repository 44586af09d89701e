#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "ptile/errors.hpp"
#include "ptile/tile.hpp"

using namespace ptile;

TEST_CASE("parse accepts run/gap notation") {
  const Tile1D t = parse_tile("2(1)2");
  CHECK(t.runs() == std::vector<Coord>{2, 2});
  CHECK(t.gaps() == std::vector<Coord>{1});
  CHECK(t.offsets() == std::vector<Coord>{0, 1, 3, 4});
  CHECK(t.cardinality() == 4);
  CHECK(t.span() == 5);
  CHECK(t.is_symmetric());

  const Tile1D u = parse_tile("3(2)4");
  CHECK(u.offsets() == std::vector<Coord>{0, 1, 2, 5, 6, 7, 8});
  CHECK_FALSE(u.is_symmetric());
  CHECK(u.reflected() == parse_tile("4(2)3"));

  CHECK(parse_tile("5").is_interval());
  CHECK(parse_tile("5") == Tile1D::interval(5));
}

TEST_CASE("parse rejects malformed input") {
  for (const char* bad : {"", "(", "2(", "2(1)", "2(0)2", "0", "a", "2(1)2)", "-1", "2((1)2",
                          "2(1)0", "2)1(2"}) {
    INFO(bad);
    CHECK_THROWS_AS(parse_tile(bad), ParseError);
  }
}

TEST_CASE("format/parse round trip on random tiles") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 500; ++iter) {
    const int pieces = 1 + static_cast<int>(rng() % 5);
    std::vector<Coord> runs, gaps;
    for (int i = 0; i < pieces; ++i) {
      runs.push_back(1 + static_cast<Coord>(rng() % 6));
      if (i + 1 < pieces) gaps.push_back(1 + static_cast<Coord>(rng() % 6));
    }
    const Tile1D t(runs, gaps);
    CHECK(parse_tile(t.format()) == t);
    CHECK(Tile1D::from_offsets(t.offsets()) == t);
    const auto ref = oracle::offset_set(t);
    CHECK(std::vector<Coord>(ref.begin(), ref.end()) == t.offsets());
    CHECK(t.reflected().reflected() == t);
  }
}

TEST_CASE("from_offsets normalizes to a zero minimum") {
  CHECK(Tile1D::from_offsets({5, 6, 8}) == parse_tile("2(1)1"));
  CHECK_THROWS(Tile1D::from_offsets({}));
}

TEST_CASE("T_k shape") {
  CHECK(make_Tk(2).format() == "2(1)1(1)2");
  CHECK(make_Tk(3).format() == "3(2)1(2)1(2)3");
  for (Coord k = 2; k <= 50; ++k) {
    const Tile1D t = make_Tk(k);
    // independent construction: k-run, then k-1 unit runs separated by k-1 gaps, then k-run
    std::set<Coord> ref;
    Coord pos = 0;
    for (Coord i = 0; i < k; ++i) ref.insert(pos++);
    for (Coord i = 0; i < k - 1; ++i) {
      pos += k - 1;
      ref.insert(pos++);
    }
    pos += k - 1;
    for (Coord i = 0; i < k; ++i) ref.insert(pos++);
    CHECK(oracle::offset_set(t) == ref);
    CHECK(t.cardinality() == 3 * k - 1);
    CHECK(t.span() == k * k + 2 * k - 1);
  }
  CHECK_THROWS_AS(make_Tk(1), DomainError);
}

TEST_CASE("D_n shape") {
  CHECK(make_Dn(1).format() == "2");
  CHECK(make_Dn(2).offsets() == std::vector<Coord>{0, 1, 3, 4});
  CHECK(make_Dn(3).format() == "2(1)2(1)2");
  for (Coord n = 1; n <= 30; ++n) {
    CHECK(make_Dn(n).cardinality() == 2 * n);
    CHECK(make_Dn(n).span() == 3 * n - 1);
  }
  CHECK_THROWS_AS(make_Dn(0), DomainError);
}

namespace {

// Copies must be pairwise disjoint and their union must equal the reduced tile.
bool certifies(const Reduction& r) {
  const Tile1D base = r.original.tile();
  std::set<Coord> uni;
  std::size_t total = 0;
  for (const TileCopy& c : r.copies) {
    const Tile1D t = c.reflected ? base.reflected() : base;
    for (Coord o : oracle::offset_set(t)) {
      uni.insert(c.offset + o);
      ++total;
    }
  }
  if (uni.size() != total) return false;
  const Coord lo = *uni.begin();
  std::set<Coord> shifted;
  for (Coord v : uni) shifted.insert(v - lo);
  return shifted == oracle::offset_set(r.reduced);
}

bool reduced_gap_ok(const Tile1D& t) {
  if (t.is_interval()) return true;
  return t.gaps()[0] < std::min(t.runs()[0], t.runs()[1]);
}

}  // namespace

TEST_CASE("glue_reduce examples") {
  const Reduction r = glue_reduce({2, 5, 3});
  CHECK(r.reduced.format() == "5(3)5");
  CHECK(r.copies == std::vector<TileCopy>{{0, true}, {3, false}});
  CHECK(certifies(r));

  const Reduction s = glue_reduce({1, 7, 2});
  CHECK(s.reduced == Tile1D::interval(18));
  CHECK(s.chain.size() == 2);
  CHECK(certifies(s));

  CHECK_THROWS_AS(glue_reduce({3, 2, 4}), NoReductionNeeded);
}

TEST_CASE("glue_reduce certificates on random inputs") {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    const Coord k = 1 + static_cast<Coord>(rng() % 20);
    const Coord l = 1 + static_cast<Coord>(rng() % 20);
    const Coord m = std::min(k, l) + static_cast<Coord>(rng() % 25);
    const Reduction r = glue_reduce({k, m, l});
    INFO(k, " ", m, " ", l);
    CHECK(certifies(r));
    CHECK(reduced_gap_ok(r.reduced));
    CHECK(r.reduced.is_symmetric());
  }
}
