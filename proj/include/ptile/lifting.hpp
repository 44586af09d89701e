#pragma once

#include <array>
#include <vector>

#include "ptile/constructions.hpp"
#include "ptile/lattice.hpp"

namespace ptile {

/// Subset Y of Z x {0,1,2} meeting every column in exactly two cells, with a
/// tiling by k(m)l. Row i is row 0 shifted by i(k+l); the period is 3(k+l).
/// Row 0 is S1 u S2 u S3 u S4 with S1 = {1..k}, S2 = {k+m+1..k+m+l},
/// S3 = {2k+l+1..2k+2l}, S4 = {2k+2l+m+1..3k+2l+m}. S1 u S2 is covered by
/// k(m)l and S3 u S4 by its mirror image l(m)k. m = 0 stands for the plain
/// interval of length k+l.
struct YStructure {
  Coord k;
  Coord m;
  Coord l;
  Coord period;
  std::array<std::vector<Coord>, 3> rows;
  /// Tiling of Y on the torus [period, 3]; every placement runs along axis 0.
  TilingDocument tiling;

  /// Row of column z that Y does not cover.
  int hole_row(Coord z) const;
};

/// Throws ReductionRequired when m >= min(k, l). Checks the two-per-column
/// invariant, the shifted-cover identity and the tiling before returning.
YStructure build_Y(Coord k, Coord m, Coord l);

/// True when s, shift + s and 2 shift + s partition Z/period.
bool covers_once(const std::vector<Coord>& s, Coord shift, Coord period);

/// The S_o = S1 u S3 and S_e = S2 u S4 blocks of row 0.
std::array<std::vector<Coord>, 2> y_blocks(Coord k, Coord m, Coord l);

/// Composes a verified planar triple into a tiling of the 3-torus
/// [Bx, By, period of Y]. Holes of A, B, C are paired by lexicographic rank.
/// When m >= min(k, l) the Y-set is built for the glued tile and every glued
/// copy is expanded back into copies of `tile`.
TilingDocument lift_triple(const PuncturedInterval& tile, const TripleTiling& triple);

/// construct(k, l) followed by lift_triple for k(1)l.
TilingDocument tile_Z3(Coord k, Coord l);

}  // namespace ptile
