#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ptile {

using Coord = std::int64_t;

/// A one-dimensional tile a_1(b_1)a_2 ... (b_{n-1})a_n: alternating run and
/// gap lengths. Offsets are derived on demand and always start at 0.
class Tile1D {
 public:
  Tile1D(std::vector<Coord> runs, std::vector<Coord> gaps);

  /// Plain interval of the given length.
  static Tile1D interval(Coord length);
  /// Inverse of offsets(); the set is translated so that its minimum is 0.
  static Tile1D from_offsets(std::vector<Coord> offsets);

  const std::vector<Coord>& runs() const { return runs_; }
  const std::vector<Coord>& gaps() const { return gaps_; }

  std::vector<Coord> offsets() const;
  Coord cardinality() const;
  Coord span() const;
  bool is_interval() const { return runs_.size() == 1; }
  bool is_symmetric() const;

  /// Mirror image: runs and gaps in reverse order.
  Tile1D reflected() const;

  std::string format() const;

  friend bool operator==(const Tile1D&, const Tile1D&) = default;

 private:
  std::vector<Coord> runs_;
  std::vector<Coord> gaps_;
};

/// The tile k(m)l.
struct PuncturedInterval {
  Coord k = 1;
  Coord m = 1;
  Coord l = 1;

  Tile1D tile() const { return Tile1D({k, l}, {m}); }
  PuncturedInterval reflected() const { return {l, m, k}; }

  friend bool operator==(const PuncturedInterval&, const PuncturedInterval&) = default;
};

/// Grammar: INT ( "(" INT ")" INT )*, decimal, no whitespace, every INT >= 1.
Tile1D parse_tile(std::string_view spec);

inline std::string format_tile(const Tile1D& t) { return t.format(); }

/// T_k = k(k-1)1(k-1)1 ... 1(k-1)k with k gaps of length k-1.
Tile1D make_Tk(Coord k);

/// D_n = 2(1)2(1) ... (1)2 with n runs.
Tile1D make_Dn(Coord n);

/// One copy of the reduced tile's ingredient, placed at `offset` in the
/// reduced tile's coordinates.
struct TileCopy {
  Coord offset = 0;
  bool reflected = false;

  friend bool operator==(const TileCopy&, const TileCopy&) = default;
};

/// One gluing step: copies of `from` whose disjoint union is `to`.
struct GlueStep {
  Tile1D from;
  Tile1D to;
  std::vector<TileCopy> copies;
};

/// Result of glue_reduce: the reduced tile, its decomposition into copies of
/// the original tile, and the chain of steps that produced it.
struct Reduction {
  PuncturedInterval original;
  Tile1D reduced;
  std::vector<TileCopy> copies;
  std::vector<GlueStep> chain;
};

/// Glues copies of k(m)l (m >= min(k, l)) into (k+l)(m-min)(k+l), then glues
/// floor(m'/k')+1 copies of that until the gap is below the run length or
/// vanishes. Throws NoReductionNeeded when m < min(k, l).
Reduction glue_reduce(const PuncturedInterval& t);

}  // namespace ptile
