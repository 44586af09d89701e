#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ptile/tile.hpp"

namespace ptile {

using Point = std::vector<Coord>;
/// Side lengths of a rectangular period box / torus.
using Box = std::vector<Coord>;

/// Floor modulus: result in [0, m).
inline Coord floor_mod(Coord a, Coord m) {
  Coord r = a % m;
  return r < 0 ? r + m : r;
}

Coord volume(const Box& box);
/// p reduced into the box coordinatewise.
Point reduce(const Box& box, const Point& p);
/// Lexicographic rank of a reduced point: the first coordinate is most significant.
std::size_t flat_index(const Box& box, const Point& p);
Point unflatten(const Box& box, std::size_t index);
/// Coordinatewise lcm.
Box lcm_box(const Box& a, const Box& b);

/// Explicit membership bitmap on a torus.
struct CellBitmap {
  Box box;
  std::vector<std::uint8_t> bits;

  bool test(const Point& reduced) const { return bits[flat_index(box, reduced)] != 0; }
  std::size_t count() const;
};

/// A periodic subset of Z^d: residue points inside a rectangular period box.
/// Residues are kept sorted lexicographically.
class PeriodicPointSet {
 public:
  PeriodicPointSet(Box box, std::vector<Point> residues);

  static PeriodicPointSet empty(Box box) { return PeriodicPointSet(std::move(box), {}); }
  /// All cells of the box satisfying `pred`.
  static PeriodicPointSet from_predicate(Box box, const std::function<bool(const Point&)>& pred);
  static PeriodicPointSet from_bitmap(const CellBitmap& bitmap);

  std::size_t dim() const { return box_.size(); }
  const Box& box() const { return box_; }
  const std::vector<Point>& residues() const { return residues_; }
  std::size_t size() const { return residues_.size(); }
  bool empty() const { return residues_.empty(); }

  /// Membership of any point of Z^d.
  bool contains(const Point& p) const;
  PeriodicPointSet translated(const Point& shift) const;
  /// Point reflection p -> -p.
  PeriodicPointSet negated() const;
  /// Same set expressed on a box that is a multiple of this period.
  PeriodicPointSet on_box(const Box& box) const;

  friend bool operator==(const PeriodicPointSet&, const PeriodicPointSet&) = default;

 private:
  Box box_;
  std::vector<Point> residues_;
};

/// Set algebra; operands are brought to the coordinatewise lcm of their boxes.
PeriodicPointSet operator|(const PeriodicPointSet& a, const PeriodicPointSet& b);
PeriodicPointSet operator&(const PeriodicPointSet& a, const PeriodicPointSet& b);
PeriodicPointSet operator-(const PeriodicPointSet& a, const PeriodicPointSet& b);
PeriodicPointSet operator^(const PeriodicPointSet& a, const PeriodicPointSet& b);

/// Throws DimensionMismatch unless every box side is a multiple of the period.
CellBitmap rasterize(const PeriodicPointSet& s, const Box& box);

/// Optional restriction x == r (mod modulus) for r in `residues`.
struct XConstraint {
  Coord modulus = 2;
  std::vector<Coord> residues;
};

/// {(x, y) : x - slope*y == r (mod modulus) for some r in residues}, optionally
/// intersected with an x-congruence. Box [lcm(modulus, c), modulus].
PeriodicPointSet skew_line_set(Coord modulus, Coord slope, const std::vector<Coord>& residues,
                               const std::optional<XConstraint>& x_constraint = std::nullopt);

/// One translated copy of a tile along a coordinate axis. The anchor is the
/// cell of offset 0 (of the reflected tile when `reflected`).
struct Placement {
  Point anchor;
  int axis = 0;
  bool reflected = false;

  friend bool operator==(const Placement&, const Placement&) = default;
  friend auto operator<=>(const Placement&, const Placement&) = default;
};

/// Cells of a placement in Z^d (not reduced).
std::vector<Point> cells(const Placement& p, const Tile1D& tile);

/// Finite-torus certificate of a periodic tiling of Z^d minus a hole set.
struct TilingDocument {
  Box box;
  Tile1D tile;
  std::optional<PeriodicPointSet> holes;
  std::vector<Placement> placements;

  std::size_t dim() const { return box.size(); }
};

/// Outcome of verify. On failure `cell` is the lexicographically first
/// offending cell and `coverage` the number of placements covering it.
struct VerifyReport {
  bool pass = false;
  std::optional<Point> cell;
  int coverage = 0;
  bool cell_is_hole = false;

  std::string describe() const;
};

/// Exact-cover check of a document on its torus. Throws StructuralError for
/// malformed documents (non-positive box side, anchor outside the box, ...).
VerifyReport verify(const TilingDocument& doc);

/// Throws IntegrityError with `what` and the report when the document fails.
void require_pass(const TilingDocument& doc, const std::string& what);

/// A, B, C sharing one box together with tilings of the complements of
/// A u B, A u C and B u C.
struct TripleTiling {
  PeriodicPointSet a;
  PeriodicPointSet b;
  PeriodicPointSet c;
  TilingDocument ab;
  TilingDocument ac;
  TilingDocument bc;
};

/// Disjointness, equal cardinality, hole sets and the three verifications.
/// Throws InvariantError or IntegrityError.
void check_triple(const TripleTiling& t);

}  // namespace ptile
