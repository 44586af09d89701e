#include "ptile/lifting.hpp"

#include <algorithm>

#include "ptile/errors.hpp"

namespace ptile {

namespace {

std::vector<Coord> range(Coord first, Coord last) {
  std::vector<Coord> out;
  for (Coord v = first; v <= last; ++v) out.push_back(v);
  return out;
}

}  // namespace

std::array<std::vector<Coord>, 2> y_blocks(Coord k, Coord m, Coord l) {
  std::vector<Coord> odd = range(1, k);
  std::vector<Coord> s3 = range(2 * k + l + 1, 2 * k + 2 * l);
  odd.insert(odd.end(), s3.begin(), s3.end());
  std::vector<Coord> even = range(k + m + 1, k + m + l);
  std::vector<Coord> s4 = range(2 * k + 2 * l + m + 1, 3 * k + 2 * l + m);
  even.insert(even.end(), s4.begin(), s4.end());
  return {odd, even};
}

bool covers_once(const std::vector<Coord>& s, Coord shift, Coord period) {
  std::vector<int> hits(static_cast<std::size_t>(period), 0);
  for (Coord t = 0; t < 3; ++t)
    for (Coord v : s) ++hits[static_cast<std::size_t>(floor_mod(v + t * shift, period))];
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

int YStructure::hole_row(Coord z) const {
  const Coord r = floor_mod(z, period);
  for (int i = 0; i < 3; ++i)
    if (!std::binary_search(rows[static_cast<std::size_t>(i)].begin(),
                            rows[static_cast<std::size_t>(i)].end(), r))
      return i;
  throw IntegrityError("Y covers all three rows of a column");
}

YStructure build_Y(Coord k, Coord m, Coord l) {
  if (k < 1 || l < 1 || m < 0) throw DomainError("build_Y needs k, l >= 1 and m >= 0");
  if (m >= std::min(k, l))
    throw ReductionRequired("Y needs m < min(k, l); glue the tile down first");

  const Coord shift = k + l;
  const Coord period = 3 * shift;
  const auto [odd, even] = y_blocks(k, m, l);
  if (!covers_once(odd, shift, period) || !covers_once(even, shift, period))
    throw IntegrityError("shifted blocks of Y do not partition Z/3(k+l)");

  std::vector<Coord> row0 = odd;
  row0.insert(row0.end(), even.begin(), even.end());
  for (Coord& v : row0) v = floor_mod(v, period);

  const Tile1D tile = m == 0 ? Tile1D::interval(k + l) : PuncturedInterval{k, m, l}.tile();
  const bool mirror = !tile.is_symmetric();
  const Box box{period, 3};

  YStructure y{k, m, l, period, {}, TilingDocument{box, tile, std::nullopt, {}}};
  for (Coord i = 0; i < 3; ++i) {
    auto& row = y.rows[static_cast<std::size_t>(i)];
    for (Coord v : row0) row.push_back(floor_mod(v + i * shift, period));
    std::sort(row.begin(), row.end());
    y.tiling.placements.push_back({{floor_mod(1 + i * shift, period), i}, 0, false});
    y.tiling.placements.push_back({{floor_mod(2 * k + l + 1 + i * shift, period), i}, 0, mirror});
  }
  y.tiling.holes = PeriodicPointSet::from_predicate(box, [&](const Point& p) {
    return !std::binary_search(y.rows[static_cast<std::size_t>(p[1])].begin(),
                               y.rows[static_cast<std::size_t>(p[1])].end(), p[0]);
  });

  for (Coord z = 0; z < period; ++z) {
    int count = 0;
    for (const auto& row : y.rows) count += std::binary_search(row.begin(), row.end(), z) ? 1 : 0;
    if (count != 2) throw IntegrityError("column " + std::to_string(z) + " of Y meets " +
                                         std::to_string(count) + " cells");
  }
  require_pass(y.tiling, "tiling of Y");
  return y;
}

TilingDocument lift_triple(const PuncturedInterval& tile, const TripleTiling& triple) {
  const Tile1D t = tile.tile();
  for (const TilingDocument* d : {&triple.ab, &triple.ac, &triple.bc}) {
    if (d->dim() != 2) throw StructuralError("lift_triple expects planar tilings");
    if (!(d->tile == t)) throw StructuralError("triple is tiled by " + d->tile.format() +
                                               ", not " + t.format());
  }
  if (triple.ab.box != triple.ac.box || triple.ab.box != triple.bc.box)
    throw StructuralError("the three planar tilings must share one box");
  check_triple(triple);

  // Copies of `tile` that make up one tile of Y.
  std::vector<TileCopy> expand{{0, false}};
  YStructure y = [&] {
    if (tile.m < std::min(tile.k, tile.l)) return build_Y(tile.k, tile.m, tile.l);
    Reduction r = glue_reduce(tile);
    expand = r.copies;
    const Tile1D& g = r.reduced;
    if (g.is_interval()) return build_Y(g.runs()[0] / 2, 0, g.runs()[0] / 2);
    return build_Y(g.runs()[0], g.gaps()[0], g.runs()[1]);
  }();

  const Box& base = triple.ab.box;
  const Box box{base[0], base[1], y.period};
  const std::vector<Point> as = triple.a.on_box(base).residues();
  const std::vector<Point> bs = triple.b.on_box(base).residues();
  const std::vector<Point> cs = triple.c.on_box(base).residues();

  TilingDocument out{box, t, std::nullopt, {}};
  for (std::size_t i = 0; i < as.size(); ++i) {
    const std::array<const Point*, 3> column{&as[i], &bs[i], &cs[i]};
    for (const Placement& p : y.tiling.placements) {
      const Point& base_pt = *column[static_cast<std::size_t>(p.anchor[1])];
      for (const TileCopy& c : expand) {
        // Glued tiles are symmetric, so p.reflected and c.reflected are never both set.
        const bool refl = p.reflected || c.reflected;
        out.placements.push_back(
            {{base_pt[0], base_pt[1], floor_mod(p.anchor[0] + c.offset, y.period)}, 2, refl});
      }
    }
  }
  for (Coord z = 0; z < y.period; ++z) {
    const int hole = y.hole_row(z);
    const TilingDocument& level = hole == 2 ? triple.ab : hole == 1 ? triple.ac : triple.bc;
    for (const Placement& p : level.placements)
      out.placements.push_back({{p.anchor[0], p.anchor[1], z}, p.axis, p.reflected});
  }
  require_pass(out, "lifted tiling");
  return out;
}

TilingDocument tile_Z3(Coord k, Coord l) {
  return lift_triple(PuncturedInterval{k, 1, l}, construct(k, l).triple);
}

}  // namespace ptile
