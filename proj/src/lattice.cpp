#include "ptile/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ptile/errors.hpp"

namespace ptile {

Coord volume(const Box& box) {
  Coord v = 1;
  for (Coord side : box) v *= side;
  return v;
}

Point reduce(const Box& box, const Point& p) {
  Point out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = floor_mod(p[i], box[i]);
  return out;
}

std::size_t flat_index(const Box& box, const Point& p) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < box.size(); ++i)
    idx = idx * static_cast<std::size_t>(box[i]) + static_cast<std::size_t>(p[i]);
  return idx;
}

Point unflatten(const Box& box, std::size_t index) {
  Point p(box.size());
  for (std::size_t i = box.size(); i-- > 0;) {
    p[i] = static_cast<Coord>(index % static_cast<std::size_t>(box[i]));
    index /= static_cast<std::size_t>(box[i]);
  }
  return p;
}

Box lcm_box(const Box& a, const Box& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dimension mismatch between boxes");
  Box out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::lcm(a[i], b[i]);
  return out;
}

std::size_t CellBitmap::count() const {
  return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

namespace {

void check_box(const Box& box) {
  if (box.empty()) throw StructuralError("box must have at least one dimension");
  for (Coord side : box)
    if (side <= 0) throw StructuralError("box sides must be positive, got " + std::to_string(side));
}

bool inside(const Box& box, const Point& p) {
  if (p.size() != box.size()) return false;
  for (std::size_t i = 0; i < box.size(); ++i)
    if (p[i] < 0 || p[i] >= box[i]) return false;
  return true;
}

}  // namespace

PeriodicPointSet::PeriodicPointSet(Box box, std::vector<Point> residues)
    : box_(std::move(box)), residues_(std::move(residues)) {
  check_box(box_);
  for (const Point& p : residues_)
    if (!inside(box_, p)) throw StructuralError("residue outside its period box");
  std::sort(residues_.begin(), residues_.end());
  if (std::adjacent_find(residues_.begin(), residues_.end()) != residues_.end())
    throw StructuralError("duplicate residue");
}

PeriodicPointSet PeriodicPointSet::from_predicate(Box box,
                                                  const std::function<bool(const Point&)>& pred) {
  check_box(box);
  std::vector<Point> pts;
  const auto n = static_cast<std::size_t>(volume(box));
  for (std::size_t i = 0; i < n; ++i) {
    Point p = unflatten(box, i);
    if (pred(p)) pts.push_back(std::move(p));
  }
  return PeriodicPointSet(std::move(box), std::move(pts));
}

PeriodicPointSet PeriodicPointSet::from_bitmap(const CellBitmap& bitmap) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < bitmap.bits.size(); ++i)
    if (bitmap.bits[i]) pts.push_back(unflatten(bitmap.box, i));
  return PeriodicPointSet(bitmap.box, std::move(pts));
}

bool PeriodicPointSet::contains(const Point& p) const {
  if (p.size() != box_.size()) return false;
  return std::binary_search(residues_.begin(), residues_.end(), reduce(box_, p));
}

PeriodicPointSet PeriodicPointSet::translated(const Point& shift) const {
  std::vector<Point> pts;
  pts.reserve(residues_.size());
  for (const Point& p : residues_) {
    Point q = p;
    for (std::size_t i = 0; i < q.size(); ++i) q[i] += shift[i];
    pts.push_back(reduce(box_, q));
  }
  return PeriodicPointSet(box_, std::move(pts));
}

PeriodicPointSet PeriodicPointSet::negated() const {
  std::vector<Point> pts;
  pts.reserve(residues_.size());
  for (const Point& p : residues_) {
    Point q = p;
    for (Coord& x : q) x = -x;
    pts.push_back(reduce(box_, q));
  }
  return PeriodicPointSet(box_, std::move(pts));
}

PeriodicPointSet PeriodicPointSet::on_box(const Box& box) const {
  if (box == box_) return *this;
  return from_bitmap(rasterize(*this, box));
}

CellBitmap rasterize(const PeriodicPointSet& s, const Box& box) {
  check_box(box);
  if (box.size() != s.dim()) throw DimensionMismatch("dimension mismatch in rasterize");
  for (std::size_t i = 0; i < box.size(); ++i)
    if (box[i] % s.box()[i] != 0)
      throw DimensionMismatch("box side " + std::to_string(box[i]) +
                              " is not a multiple of period " + std::to_string(s.box()[i]));
  CellBitmap out{box, std::vector<std::uint8_t>(static_cast<std::size_t>(volume(box)), 0)};
  // Enumerate every box-translate of each residue.
  Box reps(box.size());
  for (std::size_t i = 0; i < box.size(); ++i) reps[i] = box[i] / s.box()[i];
  const auto copies = static_cast<std::size_t>(volume(reps));
  for (const Point& r : s.residues()) {
    for (std::size_t c = 0; c < copies; ++c) {
      Point shift = unflatten(reps, c);
      for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = r[i] + shift[i] * s.box()[i];
      out.bits[flat_index(box, shift)] = 1;
    }
  }
  return out;
}

namespace {

template <typename Op>
PeriodicPointSet combine(const PeriodicPointSet& a, const PeriodicPointSet& b, Op op) {
  Box box = lcm_box(a.box(), b.box());
  CellBitmap ra = rasterize(a, box);
  CellBitmap rb = rasterize(b, box);
  for (std::size_t i = 0; i < ra.bits.size(); ++i)
    ra.bits[i] = op(ra.bits[i] != 0, rb.bits[i] != 0) ? 1 : 0;
  return PeriodicPointSet::from_bitmap(ra);
}

}  // namespace

PeriodicPointSet operator|(const PeriodicPointSet& a, const PeriodicPointSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}
PeriodicPointSet operator&(const PeriodicPointSet& a, const PeriodicPointSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}
PeriodicPointSet operator-(const PeriodicPointSet& a, const PeriodicPointSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}
PeriodicPointSet operator^(const PeriodicPointSet& a, const PeriodicPointSet& b) {
  return combine(a, b, [](bool x, bool y) { return x != y; });
}

PeriodicPointSet skew_line_set(Coord modulus, Coord slope, const std::vector<Coord>& residues,
                               const std::optional<XConstraint>& x_constraint) {
  if (modulus < 1) throw DomainError("modulus must be >= 1");
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(modulus), 0);
  for (Coord r : residues) hit[static_cast<std::size_t>(floor_mod(r, modulus))] = 1;

  Coord width = modulus;
  std::vector<std::uint8_t> allowed;
  if (x_constraint) {
    if (x_constraint->modulus < 1) throw DomainError("constraint modulus must be >= 1");
    width = std::lcm(modulus, x_constraint->modulus);
    allowed.assign(static_cast<std::size_t>(x_constraint->modulus), 0);
    for (Coord r : x_constraint->residues)
      allowed[static_cast<std::size_t>(floor_mod(r, x_constraint->modulus))] = 1;
  }
  std::vector<Point> pts;
  for (Coord x = 0; x < width; ++x) {
    if (x_constraint && !allowed[static_cast<std::size_t>(x % x_constraint->modulus)]) continue;
    for (Coord y = 0; y < modulus; ++y)
      if (hit[static_cast<std::size_t>(floor_mod(x - slope * y, modulus))]) pts.push_back({x, y});
  }
  return PeriodicPointSet({width, modulus}, std::move(pts));
}

std::vector<Point> cells(const Placement& p, const Tile1D& tile) {
  std::vector<Point> out;
  const std::vector<Coord> offs = (p.reflected ? tile.reflected() : tile).offsets();
  out.reserve(offs.size());
  for (Coord o : offs) {
    Point c = p.anchor;
    c[static_cast<std::size_t>(p.axis)] += o;
    out.push_back(std::move(c));
  }
  return out;
}

std::string VerifyReport::describe() const {
  if (pass) return "PASS";
  std::ostringstream os;
  os << "FAIL at (";
  for (std::size_t i = 0; i < cell->size(); ++i) os << (i ? "," : "") << (*cell)[i];
  os << ") " << (cell_is_hole ? "hole" : "cell") << " covered " << coverage << " time(s)";
  return os.str();
}

VerifyReport verify(const TilingDocument& doc) {
  check_box(doc.box);
  const std::size_t d = doc.dim();
  if (doc.holes && doc.holes->dim() != d) throw DimensionMismatch("hole set dimension mismatch");

  std::vector<std::size_t> stride(d, 1);
  for (std::size_t i = d; i-- > 1;) stride[i - 1] = stride[i] * static_cast<std::size_t>(doc.box[i]);

  const auto n = static_cast<std::size_t>(volume(doc.box));
  std::vector<std::uint16_t> count(n, 0);
  const std::vector<Coord> plain = doc.tile.offsets();
  const std::vector<Coord> mirrored = doc.tile.reflected().offsets();

  for (const Placement& p : doc.placements) {
    if (p.axis < 0 || static_cast<std::size_t>(p.axis) >= d)
      throw StructuralError("placement axis " + std::to_string(p.axis) + " out of range");
    if (!inside(doc.box, p.anchor)) throw StructuralError("placement anchor outside the box");
    const auto axis = static_cast<std::size_t>(p.axis);
    const std::size_t base = flat_index(doc.box, p.anchor) - static_cast<std::size_t>(p.anchor[axis]) * stride[axis];
    for (Coord o : p.reflected ? mirrored : plain) {
      const auto along = static_cast<std::size_t>((p.anchor[axis] + o) % doc.box[axis]);
      std::uint16_t& c = count[base + along * stride[axis]];
      if (c < UINT16_MAX) ++c;
    }
  }

  std::vector<std::uint8_t> hole(n, 0);
  if (doc.holes) hole = rasterize(*doc.holes, doc.box).bits;

  for (std::size_t i = 0; i < n; ++i) {
    const int expected = hole[i] ? 0 : 1;
    if (count[i] != expected)
      return VerifyReport{false, unflatten(doc.box, i), count[i], hole[i] != 0};
  }
  return VerifyReport{true, std::nullopt, 0, false};
}

void require_pass(const TilingDocument& doc, const std::string& what) {
  VerifyReport r = verify(doc);
  if (!r.pass) throw IntegrityError(what + ": " + r.describe());
}

void check_triple(const TripleTiling& t) {
  if (!(t.a & t.b).empty() || !(t.a & t.c).empty() || !(t.b & t.c).empty())
    throw InvariantError("A, B, C are not pairwise disjoint");
  const Box box = lcm_box(lcm_box(t.a.box(), t.b.box()), t.c.box());
  const std::size_t na = rasterize(t.a, box).count();
  if (rasterize(t.b, box).count() != na || rasterize(t.c, box).count() != na)
    throw InvariantError("A, B, C do not have the same cardinality");
  const struct {
    const TilingDocument& doc;
    PeriodicPointSet holes;
    const char* name;
  } parts[] = {{t.ab, t.a | t.b, "A u B"}, {t.ac, t.a | t.c, "A u C"}, {t.bc, t.b | t.c, "B u C"}};
  for (const auto& part : parts) {
    if (!part.doc.holes ||
        part.doc.holes->on_box(part.doc.box) != part.holes.on_box(part.doc.box))
      throw InvariantError(std::string("hole set of the tiling does not equal ") + part.name);
    require_pass(part.doc, std::string("tiling of the complement of ") + part.name);
  }
}

}  // namespace ptile
