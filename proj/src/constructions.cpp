#include "ptile/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "ptile/errors.hpp"

namespace ptile {

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::OddSum: return "OddSum";
    case CaseTag::BothOdd: return "BothOdd";
    case CaseTag::EqualV2: return "EqualV2";
    case CaseTag::Mixed2Mod4: return "Mixed2Mod4";
    case CaseTag::SymWarmup: return "SymWarmup";
  }
  return "?";
}

std::optional<CaseTag> case_from_string(std::string_view name) {
  for (CaseTag t : {CaseTag::OddSum, CaseTag::BothOdd, CaseTag::EqualV2, CaseTag::Mixed2Mod4,
                    CaseTag::SymWarmup})
    if (to_string(t) == name) return t;
  return std::nullopt;
}

int v2(Coord n) {
  if (n <= 0) throw DomainError("v2 needs a positive integer");
  int v = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v;
  }
  return v;
}

std::optional<CaseTag> applicable_case(Coord k, Coord l) {
  if (k < 1 || l < 1) throw DomainError("k and l must be >= 1");
  const int vk = v2(k), vl = v2(l);
  if ((k + l) % 2 == 1) return CaseTag::OddSum;
  if (vk == vl) return vk == 0 ? CaseTag::BothOdd : CaseTag::EqualV2;
  if (std::min(vk, vl) == 1) return CaseTag::Mixed2Mod4;
  return std::nullopt;
}

namespace {

void check_positive(Coord k, Coord l) {
  if (k < 1 || l < 1) throw DomainError("k and l must be >= 1");
}

std::string pair_name(Coord k, Coord l) {
  return "(" + std::to_string(k) + "," + std::to_string(l) + ")";
}

TilingDocument make_doc(const Box& box, Coord k, Coord l, const PeriodicPointSet& holes) {
  return TilingDocument{box, PuncturedInterval{k, 1, l}.tile(), holes.on_box(box), {}};
}

/// One placement per hole, anchored at the hole plus `shift`.
void place_at_holes(TilingDocument& doc, const PeriodicPointSet& anchors_from, const Point& shift,
                    int axis) {
  const PeriodicPointSet holes = anchors_from.on_box(doc.box);
  for (const Point& h : holes.residues()) {
    Point a = h;
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += shift[i];
    doc.placements.push_back({reduce(doc.box, a), axis, false});
  }
}

void add(TilingDocument& doc, Coord x, Coord y, int axis) {
  doc.placements.push_back({reduce(doc.box, {x, y}), axis, false});
}

Construction finish(CaseTag tag, Coord k, Coord l, TripleTiling t) {
  for (TilingDocument* d : {&t.ab, &t.ac, &t.bc}) std::sort(d->placements.begin(), d->placements.end());
  check_triple(t);
  return Construction{tag, k, l, std::move(t)};
}

Coord mod_inverse(Coord a, Coord m) {
  Coord g = m, x = 0, x1 = 1, r = floor_mod(a, m);
  while (r != 0) {
    Coord qt = g / r;
    std::tie(g, r) = std::make_pair(r, g - qt * r);
    std::tie(x, x1) = std::make_pair(x1, x - qt * x1);
  }
  if (g != 1) throw IntegrityError("slope is not invertible modulo the period");
  return floor_mod(x, m);
}

}  // namespace

Construction construct_sym_warmup(Coord k) {
  if (k < 2 || k % 4 != 2)
    throw WrongCaseError("symmetric warm-up needs k == 2 (mod 4), got k=" + std::to_string(k));
  const Coord p = k + 1;
  const Coord side = std::lcm(p, Coord{4});
  const Box box{side, side};

  PeriodicPointSet a = skew_line_set(p, 1, {0}, XConstraint{4, {0, 1}});
  PeriodicPointSet b = skew_line_set(p, 1, {0}, XConstraint{4, {2, 3}});
  PeriodicPointSet c = b.translated({0, 1});

  TripleTiling t{a, b, c, make_doc(box, k, k, a | b), make_doc(box, k, k, a | c),
                 make_doc(box, k, k, b | c)};

  // Complement of the diagonals: one tile right after every other hole.
  for (Coord y = 0; y < side; ++y)
    for (Coord x = y + 1; x < y + 1 + side; x += 2 * p) add(t.ab, x, y, 0);

  // Columns: x == 0,1 (mod 4) carry A at y == x, the others carry C at y == x+1.
  for (Coord x = 0; x < side; ++x) {
    const Coord hole = (x % 4 < 2) ? x : x + 1;
    for (Coord y = hole + 1; y < hole + 1 + side; y += 2 * p) add(t.ac, x, y, 1);
  }

  // Rows of the complement of B u C: two abutting tiles per period 4k+4.
  const std::vector<Coord> offs = t.bc.tile.offsets();
  const Coord span = t.bc.tile.span();
  for (Coord y = 0; y < side; ++y) {
    std::vector<char> free(static_cast<std::size_t>(side));
    for (Coord x = 0; x < side; ++x) free[static_cast<std::size_t>(x)] = !t.bc.holes->contains({x, y});
    bool placed = false;
    for (Coord start = 0; start < side && !placed; ++start) {
      std::vector<char> cover(static_cast<std::size_t>(side), 0);
      for (Coord shift : {start, start + span})
        for (Coord o : offs) ++cover[static_cast<std::size_t>((shift + o) % side)];
      bool ok = true;
      for (std::size_t i = 0; i < cover.size() && ok; ++i) ok = cover[i] == (free[i] ? 1 : 0);
      if (ok) {
        add(t.bc, start, y, 0);
        add(t.bc, start + span, y, 0);
        placed = true;
      }
    }
    if (!placed) throw IntegrityError("warm-up row " + std::to_string(y) + " has no two-tile cover");
  }
  return finish(CaseTag::SymWarmup, k, k, std::move(t));
}

Construction construct_case1(Coord k, Coord l) {
  check_positive(k, l);
  if ((k + l) % 2 == 0) throw WrongCaseError("OddSum needs k + l odd, got " + pair_name(k, l));
  const Coord K = k + l + 1;
  const Box box{K, K};
  PeriodicPointSet a = skew_line_set(K, 1, {0}, XConstraint{2, {0}});
  PeriodicPointSet b = skew_line_set(K, 1, {0}, XConstraint{2, {1}});
  PeriodicPointSet c = skew_line_set(K, 1, {K - 1}, XConstraint{2, {0}});

  TripleTiling t{a, b, c, make_doc(box, k, l, a | b), make_doc(box, k, l, a | c),
                 make_doc(box, k, l, b | c)};
  place_at_holes(t.ab, a | b, {-k, 0}, 0);
  place_at_holes(t.ac, a | c, {-k, 0}, 0);
  place_at_holes(t.bc, b | c, {0, -k}, 1);
  return finish(CaseTag::OddSum, k, l, std::move(t));
}

Construction construct_case2(Coord k, Coord l) {
  check_positive(k, l);
  if (k % 2 == 0 || l % 2 == 0)
    throw WrongCaseError("BothOdd needs k and l odd, got " + pair_name(k, l));
  const Coord K = k + l + 2;
  const Box box{K, K};
  const XConstraint even{2, {0}}, odd{2, {1}};
  // A_1: x == y, A_2 = A_1 + (k+1, 0); B_i = A_i + (1,1); C_i = A_i + (0,1).
  PeriodicPointSet a2 = skew_line_set(K, 1, {k + 1}, even);
  PeriodicPointSet b1 = skew_line_set(K, 1, {0}, odd);
  PeriodicPointSet b2 = skew_line_set(K, 1, {k + 1}, odd);
  PeriodicPointSet c1 = skew_line_set(K, 1, {K - 1}, even);
  PeriodicPointSet c2 = skew_line_set(K, 1, {k}, even);
  PeriodicPointSet a = skew_line_set(K, 1, {0}, even) | a2;
  PeriodicPointSet b = b1 | b2;
  PeriodicPointSet c = c1 | c2;

  TripleTiling t{a, b, c, make_doc(box, k, l, a | b), make_doc(box, k, l, a | c),
                 make_doc(box, k, l, b | c)};
  place_at_holes(t.ab, a2 | b2, {-k, 0}, 0);
  place_at_holes(t.ac, a2 | c2, {-k, 0}, 0);
  place_at_holes(t.bc, b1 | c1, {0, -k}, 1);
  return finish(CaseTag::BothOdd, k, l, std::move(t));
}

SkewParams skew_params(Coord k, Coord l) {
  check_positive(k, l);
  const Coord q = Coord{1} << v2(k);
  const Coord s = k + l + 2;
  return SkewParams{q, 2 * s * q, s * (q - 1) + 1};
}

Construction construct_case_v2(Coord k, Coord l) {
  check_positive(k, l);
  if (v2(k) != v2(l)) throw WrongCaseError("EqualV2 needs v2(k) == v2(l), got " + pair_name(k, l));
  if (v2(k) == 0) return construct_case2(k, l);

  const auto [q, M, slope] = skew_params(k, l);
  const Coord S = k + l + 2;
  std::vector<Coord> ra, rb, rc;
  for (Coord i = 0; i < 2 * q; ++i) {
    if (i < q) {
      ra.insert(ra.end(), {i * S, i * S + k + 1});
    } else {
      rb.insert(rb.end(), {i * S, i * S + k + 1});
      rc.insert(rc.end(), {i * S + k, i * S + l + k + 1});
    }
  }
  PeriodicPointSet a = skew_line_set(M, slope, ra);
  PeriodicPointSet b = skew_line_set(M, slope, rb);
  PeriodicPointSet c = skew_line_set(M, slope, rc);
  const Box box{M, M};

  TripleTiling t{a, b, c, make_doc(box, k, l, a | b), make_doc(box, k, l, a | c),
                 make_doc(box, k, l, b | c)};
  // Rows are translates of row 0 by slope * y.
  for (Coord y = 0; y < M; ++y) {
    for (Coord i = 0; i < 2 * q; ++i) {
      add(t.ab, slope * y + i * S + 1, y, 0);
      add(t.ac, slope * y + i * S + (i < q ? 1 : 0), y, 0);
    }
  }
  // Columns are translates of column 0 by slope^{-1} * x.
  const Coord inv = mod_inverse(slope, M);
  for (Coord x = 0; x < M; ++x) {
    const Coord shift = floor_mod(inv * x, M);
    for (Coord i = 0; i < 2 * q; ++i) add(t.bc, x, shift + i * S - k + (i < q ? 1 : 0), 1);
  }
  return finish(CaseTag::EqualV2, k, l, std::move(t));
}

std::vector<Coord> mixed_permutation(Coord k, Coord l) {
  check_positive(k, l);
  if (k % 4 != 2 || l % 4 != 0)
    throw WrongCaseError("permutation needs k == 2 (mod 4) and 4 | l, got " + pair_name(k, l));
  const Coord K = (k + l + 2) / 2;
  const Coord j = k / 2;
  const Coord K1 = K / std::gcd(j, K);
  std::vector<Coord> a;
  for (Coord i = 1; i <= K; ++i) a.push_back(floor_mod(j * (i - 1) + (i - 1) / K1, K));
  return a;
}

namespace {

// The construction for k == 2 (mod 4), 4 | l.
TripleTiling mixed_triple(Coord k, Coord l) {
  const Coord K = (k + l + 2) / 2;
  const Coord N = 2 * K;
  const Coord j = k / 2;
  const Box box{N, N};
  const std::vector<Coord> perm = mixed_permutation(k, l);

  std::vector<Point> u_pts;
  for (Coord i = 0; i < K; ++i)
    for (Coord dx : {0, 1})
      for (Coord dy : {Coord{0}, k + 1}) u_pts.push_back(reduce(box, {2 * i + dx, 2 * i + dy}));
  PeriodicPointSet u(box, u_pts);

  std::vector<Point> x_pts;
  std::vector<Point> ac_anchors;
  std::vector<Point> bc_holes;
  for (std::size_t p = 0; p + 1 < perm.size(); p += 2) {
    const Coord alpha = perm[p], beta = perm[p + 1];
    const Coord step = floor_mod(beta - alpha, K);
    std::vector<Coord> xs;
    Coord anchor_x = 0;
    std::vector<Point> v;
    if (step == j) {
      xs = {2 * alpha, 2 * beta + 1};
      anchor_x = 2 * alpha + 1;
      v = {{2 * alpha, 2 * beta}, {2 * alpha + 1, 2 * alpha}, {2 * beta, 2 * beta}, {2 * beta + 1, 2 * alpha}};
    } else if (step == floor_mod(j + 1, K)) {
      xs = {2 * alpha + 1, 2 * beta};
      anchor_x = 2 * alpha + 2;
      v = {{2 * alpha, 2 * alpha}, {2 * alpha + 1, 2 * beta}, {2 * beta, 2 * alpha}, {2 * beta + 1, 2 * beta}};
    } else {
      throw IntegrityError("permutation step " + std::to_string(step) + " is neither j nor j+1");
    }
    for (Coord y0 : {2 * alpha, 2 * beta}) {
      for (Coord y : {y0, y0 + k + 1}) {
        for (Coord x : xs) x_pts.push_back(reduce(box, {x, y}));
        ac_anchors.push_back(reduce(box, {anchor_x, y}));
      }
    }
    for (const Point& w : v) bc_holes.push_back(reduce(box, w));
  }
  PeriodicPointSet x(box, x_pts);

  PeriodicPointSet a = u & x, b = u - x, c = x - u;
  TripleTiling t{a, b, c, make_doc(box, k, l, u), make_doc(box, k, l, x), make_doc(box, k, l, u ^ x)};
  for (Coord i = 0; i < K; ++i)
    for (Coord dx : {0, 1}) add(t.ab, 2 * i + dx, 2 * i + 1, 1);
  for (const Point& p : ac_anchors) add(t.ac, p[0], p[1], 0);
  // Each column of (U_a u U_b) xor X_i holds v and v + (0, k+1).
  for (const Point& h : bc_holes) add(t.bc, h[0], h[1] + 1, 1);
  return t;
}

PeriodicPointSet negate_set(const PeriodicPointSet& s) { return s.negated(); }

TilingDocument mirror_document(const TilingDocument& doc, const Tile1D& tile) {
  TilingDocument out{doc.box, tile, doc.holes ? std::optional(doc.holes->negated()) : std::nullopt, {}};
  const Coord span = doc.tile.span();
  for (const Placement& p : doc.placements) {
    Point a = p.anchor;
    for (Coord& v : a) v = -v;
    a[static_cast<std::size_t>(p.axis)] -= span - 1;
    out.placements.push_back({reduce(doc.box, a), p.axis, false});
  }
  return out;
}

}  // namespace

Construction construct_case3(Coord k, Coord l) {
  check_positive(k, l);
  if (k % 4 == 2 && l % 4 == 0) return finish(CaseTag::Mixed2Mod4, k, l, mixed_triple(k, l));
  if (k % 4 == 0 && l % 4 == 2) {
    // Build l(1)k and apply p -> -p, which turns l(1)k copies into k(1)l copies.
    TripleTiling m = mixed_triple(l, k);
    const Tile1D tile = PuncturedInterval{k, 1, l}.tile();
    TripleTiling t{negate_set(m.a), negate_set(m.b), negate_set(m.c), mirror_document(m.ab, tile),
                   mirror_document(m.ac, tile), mirror_document(m.bc, tile)};
    return finish(CaseTag::Mixed2Mod4, k, l, std::move(t));
  }
  throw WrongCaseError("Mixed2Mod4 needs {k, l} == {2 mod 4, 0 mod 4}, got " + pair_name(k, l));
}

Construction construct(Coord k, Coord l) {
  const std::optional<CaseTag> tag = applicable_case(k, l);
  if (!tag)
    throw UnsupportedCase("(k,l)=" + pair_name(k, l) + " lies in the open class 2 <= v2(k) < v2(l)");
  switch (*tag) {
    case CaseTag::OddSum: return construct_case1(k, l);
    case CaseTag::BothOdd: return construct_case2(k, l);
    case CaseTag::EqualV2: return construct_case_v2(k, l);
    case CaseTag::Mixed2Mod4: return construct_case3(k, l);
    case CaseTag::SymWarmup: break;
  }
  throw UnsupportedCase("no construction for " + pair_name(k, l));
}

}  // namespace ptile
