#include "ptile/bounds.hpp"

#include <algorithm>

#include "ptile/errors.hpp"
#include "ptile/lifting.hpp"
#include "ptile/search.hpp"

namespace ptile {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::TilesZ3: return "TilesZ3";
    case Verdict::TilesLowerDim: return "TilesLowerDim";
    case Verdict::Open: return "Open";
  }
  return "?";
}

TileStatus classify(Coord k, Coord l) {
  if (k < 1 || l < 1) throw DomainError("classify needs k, l >= 1");
  TileStatus s;
  s.construction = applicable_case(k, l);
  if (!s.construction) return s;
  if (k == l && k <= 2) {
    s.verdict = Verdict::TilesLowerDim;
    s.dimension = static_cast<int>(k);
  } else {
    s.verdict = Verdict::TilesZ3;
    s.dimension = 3;
  }
  return s;
}

namespace {

Rational pow2_inv(int e) { return Rational(1, BigInt(1) << e); }

// P(v2 = i) and P(v2 >= i) for a uniformly random positive integer.
Rational p_eq(int i) { return pow2_inv(i + 1); }
Rational p_ge(int i) { return pow2_inv(i); }

}  // namespace

CoverageReport coverage_fraction() {
  CoverageReport r;
  // One of k, l odd and the other even.
  r.odd_sum = 2 * p_eq(0) * p_ge(1);
  // sum_i P(v2 = i)^2 = sum_i 4^-(i+1), a geometric series with ratio 1/4.
  const Rational first = p_eq(0) * p_eq(0);
  const Rational ratio = p_eq(1) * p_eq(1) / first;
  r.equal_v2 = first / (1 - ratio);
  // v2 = 1 on one side, v2 >= 2 on the other.
  r.mixed = 2 * p_eq(1) * p_ge(2);
  r.total = r.odd_sum + r.equal_v2 + r.mixed;
  return r;
}

Rational empirical_coverage(Coord n) {
  if (n < 1) throw DomainError("n must be >= 1");
  std::vector<int> val(static_cast<std::size_t>(n) + 1, 0);
  for (Coord i = 1; i <= n; ++i) val[static_cast<std::size_t>(i)] = v2(i);
  BigInt good = 0;
  for (Coord k = 1; k <= n; ++k)
    for (Coord l = 1; l <= n; ++l) {
      const int a = val[static_cast<std::size_t>(k)], b = val[static_cast<std::size_t>(l)];
      if (!(std::min(a, b) >= 2 && a != b)) ++good;
    }
  return Rational(good, BigInt(n) * n);
}

Coord tk_impossible_dims(Coord k) {
  if (k < 2) throw DomainError("T_k needs k >= 2");
  const BigInt K = k;
  const BigInt num = K * K + 2 * K - 1;
  const BigInt den = 3 * K - 1;
  const BigInt ceil = (num + den - 1) / den;
  return static_cast<Coord>(ceil - 1);
}

BigInt dn_impossible_n(Coord d) {
  if (d < 1) throw DomainError("dimension must be >= 1");
  return boost::multiprecision::pow(BigInt(3), static_cast<unsigned>(d - 1));
}

DensityAudit density_audit_tk(const TilingDocument& doc) {
  require_pass(doc, "density audit");
  const std::size_t holes = doc.holes ? rasterize(*doc.holes, doc.box).count() : 0;
  const BigInt covered = BigInt(volume(doc.box)) - holes;

  std::vector<BigInt> per_axis(doc.dim(), 0);
  for (const Placement& p : doc.placements) per_axis[static_cast<std::size_t>(p.axis)] += doc.tile.cardinality();

  DensityAudit audit;
  for (const BigInt& c : per_axis)
    audit.axis_fraction.push_back(covered == 0 ? Rational(0) : Rational(c, covered));

  const Coord first = doc.tile.runs().front();
  if (first >= 2 && doc.tile == make_Tk(first)) {
    const BigInt K = first;
    audit.ceiling = Rational(3 * K - 1, K * K + 2 * K - 1);
    for (const Rational& f : audit.axis_fraction) audit.within_ceiling.push_back(f <= *audit.ceiling);
  }
  return audit;
}

MinDimension min_dimension_symmetric(Coord k) {
  if (k < 1) throw DomainError("k must be >= 1");
  const Tile1D tile = PuncturedInterval{k, 1, k}.tile();
  if (k == 1) {
    SearchOutcome r = search_torus(tile, {4});
    if (r.status != SearchStatus::Found) throw IntegrityError("1(1)1 did not tile the 4-cycle");
    return {1, *r.witness};
  }
  if (k == 2) {
    for (Coord side = 1; side <= 10; ++side)
      for (Coord lx = 1; lx <= side; ++lx) {
        SearchOutcome r = search_torus(tile, {lx, side});
        if (r.status == SearchStatus::Found) return {2, *r.witness};
      }
    throw IntegrityError("2(1)2 tiled no 2-torus with sides <= 10");
  }
  return {3, tile_Z3(k, k)};
}

}  // namespace ptile
