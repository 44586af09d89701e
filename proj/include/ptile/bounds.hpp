#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "ptile/constructions.hpp"
#include "ptile/lattice.hpp"

namespace ptile {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class Verdict { TilesZ3, TilesLowerDim, Open };

std::string_view to_string(Verdict v);

struct TileStatus {
  Verdict verdict = Verdict::Open;
  /// Planar construction that lifts to Z^3; empty iff Open.
  std::optional<CaseTag> construction;
  /// Smallest known dimension (1 or 2 for TilesLowerDim, 3 for TilesZ3).
  std::optional<int> dimension;
};

/// Classification of k(1)l. Open iff 2 <= v2(k) < v2(l) after sorting.
TileStatus classify(Coord k, Coord l);

/// Densities of the three classes of (k, l) under P(v2 = i) = 2^-(i+1).
struct CoverageReport {
  Rational odd_sum;
  Rational equal_v2;
  Rational mixed;
  Rational total;
};

/// Exact natural density of the non-open pairs: 1/2 + 1/3 + 1/8 = 23/24.
CoverageReport coverage_fraction();

/// Fraction of (k, l) in [1, n]^2 that are not Open.
Rational empirical_coverage(Coord n);

/// Largest d with d < (k^2 + 2k - 1) / (3k - 1); T_k cannot tile Z^d for d up to it.
Coord tk_impossible_dims(Coord k);

/// 3^(d-1): D_n cannot tile Z^d for any n above it.
BigInt dn_impossible_n(Coord d);

struct DensityAudit {
  /// Fraction of covered cells occupied by placements along each axis.
  std::vector<Rational> axis_fraction;
  /// (3k-1)/(k^2+2k-1) when the tile is some T_k.
  std::optional<Rational> ceiling;
  /// Per axis: fraction <= ceiling. Reported, not enforced, on a torus.
  std::vector<bool> within_ceiling;
};

/// Throws IntegrityError when the document does not verify.
DensityAudit density_audit_tk(const TilingDocument& doc);

struct MinDimension {
  int dimension;
  /// A verified tiling of a torus of that dimension.
  TilingDocument witness;
};

/// min(k, 3) for k(1)k, backed by a search witness for k <= 2 and by
/// tile_Z3(k, k) for k >= 3. The lower bound for k >= 3 is not re-proved.
MinDimension min_dimension_symmetric(Coord k);

}  // namespace ptile
