#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "ptile/lattice.hpp"

namespace ptile {

/// Which explicit planar construction produced a triple.
enum class CaseTag { OddSum, BothOdd, EqualV2, Mixed2Mod4, SymWarmup };

std::string_view to_string(CaseTag tag);
std::optional<CaseTag> case_from_string(std::string_view name);

/// 2-adic valuation of a positive integer.
int v2(Coord n);

/// Case used for k(1)l, or nullopt for the open class 2 <= v2(k) < v2(l).
/// Preference: OddSum, then EqualV2 (reported as BothOdd when both are odd),
/// then Mixed2Mod4.
std::optional<CaseTag> applicable_case(Coord k, Coord l);

struct Construction {
  CaseTag tag;
  Coord k;
  Coord l;
  TripleTiling triple;

  const Box& box() const { return triple.ab.box; }
};

// Each builder verifies its three tilings before returning and throws
// WrongCaseError when (k, l) belongs to another case.

/// k(1)k with k == 2 (mod 4): A, B split the diagonals x == y (mod k+1) by x mod 4.
Construction construct_sym_warmup(Coord k);
/// k + l odd.
Construction construct_case1(Coord k, Coord l);
/// k and l both odd.
Construction construct_case2(Coord k, Coord l);
/// v2(k) == v2(l) >= 1 (v2 == 0 is forwarded to construct_case2).
Construction construct_case_v2(Coord k, Coord l);
/// {k, l} == {2 mod 4, 0 mod 4}.
Construction construct_case3(Coord k, Coord l);
/// Dispatch on applicable_case; throws UnsupportedCase for the open class.
Construction construct(Coord k, Coord l);

/// Parameters of the equal-valuation construction.
struct SkewParams {
  Coord q;        // 2^v2(k)
  Coord modulus;  // 2 (k+l+2) q
  Coord slope;    // (k+l+2)(q-1) + 1
};
SkewParams skew_params(Coord k, Coord l);

/// The permutation a_1..a_K used for k == 2 (mod 4), 4 | l, as residues in
/// [0, K) (the representative K of the 1-based listing is stored as 0).
std::vector<Coord> mixed_permutation(Coord k, Coord l);

}  // namespace ptile
