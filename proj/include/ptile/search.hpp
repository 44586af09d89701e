#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ptile/lattice.hpp"

namespace ptile {

enum class Heuristic {
  FirstCell,      // lexicographically first uncovered cell
  MinCandidates,  // cell with the fewest remaining placements
};

struct SearchConfig {
  bool allow_reflections = false;
  std::uint64_t node_limit = 10'000'000;
  Heuristic heuristic = Heuristic::MinCandidates;
};

enum class SearchStatus { Found, ExhaustedNone, NodeLimit };

std::string_view to_string(SearchStatus s);

struct SearchOutcome {
  SearchStatus status = SearchStatus::ExhaustedNone;
  /// Set iff status == Found; always passes verify.
  std::optional<TilingDocument> witness;
  std::uint64_t nodes = 0;
  /// Short explanation when the search was cut short before branching.
  std::string note;
};

/// Decides whether `tile` tiles the torus `box` minus `holes` with axis
/// parallel copies. Placements wrap around the torus; a placement that wraps
/// onto itself is discarded. Deterministic for identical inputs.
SearchOutcome search_torus(const Tile1D& tile, const Box& box, const SearchConfig& cfg = {},
                           const std::optional<PeriodicPointSet>& holes = std::nullopt);

/// Re-solves the document's box (minus its holes) from scratch; true iff the
/// search finds some tiling within `node_limit` nodes.
bool cross_check(const TilingDocument& doc, std::uint64_t node_limit = 10'000'000);

}  // namespace ptile
