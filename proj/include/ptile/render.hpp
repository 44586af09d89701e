#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "ptile/lattice.hpp"

namespace ptile {

enum class RenderFormat { Svg, Ascii };

/// Restricts a document to the hyperplane coordinate[axis] == value.
struct Slice {
  int axis = 2;
  Coord value = 0;
};

/// Parses "z=5", "y=0", "x=3" (or "2=5").
Slice parse_slice(std::string_view text);

struct RenderSpec {
  RenderFormat format = RenderFormat::Svg;
  /// Required for 3-D documents in ASCII; SVG defaults to z = 0.
  std::optional<Slice> slice;
  int cell_px = 12;
  /// A, B, C of a planar triple; holes are shaded by membership when set.
  std::optional<std::array<PeriodicPointSet, 3>> abc;
};

/// Deterministic rendering: identical inputs give byte-identical output.
/// Cells covered more than once are marked rather than rejected.
std::string render(const TilingDocument& doc, const RenderSpec& spec);

/// Fill colour of placement `index`, "#rrggbb".
std::string placement_color(std::size_t index);

}  // namespace ptile
