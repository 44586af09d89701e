#pragma once

#include <filesystem>
#include "json.hpp"
#include <string>

#include "ptile/constructions.hpp"
#include "ptile/lattice.hpp"
#include "ptile/search.hpp"

namespace ptile {

using Json = nlohmann::ordered_json;

// Keys are written in a fixed order: dim, box, tile, holes, placements.
// Hole residues and placements keep their stored (sorted) order.

Json to_json(const PeriodicPointSet& s);
Json to_json(const TilingDocument& doc);
Json to_json(const SearchOutcome& outcome);
/// {"k", "l", "case", "box"}
Json manifest_json(const Construction& c);

/// Throws StructuralError describing the first problem found.
PeriodicPointSet point_set_from_json(const Json& j);
TilingDocument document_from_json(const Json& j);

/// Compact single-line serialization followed by a newline.
std::string dump(const Json& j);

TilingDocument read_document(const std::filesystem::path& path);
void write_document(const std::filesystem::path& path, const TilingDocument& doc);
Json read_json(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

/// Writes AB.json, AC.json, BC.json and manifest.json into `dir`.
void write_construction(const std::filesystem::path& dir, const Construction& c);

/// Replicates the document over a box `factor` times larger in every direction.
TilingDocument scale_document(const TilingDocument& doc, Coord factor);

}  // namespace ptile
