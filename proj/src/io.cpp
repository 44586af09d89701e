#include "ptile/io.hpp"

#include <fstream>
#include <algorithm>

#include "ptile/errors.hpp"

namespace ptile {

Json to_json(const PeriodicPointSet& s) {
  Json j;
  j["box"] = s.box();
  j["residues"] = s.residues();
  return j;
}

Json to_json(const TilingDocument& doc) {
  Json j;
  j["dim"] = doc.dim();
  j["box"] = doc.box;
  j["tile"] = doc.tile.format();
  j["holes"] = doc.holes ? to_json(*doc.holes) : Json(nullptr);
  Json placements = Json::array();
  for (const Placement& p : doc.placements) {
    Json pj;
    pj["anchor"] = p.anchor;
    pj["axis"] = p.axis;
    pj["reflected"] = p.reflected;
    placements.push_back(std::move(pj));
  }
  j["placements"] = std::move(placements);
  return j;
}

Json to_json(const SearchOutcome& outcome) {
  Json j;
  j["status"] = std::string(to_string(outcome.status));
  j["nodes"] = outcome.nodes;
  j["witness"] = outcome.witness ? to_json(*outcome.witness) : Json(nullptr);
  if (!outcome.note.empty()) j["note"] = outcome.note;
  return j;
}

Json manifest_json(const Construction& c) {
  Json j;
  j["k"] = c.k;
  j["l"] = c.l;
  j["case"] = std::string(to_string(c.tag));
  j["box"] = c.box();
  return j;
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw StructuralError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw StructuralError(std::string("missing field \"") + key + "\"");
  return *it;
}

Coord integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw StructuralError(std::string(what) + " must be an integer");
  return j.get<Coord>();
}

std::vector<Coord> integers(const Json& j, const char* what) {
  if (!j.is_array()) throw StructuralError(std::string(what) + " must be an array");
  std::vector<Coord> out;
  for (const Json& v : j) out.push_back(integer(v, what));
  return out;
}

}  // namespace

PeriodicPointSet point_set_from_json(const Json& j) {
  Box box = integers(field(j, "box"), "box");
  const Json& res = field(j, "residues");
  if (!res.is_array()) throw StructuralError("residues must be an array");
  std::vector<Point> pts;
  for (const Json& p : res) {
    Point q = integers(p, "residue");
    if (q.size() != box.size()) throw StructuralError("residue dimension does not match its box");
    pts.push_back(std::move(q));
  }
  return PeriodicPointSet(std::move(box), std::move(pts));
}

TilingDocument document_from_json(const Json& j) {
  const Coord dim = integer(field(j, "dim"), "dim");
  Box box = integers(field(j, "box"), "box");
  if (dim < 1 || static_cast<std::size_t>(dim) != box.size())
    throw StructuralError("dim does not match the box");
  for (Coord side : box)
    if (side <= 0) throw StructuralError("box sides must be positive");
  const Json& tile = field(j, "tile");
  if (!tile.is_string()) throw StructuralError("tile must be a string");

  TilingDocument doc{box, parse_tile(tile.get<std::string>()), std::nullopt, {}};
  const Json& holes = field(j, "holes");
  if (!holes.is_null()) {
    doc.holes = point_set_from_json(holes);
    if (doc.holes->dim() != box.size()) throw StructuralError("hole set dimension mismatch");
  }
  const Json& placements = field(j, "placements");
  if (!placements.is_array()) throw StructuralError("placements must be an array");
  for (const Json& p : placements) {
    Placement pl;
    pl.anchor = integers(field(p, "anchor"), "anchor");
    if (pl.anchor.size() != box.size()) throw StructuralError("anchor dimension mismatch");
    pl.axis = static_cast<int>(integer(field(p, "axis"), "axis"));
    const Json& refl = field(p, "reflected");
    if (!refl.is_boolean()) throw StructuralError("reflected must be a boolean");
    pl.reflected = refl.get<bool>();
    doc.placements.push_back(std::move(pl));
  }
  return doc;
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw StructuralError("invalid JSON in " + path.string() + ": " + e.what());
  }
}

TilingDocument read_document(const std::filesystem::path& path) {
  return document_from_json(read_json(path));
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StructuralError("cannot write " + path.string());
  out << text;
}

void write_document(const std::filesystem::path& path, const TilingDocument& doc) {
  write_text(path, dump(to_json(doc)));
}

void write_construction(const std::filesystem::path& dir, const Construction& c) {
  std::filesystem::create_directories(dir);
  write_document(dir / "AB.json", c.triple.ab);
  write_document(dir / "AC.json", c.triple.ac);
  write_document(dir / "BC.json", c.triple.bc);
  write_text(dir / "manifest.json", dump(manifest_json(c)));
}

TilingDocument scale_document(const TilingDocument& doc, Coord factor) {
  if (factor < 1) throw DomainError("scale factor must be >= 1");
  if (factor == 1) return doc;
  Box box = doc.box;
  for (Coord& side : box) side *= factor;
  Box reps(doc.box.size(), factor);
  TilingDocument out{box, doc.tile, doc.holes ? std::optional(doc.holes->on_box(box)) : std::nullopt, {}};
  const auto copies = static_cast<std::size_t>(volume(reps));
  for (std::size_t c = 0; c < copies; ++c) {
    const Point shift = unflatten(reps, c);
    for (const Placement& p : doc.placements) {
      Placement q = p;
      for (std::size_t i = 0; i < q.anchor.size(); ++i) q.anchor[i] += shift[i] * doc.box[i];
      out.placements.push_back(std::move(q));
    }
  }
  std::sort(out.placements.begin(), out.placements.end());
  return out;
}

}  // namespace ptile
