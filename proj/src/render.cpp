#include "ptile/render.hpp"

#include <cstdio>
#include <sstream>

#include "ptile/errors.hpp"

namespace ptile {

Slice parse_slice(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0 || eq + 1 >= text.size())
    throw DomainError("slice must look like z=VALUE");
  const std::string_view name = text.substr(0, eq);
  Slice s;
  if (name == "x" || name == "0") s.axis = 0;
  else if (name == "y" || name == "1") s.axis = 1;
  else if (name == "z" || name == "2") s.axis = 2;
  else throw DomainError("unknown slice axis '" + std::string(name) + "'");
  try {
    std::size_t used = 0;
    const std::string value(text.substr(eq + 1));
    s.value = std::stoll(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
  } catch (const std::exception&) {
    throw DomainError("slice value must be an integer");
  }
  return s;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::int64_t kFree = -1;
constexpr std::int64_t kConflict = -2;

// Planar view of a document: owner placement per cell, plus hole classes.
struct View {
  Coord width = 1;
  Coord height = 1;
  std::vector<std::int64_t> owner;  // placement index, kFree or kConflict
  std::vector<int> hole;            // 0 none, 1 A, 2 B, 3 C, 4 unlabelled hole

  std::size_t at(Coord x, Coord y) const { return static_cast<std::size_t>(y * width + x); }
};

View make_view(const TilingDocument& doc, const RenderSpec& spec) {
  const std::size_t d = doc.dim();
  if (d < 1 || d > 3) throw DomainError("can only render documents of dimension 1 to 3");
  std::optional<Slice> slice = spec.slice;
  if (d == 3 && !slice) {
    if (spec.format == RenderFormat::Ascii) throw DomainError("3-D documents need --slice for ASCII");
    slice = Slice{2, 0};
  }
  if (slice && d < 3) throw DomainError("slices apply to 3-D documents only");
  if (slice && (slice->axis < 0 || static_cast<std::size_t>(slice->axis) >= d ||
                slice->value < 0 || slice->value >= doc.box[static_cast<std::size_t>(slice->axis)]))
    throw DomainError("slice out of range");

  // Document axes shown horizontally and vertically.
  std::vector<std::size_t> shown;
  for (std::size_t i = 0; i < d; ++i)
    if (!slice || i != static_cast<std::size_t>(slice->axis)) shown.push_back(i);

  View v;
  v.width = doc.box[shown[0]];
  v.height = shown.size() > 1 ? doc.box[shown[1]] : 1;
  const auto n = static_cast<std::size_t>(v.width * v.height);
  v.owner.assign(n, kFree);
  v.hole.assign(n, 0);

  auto project = [&](const Point& p, Coord& x, Coord& y) {
    if (slice && p[static_cast<std::size_t>(slice->axis)] != slice->value) return false;
    x = p[shown[0]];
    y = shown.size() > 1 ? p[shown[1]] : 0;
    return true;
  };

  for (std::size_t i = 0; i < doc.placements.size(); ++i) {
    for (const Point& c : cells(doc.placements[i], doc.tile)) {
      Coord x = 0, y = 0;
      if (!project(reduce(doc.box, c), x, y)) continue;
      std::int64_t& o = v.owner[v.at(x, y)];
      o = o == kFree ? static_cast<std::int64_t>(i) : kConflict;
    }
  }
  if (doc.holes) {
    const CellBitmap bits = rasterize(*doc.holes, doc.box);
    for (std::size_t i = 0; i < bits.bits.size(); ++i) {
      if (!bits.bits[i]) continue;
      const Point p = unflatten(doc.box, i);
      Coord x = 0, y = 0;
      if (!project(p, x, y)) continue;
      int cls = 4;
      if (spec.abc) {
        for (int s = 0; s < 3; ++s)
          if ((*spec.abc)[static_cast<std::size_t>(s)].contains(p)) cls = s + 1;
      }
      v.hole[v.at(x, y)] = cls;
    }
  }
  return v;
}

std::string render_ascii(const View& v) {
  static constexpr std::string_view glyphs =
      "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";
  static constexpr std::string_view hole_glyphs = " @%=#";
  std::string out;
  for (Coord y = v.height; y-- > 0;) {
    for (Coord x = 0; x < v.width; ++x) {
      const std::size_t i = v.at(x, y);
      const std::int64_t o = v.owner[i];
      if (o == kConflict) out += '!';
      else if (o >= 0) out += glyphs[static_cast<std::size_t>(o) % glyphs.size()];
      else if (v.hole[i]) out += hole_glyphs[static_cast<std::size_t>(v.hole[i])];
      else out += '.';
    }
    out += '\n';
  }
  return out;
}

std::string render_svg(const View& v, int px) {
  if (px < 1) throw DomainError("cell size must be >= 1");
  static constexpr const char* hole_fill[] = {"", "#4d4d4d", "#999999", "#e6e6e6", "#000000"};
  std::ostringstream os;
  const Coord w = v.width * px, h = v.height * px;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\" fill=\"#ffffff\"/>\n";
  // SVG y grows downwards; row 0 is drawn at the bottom.
  auto top = [&](Coord y) { return (v.height - 1 - y) * px; };
  for (Coord y = 0; y < v.height; ++y) {
    for (Coord x = 0; x < v.width; ++x) {
      const std::size_t i = v.at(x, y);
      std::string fill;
      if (v.owner[i] == kConflict) fill = "#ff0000";
      else if (v.owner[i] >= 0) fill = placement_color(static_cast<std::size_t>(v.owner[i]));
      else if (v.hole[i]) fill = hole_fill[v.hole[i]];
      else continue;
      os << "<rect x=\"" << x * px << "\" y=\"" << top(y) << "\" width=\"" << px << "\" height=\"" << px
         << "\" fill=\"" << fill << "\"/>\n";
    }
  }
  // Outline tiles: a segment wherever neighbouring cells have different owners.
  os << "<g stroke=\"#000000\" stroke-width=\"1\">\n";
  for (Coord y = 0; y < v.height; ++y) {
    for (Coord x = 0; x < v.width; ++x) {
      const std::int64_t o = v.owner[v.at(x, y)];
      if (x + 1 < v.width && v.owner[v.at(x + 1, y)] != o) {
        const Coord sx = (x + 1) * px;
        os << "<line x1=\"" << sx << "\" y1=\"" << top(y) << "\" x2=\"" << sx << "\" y2=\"" << top(y) + px
           << "\"/>\n";
      }
      if (y + 1 < v.height && v.owner[v.at(x, y + 1)] != o) {
        const Coord sy = top(y);
        os << "<line x1=\"" << x * px << "\" y1=\"" << sy << "\" x2=\"" << (x + 1) * px << "\" y2=\"" << sy
           << "\"/>\n";
      }
    }
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace

std::string placement_color(std::size_t index) {
  const std::uint64_t hsh = splitmix64(index);
  char buf[8];
  // Keep channels in [96, 239] so colours stay light and distinct from hole shades.
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", static_cast<unsigned>(96 + (hsh & 0xff) % 144),
                static_cast<unsigned>(96 + ((hsh >> 8) & 0xff) % 144),
                static_cast<unsigned>(96 + ((hsh >> 16) & 0xff) % 144));
  return buf;
}

std::string render(const TilingDocument& doc, const RenderSpec& spec) {
  const View v = make_view(doc, spec);
  return spec.format == RenderFormat::Ascii ? render_ascii(v) : render_svg(v, spec.cell_px);
}

}  // namespace ptile
