#include "cli.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "ptile/bounds.hpp"
#include "ptile/constructions.hpp"
#include "ptile/errors.hpp"
#include "ptile/io.hpp"
#include "ptile/lifting.hpp"
#include "ptile/render.hpp"
#include "ptile/search.hpp"

namespace ptile {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kNegative = 2;

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << numerator(r) << '/' << denominator(r);
  return os.str();
}

Box parse_box(const std::string& text) {
  Box box;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, 'x')) {
    if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit))
      throw DomainError("box must look like LxL or LxLxL, got '" + text + "'");
    box.push_back(std::stoll(part));
  }
  if (box.empty() || box.size() > 3) throw DomainError("box needs 1 to 3 sides, got '" + text + "'");
  for (Coord side : box)
    if (side < 1) throw DomainError("box sides must be >= 1");
  return box;
}

Json classify_json(Coord k, Coord l) {
  const TileStatus s = classify(k, l);
  Json j;
  j["verdict"] = std::string(to_string(s.verdict));
  if (s.construction) j["case"] = std::string(to_string(*s.construction));
  if (s.dimension) j["dimension"] = *s.dimension;
  return j;
}

std::optional<std::array<PeriodicPointSet, 3>> triple_sets(const Json& manifest) {
  const Coord k = manifest.at("k").get<Coord>();
  const Coord l = manifest.at("l").get<Coord>();
  const auto tag = case_from_string(manifest.at("case").get<std::string>());
  if (!tag) throw StructuralError("manifest names an unknown case");
  Construction c = *tag == CaseTag::SymWarmup ? construct_sym_warmup(k) : construct(k, l);
  return std::array<PeriodicPointSet, 3>{c.triple.a, c.triple.b, c.triple.c};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tilings of Z^d by punctured intervals: construct, lift, verify, search, render.", "ptile"};
  app.require_subcommand(1);
  int status = kOk;

  // classify
  Coord ck = 0, cl = 0;
  auto* classify_cmd = app.add_subcommand("classify", "Case of k(1)l and smallest known dimension");
  classify_cmd->add_option("K", ck)->required();
  classify_cmd->add_option("L", cl)->required();
  classify_cmd->callback([&] { out << dump(classify_json(ck, cl)); });

  // construct
  Coord sk = 0, sl = 0, scale = 1;
  std::string out_dir;
  bool warmup = false;
  auto* construct_cmd = app.add_subcommand("construct", "Write the three planar tilings and a manifest");
  construct_cmd->add_option("K", sk)->required();
  construct_cmd->add_option("L", sl)->required();
  construct_cmd->add_option("--out", out_dir, "Output directory")->required();
  construct_cmd->add_option("--scale", scale, "Multiply the box by this factor");
  construct_cmd->add_flag("--warmup", warmup, "Use the symmetric k == 2 (mod 4) construction");
  construct_cmd->callback([&] {
    if (warmup && sk != sl) throw DomainError("--warmup needs K == L");
    Construction c = warmup ? construct_sym_warmup(sk) : construct(sk, sl);
    if (scale != 1) {
      for (TilingDocument* d : {&c.triple.ab, &c.triple.ac, &c.triple.bc}) *d = scale_document(*d, scale);
    }
    write_construction(out_dir, c);
    out << dump(manifest_json(c));
    err << "wrote " << to_string(c.tag) << " construction to " << out_dir << "\n";
  });

  // lift
  Coord lk = 0, ll = 0;
  std::string lift_out;
  auto* lift_cmd = app.add_subcommand("lift", "Write a verified tiling of a 3-torus by k(1)l");
  lift_cmd->add_option("K", lk)->required();
  lift_cmd->add_option("L", ll)->required();
  lift_cmd->add_option("--out", lift_out, "Output file")->required();
  lift_cmd->callback([&] {
    const TilingDocument doc = tile_Z3(lk, ll);
    write_document(lift_out, doc);
    Json j;
    j["status"] = "PASS";
    j["box"] = doc.box;
    j["placements"] = doc.placements.size();
    out << dump(j);
    err << "lifted " << doc.tile.format() << " to a " << doc.box[0] << "x" << doc.box[1] << "x" << doc.box[2]
        << " torus\n";
  });

  // verify
  std::string verify_file;
  auto* verify_cmd = app.add_subcommand("verify", "Check a tiling document");
  verify_cmd->add_option("FILE", verify_file)->required();
  verify_cmd->callback([&] {
    const VerifyReport r = verify(read_document(verify_file));
    Json j;
    j["status"] = r.pass ? "PASS" : "FAIL";
    if (!r.pass) {
      j["cell"] = *r.cell;
      j["coverage"] = r.coverage;
      j["hole"] = r.cell_is_hole;
    }
    out << dump(j);
    err << r.describe() << "\n";
    status = r.pass ? kOk : kNegative;
  });

  // search
  std::string tile_spec, box_spec, heuristic = "min-candidates";
  SearchConfig cfg;
  auto* search_cmd = app.add_subcommand("search", "Exact-cover search for a torus tiling");
  search_cmd->add_option("--tile", tile_spec, "Tile notation, e.g. 2(1)2")->required();
  search_cmd->add_option("--box", box_spec, "Torus sides, e.g. 7x7")->required();
  search_cmd->add_flag("--reflections", cfg.allow_reflections, "Allow mirrored copies");
  search_cmd->add_option("--node-limit", cfg.node_limit, "Give up after this many nodes");
  search_cmd->add_option("--heuristic", heuristic, "first-cell or min-candidates")
      ->check(CLI::IsMember({"first-cell", "min-candidates"}));
  search_cmd->callback([&] {
    cfg.heuristic = heuristic == "first-cell" ? Heuristic::FirstCell : Heuristic::MinCandidates;
    const SearchOutcome r = search_torus(parse_tile(tile_spec), parse_box(box_spec), cfg);
    out << dump(to_json(r));
    err << to_string(r.status) << " after " << r.nodes << " nodes"
        << (r.note.empty() ? "" : " (" + r.note + ")") << "\n";
    status = r.status == SearchStatus::Found ? kOk : kNegative;
  });

  // render
  std::string render_file, slice_text, svg_out, ascii_out, manifest_path;
  bool ascii_stdout = false;
  int cell_px = 12;
  auto* render_cmd = app.add_subcommand("render", "Draw a document as SVG or ASCII");
  render_cmd->add_option("FILE", render_file)->required();
  render_cmd->add_option("--slice", slice_text, "Level of a 3-D document, e.g. z=0");
  render_cmd->add_option("--svg", svg_out, "SVG output file");
  render_cmd->add_option("--ascii-out", ascii_out, "ASCII output file");
  render_cmd->add_flag("--ascii", ascii_stdout, "Print ASCII to stdout");
  render_cmd->add_option("--cell-px", cell_px, "SVG cell size in pixels");
  render_cmd->add_option("--manifest", manifest_path, "Construction manifest for A/B/C shading");
  render_cmd->callback([&] {
    if (svg_out.empty() && ascii_out.empty() && !ascii_stdout)
      throw DomainError("render needs --svg, --ascii-out or --ascii");
    const TilingDocument doc = read_document(render_file);
    RenderSpec spec;
    spec.cell_px = cell_px;
    if (!slice_text.empty()) spec.slice = parse_slice(slice_text);
    std::filesystem::path manifest = manifest_path;
    if (manifest.empty()) {
      const auto sibling = std::filesystem::path(render_file).parent_path() / "manifest.json";
      if (std::filesystem::exists(sibling)) manifest = sibling;
    }
    if (!manifest.empty() && doc.dim() == 2) spec.abc = triple_sets(read_json(manifest));
    if (!svg_out.empty()) {
      spec.format = RenderFormat::Svg;
      write_text(svg_out, render(doc, spec));
    }
    spec.format = RenderFormat::Ascii;
    if (!ascii_out.empty()) write_text(ascii_out, render(doc, spec));
    if (ascii_stdout) out << render(doc, spec);
  });

  // bounds
  Coord bk = 0, bd = 0;
  auto* bounds_cmd = app.add_subcommand("bounds", "Exact impossibility bounds");
  bounds_cmd->require_subcommand(1);
  auto* tk_cmd = bounds_cmd->add_subcommand("tk", "Largest d with T_k provably not tiling Z^d");
  tk_cmd->add_option("--k", bk)->required();
  tk_cmd->callback([&] {
    const Coord d = tk_impossible_dims(bk);
    const BigInt K = bk;
    const Rational bound(K * K + 2 * K - 1, 3 * K - 1);
    std::ostringstream os;
    os << "{\"k\":" << bk << ",\"bound\":\"" << rational_text(bound) << "\",\"impossible_up_to\":" << d
       << "}\n";
    out << os.str();
  });
  auto* dn_cmd = bounds_cmd->add_subcommand("dn", "Threshold above which D_n cannot tile Z^d");
  dn_cmd->add_option("--d", bd)->required();
  dn_cmd->callback([&] {
    std::ostringstream os;
    os << "{\"d\":" << bd << ",\"threshold\":" << dn_impossible_n(bd) << "}\n";
    out << os.str();
  });

  // coverage
  Coord cov_n = 0;
  auto* coverage_cmd = app.add_subcommand("coverage", "Density of punctured intervals known to tile Z^3");
  coverage_cmd->add_option("--N", cov_n, "Also count pairs in [1,N]^2");
  coverage_cmd->callback([&] {
    const CoverageReport r = coverage_fraction();
    Json j;
    j["exact"] = rational_text(r.total);
    j["odd_sum"] = rational_text(r.odd_sum);
    j["equal_v2"] = rational_text(r.equal_v2);
    j["mixed"] = rational_text(r.mixed);
    j["above_95_percent"] = r.total * 100 > 95;
    if (cov_n > 0) {
      j["N"] = cov_n;
      j["empirical"] = rational_text(empirical_coverage(cov_n));
    }
    out << dump(j);
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "tile parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const StructuralError& e) {
    err << "structural error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedCase& e) {
    err << "unsupported case: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return status;
}

}  // namespace ptile
