#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "ptile/constructions.hpp"
#include "ptile/errors.hpp"
#include "ptile/io.hpp"
#include "ptile/lifting.hpp"
#include "ptile/render.hpp"

using namespace ptile;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("ptile_unit_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("document JSON layout") {
  TilingDocument doc{{2}, parse_tile("1"), PeriodicPointSet({2}, {{1}}), {{{0}, 0, false}}};
  CHECK(dump(to_json(doc)) ==
        "{\"dim\":1,\"box\":[2],\"tile\":\"1\",\"holes\":{\"box\":[2],\"residues\":[[1]]},"
        "\"placements\":[{\"anchor\":[0],\"axis\":0,\"reflected\":false}]}\n");
}

TEST_CASE("documents round-trip byte for byte") {
  const fs::path dir = scratch("roundtrip");
  const Construction c = construct(3, 4);
  for (const TilingDocument* d : {&c.triple.ab, &c.triple.ac, &c.triple.bc}) {
    write_document(dir / "a.json", *d);
    const TilingDocument back = read_document(dir / "a.json");
    CHECK(back.placements == d->placements);
    CHECK(back.holes == d->holes);
    write_document(dir / "b.json", back);
    CHECK(slurp(dir / "a.json") == slurp(dir / "b.json"));
  }
  const TilingDocument lifted = tile_Z3(2, 3);
  write_document(dir / "c.json", lifted);
  write_document(dir / "d.json", read_document(dir / "c.json"));
  CHECK(slurp(dir / "c.json") == slurp(dir / "d.json"));
}

TEST_CASE("malformed documents") {
  auto parse = [](const char* text) { return document_from_json(Json::parse(text)); };
  CHECK_THROWS_AS(parse("{}"), StructuralError);
  CHECK_THROWS_AS(parse("[]"), StructuralError);
  CHECK_THROWS_AS(parse(R"({"dim":2,"box":[2],"tile":"1","holes":null,"placements":[]})"), StructuralError);
  CHECK_THROWS_AS(parse(R"({"dim":1,"box":[0],"tile":"1","holes":null,"placements":[]})"), StructuralError);
  CHECK_THROWS_AS(parse(R"({"dim":1,"box":[2],"tile":"1(","holes":null,"placements":[]})"), ParseError);
  CHECK_THROWS_AS(parse(R"({"dim":1,"box":[2],"tile":"1","holes":null,"placements":[{"anchor":[0,0],"axis":0,"reflected":false}]})"),
                  StructuralError);
  CHECK_THROWS_AS(parse(R"({"dim":1,"box":[2],"tile":"1","holes":null,"placements":[{"anchor":[0],"axis":"x","reflected":false}]})"),
                  StructuralError);
  CHECK_THROWS_AS(read_document("/nonexistent/ptile.json"), Error);
}

TEST_CASE("scaled documents still tile") {
  const Construction c = construct(2, 3);
  const TilingDocument s = scale_document(c.triple.ab, 3);
  CHECK(s.box == Box{18, 18});
  CHECK(s.placements.size() == 9 * c.triple.ab.placements.size());
  CHECK(verify(s).pass);
}

TEST_CASE("ascii render of the unit tile") {
  TilingDocument doc{{2, 2}, parse_tile("1"), std::nullopt, {}};
  for (Coord x = 0; x < 2; ++x)
    for (Coord y = 0; y < 2; ++y) doc.placements.push_back({{x, y}, 0, false});
  RenderSpec spec;
  spec.format = RenderFormat::Ascii;
  const std::string art = render(doc, spec);
  std::istringstream in(art);
  std::string line;
  std::set<char> glyphs;
  int rows = 0;
  while (std::getline(in, line)) {
    CHECK(line.size() == 2);
    glyphs.insert(line.begin(), line.end());
    ++rows;
  }
  CHECK(rows == 2);
  CHECK(glyphs.size() == 4);
}

TEST_CASE("svg render is deterministic and shades hole classes") {
  const Construction c = construct_sym_warmup(6);
  RenderSpec spec;
  spec.abc = std::array<PeriodicPointSet, 3>{c.triple.a, c.triple.b, c.triple.c};
  const std::string a = render(c.triple.bc, spec), b = render(c.triple.bc, spec);
  CHECK(a == b);
  CHECK(a.find("<svg") != std::string::npos);
  CHECK(a.find("#999999") != std::string::npos);
  CHECK(a.find("#e6e6e6") != std::string::npos);
  CHECK(placement_color(3) == placement_color(3));
  CHECK(placement_color(3) != placement_color(4));
}

TEST_CASE("render of 3-D documents") {
  const TilingDocument d = tile_Z3(1, 2);
  RenderSpec spec;
  spec.format = RenderFormat::Ascii;
  CHECK_THROWS_AS(render(d, spec), DomainError);
  spec.slice = parse_slice("z=0");
  CHECK_FALSE(render(d, spec).empty());
  spec.slice = Slice{2, d.box[2]};
  CHECK_THROWS_AS(render(d, spec), DomainError);
  CHECK_THROWS_AS(parse_slice("q=1"), DomainError);
  CHECK_THROWS_AS(parse_slice("z=x"), DomainError);
}

TEST_CASE("cli classify and bounds") {
  Run r = cli({"classify", "4", "8"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"verdict\":\"Open\"}\n");
  r = cli({"classify", "6", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Mixed2Mod4") != std::string::npos);
  r = cli({"bounds", "tk", "--k", "10"});
  CHECK(r.out == "{\"k\":10,\"bound\":\"119/29\",\"impossible_up_to\":4}\n");
  r = cli({"bounds", "dn", "--d", "4"});
  CHECK(r.out == "{\"d\":4,\"threshold\":27}\n");
  r = cli({"coverage", "--N", "1"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["exact"] == "23/24");
}

TEST_CASE("cli exit codes") {
  const fs::path dir = scratch("cli");
  Run r = cli({"lift", "3", "3", "--out", (dir / "t.json").string()});
  CHECK(r.code == 0);
  r = cli({"verify", (dir / "t.json").string()});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["status"] == "PASS");

  TilingDocument bad = read_document(dir / "t.json");
  bad.placements.pop_back();
  write_document(dir / "bad.json", bad);
  r = cli({"verify", (dir / "bad.json").string()});
  CHECK(r.code == 2);
  CHECK(Json::parse(r.out)["status"] == "FAIL");

  r = cli({"search", "--tile", "3(1)3", "--box", "7x7"});
  CHECK(r.code == 2);
  CHECK(Json::parse(r.out)["status"] == "ExhaustedNone");
  r = cli({"search", "--tile", "1(1)1", "--box", "4"});
  CHECK(r.code == 0);

  const Run usage = cli({"frobnicate"});
  const Run parse = cli({"search", "--tile", "3((1)3", "--box", "7"});
  const Run missing = cli({"verify", (dir / "missing.json").string()});
  const Run open = cli({"lift", "4", "8", "--out", (dir / "x.json").string()});
  CHECK(usage.code == 1);
  CHECK(parse.code == 1);
  CHECK(missing.code == 1);
  CHECK(open.code == 1);
  CHECK(usage.err != parse.err);
  CHECK(parse.err != missing.err);
  CHECK(open.err.find("open class") != std::string::npos);
}

TEST_CASE("cli construct and render") {
  const fs::path dir = scratch("construct");
  Run r = cli({"construct", "2", "3", "--out", dir.string()});
  CHECK(r.code == 0);
  for (const char* f : {"AB.json", "AC.json", "BC.json", "manifest.json"}) CHECK(fs::exists(dir / f));
  CHECK(cli({"verify", (dir / "AC.json").string()}).code == 0);
  r = cli({"render", (dir / "AB.json").string(), "--svg", (dir / "ab.svg").string(), "--ascii"});
  CHECK(r.code == 0);
  CHECK(slurp(dir / "ab.svg").find("</svg>") != std::string::npos);
  CHECK(r.out.size() == 6 * 7);
}
