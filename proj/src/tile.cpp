#include "ptile/tile.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "ptile/errors.hpp"

namespace ptile {

Tile1D::Tile1D(std::vector<Coord> runs, std::vector<Coord> gaps)
    : runs_(std::move(runs)), gaps_(std::move(gaps)) {
  if (runs_.empty()) throw DomainError("tile needs at least one run");
  if (gaps_.size() + 1 != runs_.size())
    throw DomainError("tile needs exactly one gap between consecutive runs");
  for (Coord r : runs_)
    if (r < 1) throw DomainError("run lengths must be >= 1");
  for (Coord g : gaps_)
    if (g < 1) throw DomainError("gap lengths must be >= 1");
}

Tile1D Tile1D::interval(Coord length) { return Tile1D({length}, {}); }

Tile1D Tile1D::from_offsets(std::vector<Coord> offsets) {
  if (offsets.empty()) throw DomainError("empty offset set");
  std::sort(offsets.begin(), offsets.end());
  if (std::adjacent_find(offsets.begin(), offsets.end()) != offsets.end())
    throw DomainError("duplicate offsets");
  std::vector<Coord> runs{1};
  std::vector<Coord> gaps;
  for (std::size_t i = 1; i < offsets.size(); ++i) {
    Coord step = offsets[i] - offsets[i - 1];
    if (step == 1) {
      ++runs.back();
    } else {
      gaps.push_back(step - 1);
      runs.push_back(1);
    }
  }
  return Tile1D(std::move(runs), std::move(gaps));
}

std::vector<Coord> Tile1D::offsets() const {
  std::vector<Coord> out;
  out.reserve(static_cast<std::size_t>(cardinality()));
  Coord pos = 0;
  for (std::size_t i = 0; i < runs_.size(); ++i) {
    for (Coord j = 0; j < runs_[i]; ++j) out.push_back(pos + j);
    pos += runs_[i];
    if (i < gaps_.size()) pos += gaps_[i];
  }
  return out;
}

Coord Tile1D::cardinality() const {
  return std::accumulate(runs_.begin(), runs_.end(), Coord{0});
}

Coord Tile1D::span() const {
  return cardinality() + std::accumulate(gaps_.begin(), gaps_.end(), Coord{0});
}

bool Tile1D::is_symmetric() const { return *this == reflected(); }

Tile1D Tile1D::reflected() const {
  return Tile1D(std::vector<Coord>(runs_.rbegin(), runs_.rend()),
                std::vector<Coord>(gaps_.rbegin(), gaps_.rend()));
}

std::string Tile1D::format() const {
  std::ostringstream os;
  os << runs_[0];
  for (std::size_t i = 0; i < gaps_.size(); ++i)
    os << '(' << gaps_[i] << ')' << runs_[i + 1];
  return os.str();
}

namespace {

// Reads a positive decimal integer at `pos`; advances `pos`.
Coord read_int(std::string_view spec, std::size_t& pos) {
  std::size_t start = pos;
  while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
  if (start == pos) {
    std::string tok = pos < spec.size() ? std::string(1, spec[pos]) : std::string("<end>");
    throw ParseError("expected integer at position " + std::to_string(start) + ", got '" +
                     tok + "' in \"" + std::string(spec) + "\"");
  }
  std::string_view tok = spec.substr(start, pos - start);
  Coord value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("integer out of range: '" + std::string(tok) + "'");
  if (value < 1) throw ParseError("integer must be >= 1: '" + std::string(tok) + "'");
  return value;
}

void expect(std::string_view spec, std::size_t& pos, char c) {
  if (pos >= spec.size() || spec[pos] != c) {
    std::string tok = pos < spec.size() ? std::string(1, spec[pos]) : std::string("<end>");
    throw ParseError("expected '" + std::string(1, c) + "' at position " + std::to_string(pos) +
                     ", got '" + tok + "' in \"" + std::string(spec) + "\"");
  }
  ++pos;
}

}  // namespace

Tile1D parse_tile(std::string_view spec) {
  std::size_t pos = 0;
  std::vector<Coord> runs{read_int(spec, pos)};
  std::vector<Coord> gaps;
  while (pos < spec.size()) {
    expect(spec, pos, '(');
    gaps.push_back(read_int(spec, pos));
    expect(spec, pos, ')');
    runs.push_back(read_int(spec, pos));
  }
  return Tile1D(std::move(runs), std::move(gaps));
}

Tile1D make_Tk(Coord k) {
  if (k < 2) throw DomainError("T_k needs k >= 2");
  std::vector<Coord> runs{k};
  for (Coord i = 0; i + 1 < k; ++i) runs.push_back(1);
  runs.push_back(k);
  return Tile1D(std::move(runs), std::vector<Coord>(static_cast<std::size_t>(k), k - 1));
}

Tile1D make_Dn(Coord n) {
  if (n < 1) throw DomainError("D_n needs n >= 1");
  return Tile1D(std::vector<Coord>(static_cast<std::size_t>(n), 2),
                std::vector<Coord>(static_cast<std::size_t>(n - 1), 1));
}

namespace {

Tile1D symmetric_pair(Coord run, Coord gap) {
  return gap == 0 ? Tile1D::interval(2 * run) : Tile1D({run, run}, {gap});
}

}  // namespace

Reduction glue_reduce(const PuncturedInterval& t) {
  if (t.k < 1 || t.l < 1 || t.m < 1) throw DomainError("k, m, l must be >= 1");
  const Coord shorter = std::min(t.k, t.l);
  if (t.m < shorter) throw NoReductionNeeded("no reduction needed: m < min(k, l)");

  const Tile1D base = t.tile();
  const bool mirror = !base.is_symmetric();
  Reduction out{t, base, {}, {}};

  // Two copies, one of them mirrored, abutting run to run.
  const Coord run = t.k + t.l;
  Tile1D glued = symmetric_pair(run, t.m - shorter);
  std::vector<TileCopy> first;
  if (t.k <= t.l)
    first = {{0, mirror}, {t.l, false}};
  else
    first = {{0, false}, {t.k, mirror}};
  out.chain.push_back({base, glued, first});
  out.copies = first;
  out.reduced = glued;

  // Stack floor(m'/k')+1 copies of the symmetric tile at multiples of k'.
  if (!glued.is_interval() && glued.gaps()[0] >= run) {
    const Coord gap = glued.gaps()[0];
    const Coord count = gap / run + 1;
    Tile1D stacked = symmetric_pair(count * run, gap % run);
    std::vector<TileCopy> step;
    std::vector<TileCopy> composed;
    for (Coord i = 0; i < count; ++i) {
      step.push_back({i * run, false});
      for (const TileCopy& c : first) composed.push_back({i * run + c.offset, c.reflected});
    }
    out.chain.push_back({glued, stacked, step});
    out.copies = std::move(composed);
    out.reduced = stacked;
  }
  return out;
}

}  // namespace ptile
