#include "ptile/search.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "ptile/errors.hpp"

namespace ptile {

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "Found";
    case SearchStatus::ExhaustedNone: return "ExhaustedNone";
    case SearchStatus::NodeLimit: return "NodeLimit";
  }
  return "?";
}

namespace {

// Knuth's dancing links over a 0/1 matrix whose columns are the free cells
// (in lexicographic order) and whose rows are candidate placements.
class ExactCover {
 public:
  ExactCover(std::size_t columns, const std::vector<std::vector<std::uint32_t>>& rows)
      : size_(columns + 1, 0) {
    const std::size_t nodes = columns + 1 +
        std::accumulate(rows.begin(), rows.end(), std::size_t{0},
                        [](std::size_t acc, const auto& r) { return acc + r.size(); });
    left_.resize(nodes);
    right_.resize(nodes);
    up_.resize(nodes);
    down_.resize(nodes);
    col_.resize(nodes);
    row_.resize(nodes);
    // Node 0 is the root, nodes 1..columns are column headers.
    for (std::size_t i = 0; i <= columns; ++i) {
      left_[i] = i == 0 ? columns : i - 1;
      right_[i] = i == columns ? 0 : i + 1;
      up_[i] = down_[i] = col_[i] = i;
    }
    std::size_t next = columns + 1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const std::size_t first = next;
      for (std::uint32_t c : rows[r]) {
        const std::size_t h = c + 1;
        col_[next] = h;
        row_[next] = r;
        up_[next] = up_[h];
        down_[next] = h;
        down_[up_[h]] = next;
        up_[h] = next;
        ++size_[h];
        left_[next] = next == first ? next : next - 1;
        right_[next] = first;
        if (next != first) right_[next - 1] = next;
        left_[first] = next;
        ++next;
      }
    }
  }

  // Returns true when a cover was found; `solution` then holds its rows.
  bool solve(Heuristic h, std::uint64_t limit, std::uint64_t& nodes, bool& aborted,
             std::vector<std::size_t>& solution) {
    ++nodes;
    if (nodes > limit) {
      aborted = true;
      return false;
    }
    if (right_[0] == 0) return true;
    std::size_t c = right_[0];
    if (h == Heuristic::MinCandidates) {
      for (std::size_t j = right_[c]; j != 0 && size_[c] > 0; j = right_[j])
        if (size_[j] < size_[c]) c = j;
    }
    if (size_[c] == 0) return false;
    cover(c);
    for (std::size_t r = down_[c]; r != c; r = down_[r]) {
      solution.push_back(row_[r]);
      for (std::size_t j = right_[r]; j != r; j = right_[j]) cover(col_[j]);
      if (solve(h, limit, nodes, aborted, solution)) return true;
      for (std::size_t j = left_[r]; j != r; j = left_[j]) uncover(col_[j]);
      solution.pop_back();
      if (aborted) break;
    }
    uncover(c);
    return false;
  }

 private:
  void cover(std::size_t c) {
    right_[left_[c]] = right_[c];
    left_[right_[c]] = left_[c];
    for (std::size_t i = down_[c]; i != c; i = down_[i])
      for (std::size_t j = right_[i]; j != i; j = right_[j]) {
        up_[down_[j]] = up_[j];
        down_[up_[j]] = down_[j];
        --size_[col_[j]];
      }
  }

  void uncover(std::size_t c) {
    for (std::size_t i = up_[c]; i != c; i = up_[i])
      for (std::size_t j = left_[i]; j != i; j = left_[j]) {
        ++size_[col_[j]];
        up_[down_[j]] = j;
        down_[up_[j]] = j;
      }
    right_[left_[c]] = c;
    left_[right_[c]] = c;
  }

  std::vector<std::size_t> size_;
  std::vector<std::size_t> left_, right_, up_, down_, col_, row_;
};

}  // namespace

SearchOutcome search_torus(const Tile1D& tile, const Box& box, const SearchConfig& cfg,
                           const std::optional<PeriodicPointSet>& holes) {
  if (cfg.node_limit < 1) throw DomainError("node limit must be >= 1");
  if (box.empty()) throw StructuralError("box must have at least one dimension");
  for (Coord side : box)
    if (side < 1) throw StructuralError("box sides must be >= 1");

  const auto n = static_cast<std::size_t>(volume(box));
  std::vector<std::uint8_t> hole(n, 0);
  if (holes) hole = rasterize(*holes, box).bits;

  // Column index of every free cell, in lexicographic order.
  std::vector<std::int64_t> column(n, -1);
  std::size_t free_cells = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (!hole[i]) column[i] = static_cast<std::int64_t>(free_cells++);

  SearchOutcome out;
  auto found = [&](std::vector<Placement> placements) {
    TilingDocument doc{box, tile, holes, std::move(placements)};
    require_pass(doc, "search witness");
    out.status = SearchStatus::Found;
    out.witness = std::move(doc);
  };

  if (free_cells % static_cast<std::size_t>(tile.cardinality()) != 0) {
    out.status = SearchStatus::ExhaustedNone;
    out.note = "tile size " + std::to_string(tile.cardinality()) + " does not divide " +
               std::to_string(free_cells) + " free cells";
    return out;
  }
  if (free_cells == 0) {
    found({});
    return out;
  }

  std::vector<std::vector<Coord>> shapes{tile.offsets()};
  if (cfg.allow_reflections && !tile.is_symmetric()) shapes.push_back(tile.reflected().offsets());

  std::vector<std::vector<std::uint32_t>> rows;
  std::vector<Placement> meaning;
  std::set<std::vector<std::uint32_t>> seen;
  for (std::size_t i = 0; i < n; ++i) {
    if (hole[i]) continue;
    const Point anchor = unflatten(box, i);
    for (std::size_t axis = 0; axis < box.size(); ++axis) {
      for (std::size_t s = 0; s < shapes.size(); ++s) {
        std::vector<std::uint32_t> cols;
        bool ok = true;
        Point c = anchor;
        for (Coord o : shapes[s]) {
          c[axis] = (anchor[axis] + o) % box[axis];
          const std::int64_t col = column[flat_index(box, c)];
          if (col < 0) {
            ok = false;
            break;
          }
          cols.push_back(static_cast<std::uint32_t>(col));
        }
        if (!ok) continue;
        std::sort(cols.begin(), cols.end());
        if (std::adjacent_find(cols.begin(), cols.end()) != cols.end()) continue;
        if (!seen.insert(cols).second) continue;
        rows.push_back(std::move(cols));
        meaning.push_back({anchor, static_cast<int>(axis), s == 1});
      }
    }
  }

  ExactCover dlx(free_cells, rows);
  std::vector<std::size_t> solution;
  bool aborted = false;
  const bool ok = dlx.solve(cfg.heuristic, cfg.node_limit, out.nodes, aborted, solution);
  if (ok) {
    std::vector<Placement> placements;
    for (std::size_t r : solution) placements.push_back(meaning[r]);
    std::sort(placements.begin(), placements.end());
    found(std::move(placements));
  } else {
    out.status = aborted ? SearchStatus::NodeLimit : SearchStatus::ExhaustedNone;
  }
  return out;
}

bool cross_check(const TilingDocument& doc, std::uint64_t node_limit) {
  SearchConfig cfg;
  cfg.node_limit = node_limit;
  cfg.allow_reflections = std::any_of(doc.placements.begin(), doc.placements.end(),
                                      [](const Placement& p) { return p.reflected; });
  return search_torus(doc.tile, doc.box, cfg, doc.holes).status == SearchStatus::Found;
}

}  // namespace ptile
