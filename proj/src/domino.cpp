#include "spq/domino.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <string>

namespace spq {

int Shape::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Shape::column_height(int col) const {
  int h = 0;
  while (h < rows() && parts[h] >= col) ++h;
  return h;
}

bool Shape::is_doubled() const {
  if (parts.size() % 2 != 0) return false;
  for (std::size_t k = 0; k < parts.size(); k += 2)
    if (parts[k] != parts[k + 1]) return false;
  return true;
}

namespace {

// Row lengths that grow one square at a time, checking the Young condition.
class GrowingShape {
 public:
  explicit GrowingShape(std::vector<int> parts = {}) : parts_(std::move(parts)) {}

  int row_length(int row) const { return row >= 1 && row <= static_cast<int>(parts_.size()) ? parts_[row - 1] : 0; }
  int column_height(int col) const { return Shape{parts_}.column_height(col); }
  bool contains(Square s) const { return s.row >= 1 && s.col >= 1 && s.col <= row_length(s.row); }

  // Whether the domino can be added so the result is still a Young diagram.
  bool addable(const Domino& d) const {
    auto ok_cell = [&](Square s, Square partner) {
      if (contains(s)) return false;
      bool left = s.col == 1 || contains({s.row, s.col - 1}) || partner == Square{s.row, s.col - 1};
      bool up = s.row == 1 || contains({s.row - 1, s.col}) || partner == Square{s.row - 1, s.col};
      return left && up;
    };
    return ok_cell(d.first, d.second) && ok_cell(d.second, d.first);
  }

  void add(Square s) {
    if (s.row > static_cast<int>(parts_.size())) parts_.resize(s.row, 0);
    ++parts_[s.row - 1];
  }
  void add(const Domino& d) {
    // Left/top cell first keeps row lengths consistent.
    add(d.first);
    add(d.second);
  }

  const std::vector<int>& parts() const { return parts_; }

 private:
  std::vector<int> parts_;
};

bool adjacent(Square a, Square b) {
  return (a.row == b.row && b.col == a.col + 1) || (a.col == b.col && b.row == a.row + 1);
}

std::vector<Square> shape_difference(const std::vector<int>& big, const std::vector<int>& small) {
  std::vector<Square> out;
  for (std::size_t r = 0; r < big.size(); ++r) {
    int from = r < small.size() ? small[r] : 0;
    for (int c = from + 1; c <= big[r]; ++c) out.push_back({static_cast<int>(r) + 1, c});
  }
  return out;
}

}  // namespace

DominoTableau DominoTableau::from_dominoes(std::vector<Domino> dominoes) {
  std::sort(dominoes.begin(), dominoes.end(), [](const Domino& a, const Domino& b) { return a.label < b.label; });
  GrowingShape shape;
  for (std::size_t k = 0; k < dominoes.size(); ++k) {
    auto& d = dominoes[k];
    if (d.second < d.first) std::swap(d.first, d.second);
    if (d.label <= 0) throw Error(ErrorKind::ShapeViolation, "domino labels must be positive");
    if (k > 0 && dominoes[k - 1].label == d.label)
      throw Error(ErrorKind::DuplicateLabel, "label " + std::to_string(d.label) + " appears twice");
    if (!adjacent(d.first, d.second))
      throw Error(ErrorKind::ShapeViolation, "domino " + std::to_string(d.label) + " has non-adjacent cells");
    if (d.first.row < 1 || d.first.col < 1)
      throw Error(ErrorKind::ShapeViolation, "domino " + std::to_string(d.label) + " lies outside the grid");
    if (!shape.addable(d))
      throw Error(ErrorKind::ShapeViolation,
                  "domino " + std::to_string(d.label) + " breaks standardness or overlaps another domino");
    shape.add(d);
  }
  DominoTableau t;
  t.dominoes_ = std::move(dominoes);
  for (int len : shape.parts()) t.grid_.emplace_back(len, 0);
  for (const auto& d : t.dominoes_) {
    t.grid_[d.first.row - 1][d.first.col - 1] = d.label;
    t.grid_[d.second.row - 1][d.second.col - 1] = d.label;
  }
  return t;
}

std::optional<int> DominoTableau::label_at(Square s) const {
  if (s.row < 1 || s.row > static_cast<int>(grid_.size())) return std::nullopt;
  const auto& row = grid_[s.row - 1];
  if (s.col < 1 || s.col > static_cast<int>(row.size())) return std::nullopt;
  return row[s.col - 1];
}

const Domino* DominoTableau::find(int label) const {
  auto it = std::lower_bound(dominoes_.begin(), dominoes_.end(), label,
                             [](const Domino& d, int l) { return d.label < l; });
  return it != dominoes_.end() && it->label == label ? &*it : nullptr;
}

const Domino& DominoTableau::at(int label) const {
  const auto* d = find(label);
  if (!d) throw Error(ErrorKind::UnknownCycle, "no domino labelled " + std::to_string(label));
  return *d;
}

std::vector<int> DominoTableau::labels() const {
  std::vector<int> out;
  out.reserve(dominoes_.size());
  for (const auto& d : dominoes_) out.push_back(d.label);
  return out;
}

Shape DominoTableau::shape() const {
  Shape s;
  for (const auto& row : grid_) s.parts.push_back(static_cast<int>(row.size()));
  return s;
}

InsertResult garfinkle_insert(const DominoTableau& t, int label, InsertPosition where) {
  if (t.find(label)) throw Error(ErrorKind::DuplicateLabel, "label " + std::to_string(label) + " already present");

  std::vector<Domino> placed;
  std::vector<const Domino*> larger;
  GrowingShape old_shape;
  for (const auto& d : t.dominoes()) {
    if (d.label < label) {
      placed.push_back(d);
      old_shape.add(d);
    } else {
      larger.push_back(&d);
    }
  }
  GrowingShape new_shape = old_shape;

  Domino inserted = where == InsertPosition::HorizontalRow1
                        ? Domino::horizontal(label, 1, new_shape.row_length(1) + 1)
                        : Domino::vertical(label, new_shape.column_height(1) + 1, 1);
  placed.push_back(inserted);
  new_shape.add(inserted);

  for (const Domino* old : larger) {
    auto delta = shape_difference(new_shape.parts(), old_shape.parts());
    if (delta.size() != 2) throw Error(ErrorKind::InternalInvariant, "bumping lost track of the displaced region");
    int overlap = static_cast<int>(old->contains(delta[0])) + static_cast<int>(old->contains(delta[1]));

    Domino moved = *old;
    if (overlap == 2) {
      if (old->orientation() == Orientation::Horizontal) {
        int r = old->first.row + 1;
        moved = Domino::horizontal(old->label, r, new_shape.row_length(r) + 1);
      } else {
        int c = old->first.col + 1;
        moved = Domino::vertical(old->label, new_shape.column_height(c) + 1, c);
      }
    } else if (overlap == 1) {
      // The three cells span a 2x2 block; the domino takes its free cell
      // and its own uncovered cell.
      std::vector<Square> cells = {old->first, old->second, delta[0], delta[1]};
      int r0 = INT_MAX, c0 = INT_MAX;
      for (auto s : cells) {
        r0 = std::min(r0, s.row);
        c0 = std::min(c0, s.col);
      }
      Square keep = old->contains(delta[0]) ? (old->first == delta[0] ? old->second : old->first)
                                            : (old->first == delta[1] ? old->second : old->first);
      Square free{};
      for (int dr = 0; dr < 2; ++dr)
        for (int dc = 0; dc < 2; ++dc) {
          Square s{r0 + dr, c0 + dc};
          if (std::find(cells.begin(), cells.end(), s) == cells.end()) free = s;
        }
      moved = Domino{old->label, std::min(keep, free), std::max(keep, free)};
    }
    placed.push_back(moved);
    old_shape.add(*old);
    new_shape.add(moved);
  }

  auto added = shape_difference(new_shape.parts(), old_shape.parts());
  if (added.size() != 2) throw Error(ErrorKind::InternalInvariant, "insertion did not grow the shape by one domino");
  InsertResult out{DominoTableau::from_dominoes(std::move(placed)), {added[0], added[1]}};
  return out;
}

bool Cycle::contains(int label) const { return std::binary_search(labels.begin(), labels.end(), label); }

Domino moved_position(const DominoTableau& t, const Domino& d) {
  // Off the top/left edge reads as 0, outside the shape reads as +infinity.
  auto value = [&](int r, int c) -> int {
    if (r < 1 || c < 1) return 0;
    auto l = t.label_at({r, c});
    return l ? *l : INT_MAX;
  };
  const int k = d.label;
  const Square p = d.fixed_square();
  const int i = p.row, j = p.col;
  const bool fixed_first = p == d.first;
  if (d.orientation() == Orientation::Vertical) {
    if (fixed_first) {
      return value(i - 1, j + 1) < k ? Domino::horizontal(k, i, j) : Domino::vertical(k, i - 1, j);
    }
    return value(i + 1, j - 1) > k ? Domino::horizontal(k, i, j - 1) : Domino::vertical(k, i, j);
  }
  if (fixed_first) {
    return value(i + 1, j - 1) < k ? Domino::vertical(k, i, j) : Domino::horizontal(k, i, j - 1);
  }
  return value(i - 1, j + 1) > k ? Domino::vertical(k, i - 1, j) : Domino::horizontal(k, i, j);
}

std::vector<Cycle> cycles_any_shape(const DominoTableau& t) {
  const auto& ds = t.dominoes();
  const int m = static_cast<int>(ds.size());
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int x) { return parent[x] == x ? x : parent[x] = root(parent[x]); };
  auto index_of = [&](int label) {
    return static_cast<int>(std::lower_bound(ds.begin(), ds.end(), label,
                                             [](const Domino& d, int l) { return d.label < l; }) -
                            ds.begin());
  };

  std::vector<Domino> moved(m);
  for (int a = 0; a < m; ++a) {
    moved[a] = moved_position(t, ds[a]);
    for (Square s : {moved[a].first, moved[a].second}) {
      if (auto l = t.label_at(s); l && *l != 0) parent[root(a)] = root(index_of(*l));
    }
  }

  std::vector<Cycle> out;
  std::vector<int> slot(m, -1);
  for (int a = 0; a < m; ++a) {
    int r = root(a);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].labels.push_back(ds[a].label);
  }
  auto smallest = t.label_at({1, 1});
  for (auto& c : out) {
    std::set<Square> before, after;
    for (int l : c.labels) {
      int a = index_of(l);
      before.insert(ds[a].first);
      before.insert(ds[a].second);
      after.insert(moved[a].first);
      after.insert(moved[a].second);
    }
    std::vector<Square> holes, corners;
    std::set_difference(before.begin(), before.end(), after.begin(), after.end(), std::back_inserter(holes));
    std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(corners));
    c.contains_smallest = smallest && c.contains(*smallest);
    if (holes.empty() && corners.empty()) {
      c.kind = CycleKind::Closed;
    } else if (holes.size() == 1 && corners.size() == 1) {
      c.kind = CycleKind::Open;
      c.hole = holes[0];
      c.corner = corners[0];
    } else {
      throw Error(ErrorKind::InternalInvariant, "cycle with " + std::to_string(holes.size()) + " holes and " +
                                                    std::to_string(corners.size()) + " corners");
    }
  }
  return out;
}

std::vector<Cycle> cycles(const DominoTableau& t) {
  if (!t.shape().is_doubled()) throw Error(ErrorKind::ShapeViolation, "cycles() expects a doubled shape");
  return cycles_any_shape(t);
}

const Cycle& cycle_of(const std::vector<Cycle>& all, int label) {
  for (const auto& c : all)
    if (c.contains(label)) return c;
  throw Error(ErrorKind::UnknownCycle, "no cycle contains label " + std::to_string(label));
}

DominoTableau move_through(const DominoTableau& t, const Cycle& c) {
  auto all = cycles_any_shape(t);
  if (std::find_if(all.begin(), all.end(), [&](const Cycle& x) { return x.labels == c.labels; }) == all.end())
    throw Error(ErrorKind::UnknownCycle, "cycle does not belong to this tableau");
  std::vector<Domino> ds;
  for (const auto& d : t.dominoes()) ds.push_back(c.contains(d.label) ? moved_position(t, d) : d);
  return DominoTableau::from_dominoes(std::move(ds));
}

bool lies_below(const Domino& lower, const Domino& upper) { return lower.first.row > upper.second.row; }

std::set<SimpleRoot> tau_tableau(const DominoTableau& t) {
  std::set<SimpleRoot> out;
  const auto& ds = t.dominoes();
  if (ds.empty()) return out;
  if (ds.front().orientation() == Orientation::Vertical) out.insert(SimpleRoot::long_root());
  for (std::size_t k = 0; k + 1 < ds.size(); ++k)
    if (lies_below(ds[k + 1], ds[k])) out.insert(SimpleRoot::short_root(static_cast<int>(k) + 1));
  return out;
}

void for_each_domino_tableau(int n, const std::function<void(const DominoTableau&)>& visit) {
  std::vector<Domino> current;
  GrowingShape shape;
  std::function<void(int)> rec = [&](int label) {
    if (label > n) {
      visit(DominoTableau::from_dominoes(current));
      return;
    }
    const int rows = static_cast<int>(shape.parts().size());
    for (int r = 1; r <= rows + 1; ++r) {
      for (auto d : {Domino::horizontal(label, r, shape.row_length(r) + 1),
                     Domino::vertical(label, r, shape.row_length(r) + 1)}) {
        if (!shape.addable(d)) continue;
        GrowingShape saved = shape;
        shape.add(d);
        current.push_back(d);
        rec(label + 1);
        current.pop_back();
        shape = saved;
      }
    }
  };
  rec(1);
}

std::vector<DominoTableau> domino_tableaux(int n, bool doubled_only) {
  std::vector<DominoTableau> out;
  for_each_domino_tableau(n, [&](const DominoTableau& t) {
    if (!doubled_only || t.shape().is_doubled()) out.push_back(t);
  });
  return out;
}

}  // namespace spq
