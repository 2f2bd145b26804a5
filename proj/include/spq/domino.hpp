#pragma once

#include <array>
#include <compare>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "spq/error.hpp"
#include "spq/involution.hpp"

namespace spq {

/// A cell of the square grid, 1-based.
struct Square {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Square&, const Square&) = default;
};

/// Squares with odd row + col are fixed: every domino keeps its fixed square
/// when a cycle is moved through.
constexpr bool is_fixed(Square s) { return (s.row + s.col) % 2 == 1; }

/// Row lengths, weakly decreasing.
struct Shape {
  std::vector<int> parts;

  int size() const;
  int rows() const { return static_cast<int>(parts.size()); }
  int row_length(int row) const { return row >= 1 && row <= rows() ? parts[row - 1] : 0; }
  int column_height(int col) const;
  bool contains(Square s) const { return s.col >= 1 && s.col <= row_length(s.row); }
  /// Rows 2k-1 and 2k agree for every k.
  bool is_doubled() const;
  friend bool operator==(const Shape&, const Shape&) = default;
};

enum class Orientation { Horizontal, Vertical };

struct Domino {
  int label = 0;
  Square first;   // top or left cell
  Square second;  // bottom or right cell

  static Domino horizontal(int label, int row, int col) { return {label, {row, col}, {row, col + 1}}; }
  static Domino vertical(int label, int row, int col) { return {label, {row, col}, {row + 1, col}}; }

  Orientation orientation() const { return first.row == second.row ? Orientation::Horizontal : Orientation::Vertical; }
  bool contains(Square s) const { return s == first || s == second; }
  Square fixed_square() const { return is_fixed(first) ? first : second; }
  friend auto operator<=>(const Domino&, const Domino&) = default;
};

/// A standard domino tableau: for every bound m the dominoes labelled <= m
/// cover a Young diagram. Dominoes are kept sorted by label with a square
/// index for O(1) lookups.
class DominoTableau {
 public:
  DominoTableau() = default;

  /// Validates adjacency, distinct labels, disjointness and standardness.
  static DominoTableau from_dominoes(std::vector<Domino> dominoes);

  const std::vector<Domino>& dominoes() const { return dominoes_; }
  int size() const { return static_cast<int>(dominoes_.size()); }
  bool empty() const { return dominoes_.empty(); }
  std::optional<int> label_at(Square s) const;
  const Domino* find(int label) const;
  const Domino& at(int label) const;
  std::vector<int> labels() const;
  Shape shape() const;

  friend bool operator==(const DominoTableau& a, const DominoTableau& b) { return a.dominoes_ == b.dominoes_; }
  friend auto operator<=>(const DominoTableau& a, const DominoTableau& b) { return a.dominoes_ <=> b.dominoes_; }

 private:
  std::vector<Domino> dominoes_;
  std::vector<std::vector<int>> grid_;  // grid_[row-1][col-1], 0 means empty
};

enum class InsertPosition { HorizontalRow1, VerticalCol1 };

struct InsertResult {
  DominoTableau tableau;
  std::array<Square, 2> added;  // shape(tableau) minus shape(input)
};

/// Domino insertion with bumping: the new label is placed at the end of the
/// first row or first column of the sub-tableau of smaller labels, and larger
/// labels are displaced in increasing order.
InsertResult garfinkle_insert(const DominoTableau& t, int label, InsertPosition where);

enum class CycleKind { Closed, Open };

struct Cycle {
  std::vector<int> labels;  // sorted
  CycleKind kind = CycleKind::Closed;
  std::optional<Square> hole;
  std::optional<Square> corner;
  /// The cycle through the domino covering (1,1). Moving it would vacate
  /// (1,1), so it never takes part in moves or in the sign equivalence.
  bool contains_smallest = false;

  bool is_open() const { return kind == CycleKind::Open; }
  bool contains(int label) const;
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// The position a domino takes when its cycle is moved through.
Domino moved_position(const DominoTableau& t, const Domino& d);

/// Cycle partition for any standard tableau.
std::vector<Cycle> cycles_any_shape(const DominoTableau& t);
/// Cycle partition; the shape must be doubled.
std::vector<Cycle> cycles(const DominoTableau& t);
const Cycle& cycle_of(const std::vector<Cycle>& all, int label);

/// Replaces every domino of the cycle by its moved position.
DominoTableau move_through(const DominoTableau& t, const Cycle& c);

/// 2e1 is in τ iff the smallest domino is vertical; e_{i+1}-e_i iff the
/// (i+1)-domino lies below the i-domino.
std::set<SimpleRoot> tau_tableau(const DominoTableau& t);
/// Top row of `lower` strictly below the bottom row of `upper`.
bool lies_below(const Domino& lower, const Domino& upper);

/// Every standard domino tableau with labels 1..n.
void for_each_domino_tableau(int n, const std::function<void(const DominoTableau&)>& visit);
std::vector<DominoTableau> domino_tableaux(int n, bool doubled_only);

}  // namespace spq
