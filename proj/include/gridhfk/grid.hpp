#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gridhfk {

// Generators are stored inline, so grid size is capped; n! is out of reach
// long before this anyway.
inline constexpr int kMaxGridSize = 16;

// An n x n toroidal grid with one O and one X per row and column.
// Columns run 0..n-1 left to right, rows 0..n-1 bottom to top.
// o_rows[c] / x_rows[c] give the row of the O / X marking in column c.
class GridDiagram {
 public:
  // Throws Error{NotAPermutation, SharedCell, TooSmall, TooLarge}.
  GridDiagram(std::vector<int> o_rows, std::vector<int> x_rows);

  int size() const noexcept { return static_cast<int>(o_rows_.size()); }

  int o_row(int column) const { return o_rows_[column]; }
  int x_row(int column) const { return x_rows_[column]; }
  int o_column(int row) const { return o_columns_[row]; }
  int x_column(int row) const { return x_columns_[row]; }

  std::span<const int> o_rows() const noexcept { return o_rows_; }
  std::span<const int> x_rows() const noexcept { return x_rows_; }

  bool has_o(int column, int row) const { return o_rows_[column] == row; }
  bool has_x(int column, int row) const { return x_rows_[column] == row; }

  friend bool operator==(const GridDiagram& a, const GridDiagram& b) {
    return a.o_rows_ == b.o_rows_ && a.x_rows_ == b.x_rows_;
  }

 private:
  std::vector<int> o_rows_;
  std::vector<int> x_rows_;
  std::vector<int> o_columns_;
  std::vector<int> x_columns_;
};

// Validating constructor with an explicit size.
GridDiagram new_grid(int n, std::vector<int> o_rows, std::vector<int> x_rows);

struct LinkSummary {
  int component_count = 0;
  int crossing_count = 0;
  std::vector<int> component_of_column;

  friend bool operator==(const LinkSummary&, const LinkSummary&) = default;
};

// Vertical segments run O -> X, horizontal segments X -> O; verticals pass
// over horizontals.
LinkSummary link_summary(const GridDiagram& grid);

int component_count(const GridDiagram& grid);

enum class MoveKind {
  cyclic_row,       // every marking moves up one row (mod n)
  cyclic_column,    // every marking moves right one column (mod n)
  commute_columns,  // swap columns index, index+1
  commute_rows,     // swap rows index, index+1
  stabilize,        // split the X in column index into a 2x2 L-pattern
  destabilize,      // undo stabilize(index)
};

std::string_view to_string(MoveKind kind) noexcept;
MoveKind parse_move_kind(std::string_view name);

struct GridMove {
  MoveKind kind = MoveKind::cyclic_row;
  int index = 0;

  friend bool operator==(const GridMove&, const GridMove&) = default;
};

// Throws Error{IllegalMove} when the move does not apply to this grid.
GridDiagram apply_move(const GridDiagram& grid, const GridMove& move);

bool is_legal_move(const GridDiagram& grid, const GridMove& move);

// Every legal move of the given grid, in a fixed order.
std::vector<GridMove> legal_moves(const GridDiagram& grid);

// Uniformly random diagram of size n; with knots_only, resamples until the
// diagram has a single component.
GridDiagram random_grid(int n, std::mt19937_64& rng, bool knots_only = false);

// Text format:
//   n=<int>
//   O=<r0>,<r1>,...
//   X=<r0>,<r1>,...
// '#' starts a comment line; whitespace around tokens is ignored.
GridDiagram parse_grid(std::string_view text);
std::string serialize_grid(const GridDiagram& grid);

// Several grids separated by blank lines.
std::vector<GridDiagram> parse_grid_batch(std::string_view text);

}  // namespace gridhfk
