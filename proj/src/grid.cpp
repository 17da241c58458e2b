#include "gridhfk/grid.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <optional>
#include <sstream>

#include "gridhfk/error.hpp"

namespace gridhfk {

namespace {

std::vector<int> inverse_of(const std::vector<int>& rows, const char* label) {
  const int n = static_cast<int>(rows.size());
  std::vector<int> inverse(n, -1);
  for (int c = 0; c < n; ++c) {
    const int r = rows[c];
    if (r < 0 || r >= n) {
      throw Error(ErrorKind::NotAPermutation, std::string(label) + " row " + std::to_string(r) +
                                                  " in column " + std::to_string(c) +
                                                  " is out of range 0.." + std::to_string(n - 1));
    }
    if (inverse[r] != -1) {
      throw Error(ErrorKind::NotAPermutation, std::string(label) + " row " + std::to_string(r) +
                                                  " appears in columns " +
                                                  std::to_string(inverse[r]) + " and " +
                                                  std::to_string(c));
    }
    inverse[r] = c;
  }
  return inverse;
}

// Open interval test for integers.
bool strictly_between(int v, int a, int b) { return std::min(a, b) < v && v < std::max(a, b); }

}  // namespace

GridDiagram::GridDiagram(std::vector<int> o_rows, std::vector<int> x_rows)
    : o_rows_(std::move(o_rows)), x_rows_(std::move(x_rows)) {
  if (o_rows_.size() != x_rows_.size()) {
    throw Error(ErrorKind::NotAPermutation, "O and X sequences have different lengths (" +
                                                std::to_string(o_rows_.size()) + " vs " +
                                                std::to_string(x_rows_.size()) + ")");
  }
  const int n = size();
  if (n < 2) {
    throw Error(ErrorKind::TooSmall, "grid size " + std::to_string(n) + " is below 2");
  }
  if (n > kMaxGridSize) {
    throw Error(ErrorKind::TooLarge, "grid size " + std::to_string(n) + " exceeds " +
                                         std::to_string(kMaxGridSize));
  }
  o_columns_ = inverse_of(o_rows_, "O");
  x_columns_ = inverse_of(x_rows_, "X");
  for (int c = 0; c < n; ++c) {
    if (o_rows_[c] == x_rows_[c]) {
      throw Error(ErrorKind::SharedCell, "O and X share cell (" + std::to_string(c) + ", " +
                                             std::to_string(o_rows_[c]) + ")");
    }
  }
}

GridDiagram new_grid(int n, std::vector<int> o_rows, std::vector<int> x_rows) {
  if (n < 2) {
    throw Error(ErrorKind::TooSmall, "grid size " + std::to_string(n) + " is below 2");
  }
  const auto expected = static_cast<std::size_t>(n);
  if (o_rows.size() != expected || x_rows.size() != expected) {
    throw Error(ErrorKind::NotAPermutation,
                "expected " + std::to_string(n) + " entries in both O and X, got " +
                    std::to_string(o_rows.size()) + " and " + std::to_string(x_rows.size()));
  }
  return GridDiagram(std::move(o_rows), std::move(x_rows));
}

int component_count(const GridDiagram& grid) {
  const int n = grid.size();
  std::vector<bool> seen(n, false);
  int cycles = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (int c = start; !seen[c]; c = grid.x_column(grid.o_row(c))) seen[c] = true;
  }
  return cycles;
}

LinkSummary link_summary(const GridDiagram& grid) {
  const int n = grid.size();
  LinkSummary summary;
  summary.component_of_column.assign(n, -1);
  for (int start = 0; start < n; ++start) {
    if (summary.component_of_column[start] != -1) continue;
    const int label = summary.component_count++;
    for (int c = start; summary.component_of_column[c] == -1; c = grid.x_column(grid.o_row(c))) {
      summary.component_of_column[c] = label;
    }
  }
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      if (strictly_between(r, grid.o_row(c), grid.x_row(c)) &&
          strictly_between(c, grid.o_column(r), grid.x_column(r))) {
        ++summary.crossing_count;
      }
    }
  }
  return summary;
}

std::string_view to_string(MoveKind kind) noexcept {
  switch (kind) {
    case MoveKind::cyclic_row: return "cyclic_row";
    case MoveKind::cyclic_column: return "cyclic_column";
    case MoveKind::commute_columns: return "commute_columns";
    case MoveKind::commute_rows: return "commute_rows";
    case MoveKind::stabilize: return "stabilize";
    case MoveKind::destabilize: return "destabilize";
  }
  return "unknown";
}

MoveKind parse_move_kind(std::string_view name) {
  for (auto kind : {MoveKind::cyclic_row, MoveKind::cyclic_column, MoveKind::commute_columns,
                    MoveKind::commute_rows, MoveKind::stabilize, MoveKind::destabilize}) {
    if (to_string(kind) == name) return kind;
  }
  throw Error(ErrorKind::IllegalMove, "unknown move kind '" + std::string(name) + "'");
}

namespace {

// Two vertical (or horizontal) segments may slide past each other when their
// spans are disjoint or strictly nested. Spans sharing an endpoint interleave.
bool spans_commute(int a0, int a1, int b0, int b1) {
  const int alo = std::min(a0, a1), ahi = std::max(a0, a1);
  const int blo = std::min(b0, b1), bhi = std::max(b0, b1);
  if (ahi < blo || bhi < alo) return true;
  if (alo < blo && bhi < ahi) return true;
  if (blo < alo && ahi < bhi) return true;
  return false;
}

std::optional<std::string> move_problem(const GridDiagram& grid, const GridMove& move) {
  const int n = grid.size();
  switch (move.kind) {
    case MoveKind::cyclic_row:
    case MoveKind::cyclic_column:
      return std::nullopt;
    case MoveKind::commute_columns: {
      const int c = move.index;
      if (c < 0 || c + 1 >= n) return "column index " + std::to_string(c) + " out of range";
      if (!spans_commute(grid.o_row(c), grid.x_row(c), grid.o_row(c + 1), grid.x_row(c + 1))) {
        return "columns " + std::to_string(c) + " and " + std::to_string(c + 1) + " interleave";
      }
      return std::nullopt;
    }
    case MoveKind::commute_rows: {
      const int r = move.index;
      if (r < 0 || r + 1 >= n) return "row index " + std::to_string(r) + " out of range";
      if (!spans_commute(grid.o_column(r), grid.x_column(r), grid.o_column(r + 1),
                         grid.x_column(r + 1))) {
        return "rows " + std::to_string(r) + " and " + std::to_string(r + 1) + " interleave";
      }
      return std::nullopt;
    }
    case MoveKind::stabilize: {
      if (move.index < 0 || move.index >= n) {
        return "column index " + std::to_string(move.index) + " out of range";
      }
      if (n + 1 > kMaxGridSize) return "stabilized grid would exceed the size limit";
      return std::nullopt;
    }
    case MoveKind::destabilize: {
      const int c = move.index;
      if (c < 0 || c + 1 >= n) return "column index " + std::to_string(c) + " out of range";
      if (n <= 2) return "cannot destabilize a grid of size 2";
      const int r = grid.x_row(c + 1);
      if (r + 1 >= n || grid.x_row(c) != r + 1 || grid.o_row(c + 1) != r + 1) {
        return "no destabilization pattern at column " + std::to_string(c);
      }
      return std::nullopt;
    }
  }
  return "unknown move";
}

}  // namespace

bool is_legal_move(const GridDiagram& grid, const GridMove& move) {
  return !move_problem(grid, move).has_value();
}

GridDiagram apply_move(const GridDiagram& grid, const GridMove& move) {
  if (auto problem = move_problem(grid, move)) {
    throw Error(ErrorKind::IllegalMove, std::string(to_string(move.kind)) + ": " + *problem);
  }
  const int n = grid.size();
  std::vector<int> o(grid.o_rows().begin(), grid.o_rows().end());
  std::vector<int> x(grid.x_rows().begin(), grid.x_rows().end());

  switch (move.kind) {
    case MoveKind::cyclic_row:
      for (int c = 0; c < n; ++c) {
        o[c] = (o[c] + 1) % n;
        x[c] = (x[c] + 1) % n;
      }
      break;
    case MoveKind::cyclic_column:
      std::rotate(o.rbegin(), o.rbegin() + 1, o.rend());
      std::rotate(x.rbegin(), x.rbegin() + 1, x.rend());
      break;
    case MoveKind::commute_columns:
      std::swap(o[move.index], o[move.index + 1]);
      std::swap(x[move.index], x[move.index + 1]);
      break;
    case MoveKind::commute_rows: {
      const int r = move.index;
      auto flip = [r](int& row) {
        if (row == r) row = r + 1;
        else if (row == r + 1) row = r;
      };
      for (int c = 0; c < n; ++c) {
        flip(o[c]);
        flip(x[c]);
      }
      break;
    }
    case MoveKind::stabilize: {
      // Insert column c+1 and row r+1 where r is the X row of column c:
      //   X at (c, r+1), O at (c+1, r+1), X at (c+1, r).
      const int c = move.index;
      const int r = x[c];
      auto lift = [r](int row) { return row > r ? row + 1 : row; };
      std::vector<int> new_o, new_x;
      new_o.reserve(n + 1);
      new_x.reserve(n + 1);
      for (int k = 0; k < n; ++k) {
        if (k == c) {
          new_o.push_back(lift(o[k]));
          new_x.push_back(r + 1);
          new_o.push_back(r + 1);
          new_x.push_back(r);
        } else {
          new_o.push_back(lift(o[k]));
          new_x.push_back(lift(x[k]));
        }
      }
      return GridDiagram(std::move(new_o), std::move(new_x));
    }
    case MoveKind::destabilize: {
      const int c = move.index;
      const int r = x[c + 1];
      auto drop = [r](int row) { return row > r + 1 ? row - 1 : row; };
      std::vector<int> new_o, new_x;
      new_o.reserve(n - 1);
      new_x.reserve(n - 1);
      for (int k = 0; k < n; ++k) {
        if (k == c + 1) continue;
        new_o.push_back(drop(o[k]));
        new_x.push_back(k == c ? r : drop(x[k]));
      }
      return GridDiagram(std::move(new_o), std::move(new_x));
    }
  }
  return GridDiagram(std::move(o), std::move(x));
}

std::vector<GridMove> legal_moves(const GridDiagram& grid) {
  const int n = grid.size();
  std::vector<GridMove> moves{{MoveKind::cyclic_row, 0}, {MoveKind::cyclic_column, 0}};
  for (auto kind : {MoveKind::commute_columns, MoveKind::commute_rows, MoveKind::stabilize,
                    MoveKind::destabilize}) {
    for (int i = 0; i < n; ++i) {
      GridMove move{kind, i};
      if (is_legal_move(grid, move)) moves.push_back(move);
    }
  }
  return moves;
}

GridDiagram random_grid(int n, std::mt19937_64& rng, bool knots_only) {
  if (n < 2) throw Error(ErrorKind::TooSmall, "grid size " + std::to_string(n) + " is below 2");
  if (n > kMaxGridSize) {
    throw Error(ErrorKind::TooLarge, "grid size " + std::to_string(n) + " exceeds " +
                                         std::to_string(kMaxGridSize));
  }
  std::vector<int> o(n), x(n);
  for (;;) {
    std::iota(o.begin(), o.end(), 0);
    std::iota(x.begin(), x.end(), 0);
    std::shuffle(o.begin(), o.end(), rng);
    std::shuffle(x.begin(), x.end(), rng);
    bool shared = false;
    for (int c = 0; c < n && !shared; ++c) shared = o[c] == x[c];
    if (shared) continue;
    GridDiagram grid(o, x);
    if (!knots_only || component_count(grid) == 1) return grid;
  }
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void syntax_error(int line, std::size_t column, const std::string& what) {
  throw Error(ErrorKind::SyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

struct Line {
  int number;
  std::string_view text;  // untrimmed
};

int parse_int(const Line& line, std::string_view token, std::size_t column) {
  token = trim(token);
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (token.empty() || ec != std::errc() || ptr != end) {
    syntax_error(line.number, column, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

// Parses "<key>=<v0>,<v1>,..."; column numbers are 1-based.
std::vector<int> parse_entry(const Line& line, char key) {
  const auto eq = line.text.find('=');
  if (eq == std::string_view::npos) syntax_error(line.number, 1, "missing '='");
  const auto name = trim(line.text.substr(0, eq));
  if (name.size() != 1 || name[0] != key) {
    syntax_error(line.number, 1,
                 std::string("expected key '") + key + "', got '" + std::string(name) + "'");
  }
  std::vector<int> values;
  std::size_t start = eq + 1;
  for (;;) {
    const auto comma = line.text.find(',', start);
    const auto token = line.text.substr(start, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - start);
    values.push_back(parse_int(line, token, start + 1));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return values;
}

std::vector<Line> content_lines(std::string_view text, int first_number = 1) {
  std::vector<Line> lines;
  int number = first_number;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                   : nl - pos);
    const auto t = trim(raw);
    if (!t.empty() && t[0] != '#') lines.push_back({number, raw});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
    ++number;
  }
  return lines;
}

GridDiagram grid_from_lines(const std::vector<Line>& lines, int last_line) {
  const char keys[] = {'n', 'O', 'X'};
  if (lines.size() < 3) {
    syntax_error(last_line, 1, std::string("missing '") + keys[lines.size()] + "=' line");
  }
  if (lines.size() > 3) syntax_error(lines[3].number, 1, "unexpected extra line");
  const auto n_values = parse_entry(lines[0], 'n');
  if (n_values.size() != 1) syntax_error(lines[0].number, 1, "n takes a single integer");
  const int n = n_values[0];
  auto o = parse_entry(lines[1], 'O');
  auto x = parse_entry(lines[2], 'X');
  if (o.size() != static_cast<std::size_t>(n) && n >= 2) {
    syntax_error(lines[1].number, 1, "expected " + std::to_string(n) + " entries, got " +
                                         std::to_string(o.size()));
  }
  if (x.size() != static_cast<std::size_t>(n) && n >= 2) {
    syntax_error(lines[2].number, 1, "expected " + std::to_string(n) + " entries, got " +
                                         std::to_string(x.size()));
  }
  return new_grid(n, std::move(o), std::move(x));
}

}  // namespace

GridDiagram parse_grid(std::string_view text) {
  const auto lines = content_lines(text);
  const int last = static_cast<int>(std::count(text.begin(), text.end(), '\n')) + 1;
  return grid_from_lines(lines, last);
}

std::vector<GridDiagram> parse_grid_batch(std::string_view text) {
  std::vector<GridDiagram> grids;
  std::vector<Line> chunk;
  int number = 1;
  std::size_t pos = 0;
  auto flush = [&](int at) {
    if (!chunk.empty()) grids.push_back(grid_from_lines(chunk, at));
    chunk.clear();
  };
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                   : nl - pos);
    const auto t = trim(raw);
    if (t.empty()) {
      flush(number);
    } else if (t[0] != '#') {
      chunk.push_back({number, raw});
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
    ++number;
  }
  flush(number);
  return grids;
}

std::string serialize_grid(const GridDiagram& grid) {
  std::ostringstream out;
  auto row = [&](char key, std::span<const int> values) {
    out << key << '=';
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? "," : "") << values[i];
    out << '\n';
  };
  out << "n=" << grid.size() << '\n';
  row('O', grid.o_rows());
  row('X', grid.x_rows());
  return out.str();
}

}  // namespace gridhfk
