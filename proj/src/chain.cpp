#include "gridhfk/chain.hpp"

#include <sstream>
#include <stdexcept>

#include "gridhfk/detail/parallel.hpp"

namespace gridhfk {

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(integer());
  return std::to_string(twice_) + "/2";
}

// ---------------------------------------------------------------------------
// Generator

Generator::Generator(std::span<const int> rows) {
  if (rows.size() > static_cast<std::size_t>(kMaxGridSize)) {
    throw std::invalid_argument("generator longer than the maximum grid size");
  }
  size_ = static_cast<std::uint8_t>(rows.size());
  for (std::size_t c = 0; c < rows.size(); ++c) rows_[c] = static_cast<std::uint8_t>(rows[c]);
}

Generator::Generator(std::initializer_list<int> rows)
    : Generator(std::span<const int>(rows.begin(), rows.size())) {}

std::vector<int> Generator::inverse() const {
  std::vector<int> columns(size_);
  for (int c = 0; c < size_; ++c) columns[rows_[c]] = c;
  return columns;
}

std::vector<int> Generator::to_vector() const { return {rows_.begin(), rows_.begin() + size_}; }

int Generator::difference_count(const Generator& other) const {
  int count = 0;
  for (int c = 0; c < size_; ++c) count += rows_[c] != other.rows_[c];
  return count;
}

std::string Generator::str() const {
  std::ostringstream out;
  out << '[';
  for (int c = 0; c < size_; ++c) out << (c ? "," : "") << int(rows_[c]);
  out << ']';
  return out.str();
}

std::vector<Generator> generators(const GridDiagram& grid) {
  std::vector<Generator> all;
  for_each_generator(grid.size(), [&](const Generator& g) { all.push_back(g); });
  return all;
}

// ---------------------------------------------------------------------------
// Gradings

namespace {

// Planar points in doubled coordinates, so lattice points are even and cell
// centers odd.
struct PlanarPoint {
  int x2;
  int y2;
};

using PointSet = std::vector<PlanarPoint>;

PointSet lattice_points(const Generator& g) {
  PointSet points;
  for (int c = 0; c < g.size(); ++c) points.push_back({2 * c, 2 * g[c]});
  return points;
}

PointSet marking_points(std::span<const int> rows) {
  PointSet points;
  for (std::size_t c = 0; c < rows.size(); ++c) {
    points.push_back({2 * static_cast<int>(c) + 1, 2 * rows[c] + 1});
  }
  return points;
}

// I(A, B): pairs (a, b) with a strictly south-west of b.
long long southwest_pairs(const PointSet& a, const PointSet& b) {
  long long count = 0;
  for (const auto& p : a) {
    for (const auto& q : b) count += p.x2 < q.x2 && p.y2 < q.y2;
  }
  return count;
}

// 2 J(A, B) = I(A, B) + I(B, A).
long long twice_j(const PointSet& a, const PointSet& b) {
  return southwest_pairs(a, b) + southwest_pairs(b, a);
}

}  // namespace

int maslov(const GridDiagram& grid, const Generator& x) {
  const auto xs = lattice_points(x);
  const auto os = marking_points(grid.o_rows());
  const long long twice_m = twice_j(xs, xs) - 2 * twice_j(xs, os) + twice_j(os, os);
  return static_cast<int>(twice_m / 2 + 1);
}

HalfInt alexander(const GridDiagram& grid, const Generator& x) {
  const auto xs = lattice_points(x);
  const auto os = marking_points(grid.o_rows());
  const auto xm = marking_points(grid.x_rows());
  // 2A = 2J(x,X) - 2J(x,O) - J(X,X) + J(O,O) - (n - l); the J(X,O) terms cancel.
  const long long twice_a = twice_j(xs, xm) - twice_j(xs, os) - twice_j(xm, xm) / 2 +
                            twice_j(os, os) / 2 - (grid.size() - component_count(grid));
  return HalfInt::from_twice(twice_a);
}

Grader::Grader(const GridDiagram& grid)
    : n_(grid.size()), point_vs_o_(n_ * n_), point_vs_x_(n_ * n_) {
  auto point_term = [&](std::span<const int> marks, int c, int r) {
    int count = 0;
    for (int k = 0; k < n_; ++k) {
      count += (k >= c && marks[k] >= r);  // point south-west of marking
      count += (k < c && marks[k] < r);    // marking south-west of point
    }
    return count;
  };
  for (int c = 0; c < n_; ++c) {
    for (int r = 0; r < n_; ++r) {
      point_vs_o_[c * n_ + r] = point_term(grid.o_rows(), c, r);
      point_vs_x_[c * n_ + r] = point_term(grid.x_rows(), c, r);
    }
  }
  auto self_pairs = [&](std::span<const int> marks) {
    int count = 0;
    for (int a = 0; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) count += marks[a] < marks[b];
    }
    return count;
  };
  const int oo = self_pairs(grid.o_rows());
  const int xx = self_pairs(grid.x_rows());
  maslov_constant_ = oo + 1;
  alexander_constant_twice_ = oo - xx - (n_ - component_count(grid));
}

int Grader::maslov(const Generator& x) const {
  int value = maslov_constant_;
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) value += x[a] < x[b];
    value -= point_vs_o_[a * n_ + x[a]];
  }
  return value;
}

HalfInt Grader::alexander(const Generator& x) const {
  long long twice = alexander_constant_twice_;
  for (int c = 0; c < n_; ++c) {
    twice += point_vs_x_[c * n_ + x[c]] - point_vs_o_[c * n_ + x[c]];
  }
  return HalfInt::from_twice(twice);
}

// ---------------------------------------------------------------------------
// Rectangles

namespace {

int offset(int from, int to, int n) { return ((to - from) % n + n) % n; }

// Cell (c, r) is covered when its column lies in [left, right) and its row in
// [bottom, top), cyclically.
bool covers(int left, int width, int bottom, int height, int c, int r, int n) {
  return offset(left, c, n) < width && offset(bottom, r, n) < height;
}

// Lattice point strictly inside the rectangle.
bool interior(int left, int width, int bottom, int height, int c, int r, int n) {
  const int dc = offset(left, c, n);
  const int dr = offset(bottom, r, n);
  return dc > 0 && dc < width && dr > 0 && dr < height;
}

// Shape of the rectangle whose lower-left corner is x's point in column
// `left` and whose upper-right corner is x's point in column `right`.
Rectangle make_rectangle(const GridDiagram& grid, const Generator& x, const Generator& y,
                         int left, int right) {
  const int n = grid.size();
  Rectangle rect;
  rect.from = x;
  rect.to = y;
  rect.left_column = left;
  rect.right_column = right;
  rect.bottom_row = x[left];
  rect.top_row = x[right];
  const int width = offset(left, right, n);
  const int height = offset(rect.bottom_row, rect.top_row, n);
  rect.o_count.assign(n, 0);
  rect.x_count.assign(n, 0);
  for (int c = 0; c < n; ++c) {
    rect.o_count[c] = covers(left, width, rect.bottom_row, height, c, grid.o_row(c), n);
    rect.x_count[c] = covers(left, width, rect.bottom_row, height, c, grid.x_row(c), n);
  }
  rect.empty = true;
  for (int c = 0; c < n && rect.empty; ++c) {
    if (interior(left, width, rect.bottom_row, height, c, x[c], n)) rect.empty = false;
  }
  return rect;
}

}  // namespace

int Rectangle::width() const { return offset(left_column, right_column, size()); }
int Rectangle::height() const { return offset(bottom_row, top_row, size()); }

bool Rectangle::covers_cell(int column, int row) const {
  return covers(left_column, width(), bottom_row, height(), column, row, size());
}

bool Rectangle::has_interior_point(int column, int row) const {
  return interior(left_column, width(), bottom_row, height(), column, row, size());
}

int Rectangle::o_total() const { return std::accumulate(o_count.begin(), o_count.end(), 0); }
int Rectangle::x_total() const { return std::accumulate(x_count.begin(), x_count.end(), 0); }

std::vector<Rectangle> rectangles(const GridDiagram& grid, const Generator& x,
                                  const Generator& y) {
  const int n = grid.size();
  int first = -1, second = -1, differing = 0;
  for (int c = 0; c < n; ++c) {
    if (x[c] == y[c]) continue;
    if (++differing > 2) return {};
    (first < 0 ? first : second) = c;
  }
  if (differing != 2 || x[first] != y[second] || x[second] != y[first]) return {};
  return {make_rectangle(grid, x, y, first, second), make_rectangle(grid, x, y, second, first)};
}

std::vector<Rectangle> empty_rectangles(const GridDiagram& grid, const Generator& x,
                                        const Generator& y) {
  auto all = rectangles(grid, x, y);
  std::erase_if(all, [](const Rectangle& r) { return !r.empty; });
  return all;
}

// ---------------------------------------------------------------------------
// Tilde complex

namespace {

// Which rectangles of the torus avoid markings, by (left, width, bottom,
// height); emptiness with respect to generator points is checked per use.
class MarkingTable {
 public:
  explicit MarkingTable(const GridDiagram& grid) : n_(grid.size()), free_(n_ * n_ * n_ * n_) {
    for (int left = 0; left < n_; ++left) {
      for (int width = 1; width < n_; ++width) {
        for (int bottom = 0; bottom < n_; ++bottom) {
          for (int height = 1; height < n_; ++height) {
            bool clear = true;
            for (int dc = 0; dc < width && clear; ++dc) {
              const int c = (left + dc) % n_;
              clear = offset(bottom, grid.o_row(c), n_) >= height &&
                      offset(bottom, grid.x_row(c), n_) >= height;
            }
            free_[index(left, width, bottom, height)] = clear;
          }
        }
      }
    }
  }

  // Number of empty marking-free rectangles from x to x.swapped(i, j).
  int tilde_count(const Generator& x, int i, int j) const {
    return usable(x, i, j) + usable(x, j, i);
  }

 private:
  std::size_t index(int left, int width, int bottom, int height) const {
    return ((static_cast<std::size_t>(left) * n_ + width) * n_ + bottom) * n_ + height;
  }

  bool usable(const Generator& x, int left, int right) const {
    const int width = offset(left, right, n_);
    const int bottom = x[left];
    const int height = offset(bottom, x[right], n_);
    if (!free_[index(left, width, bottom, height)]) return false;
    for (int dc = 1; dc < width; ++dc) {
      const int dr = offset(bottom, x[(left + dc) % n_], n_);
      if (dr > 0 && dr < height) return false;
    }
    return true;
  }

  int n_;
  std::vector<std::uint8_t> free_;
};

}  // namespace

std::size_t TildeStrand::generator_count() const {
  std::size_t total = 0;
  for (const auto& [m, gens] : basis) total += gens.size();
  return total;
}

std::map<HalfInt, std::size_t> alexander_histogram(const GridDiagram& grid) {
  const Grader grader(grid);
  std::map<HalfInt, std::size_t> histogram;
  for_each_generator(grid.size(), [&](const Generator& g) { ++histogram[grader.alexander(g)]; });
  return histogram;
}

std::vector<HalfInt> alexander_gradings(const GridDiagram& grid) {
  std::vector<HalfInt> gradings;
  for (const auto& [s, count] : alexander_histogram(grid)) gradings.push_back(s);
  return gradings;
}

TildeStrand tilde_strand(const GridDiagram& grid, HalfInt alexander) {
  const int n = grid.size();
  const Grader grader(grid);
  const MarkingTable table(grid);

  TildeStrand strand;
  strand.alexander = alexander;
  for_each_generator(n, [&](const Generator& g) {
    if (grader.alexander(g) == alexander) strand.basis[grader.maslov(g)].push_back(g);
  });

  for (const auto& [m, sources] : strand.basis) {
    auto& matrix = strand.boundary[m];
    matrix.cols = sources.size();
    const auto below = strand.basis.find(m - 1);
    const std::vector<Generator> none;
    const auto& targets = below == strand.basis.end() ? none : below->second;
    matrix.rows = targets.size();
    for (std::size_t col = 0; col < sources.size(); ++col) {
      const Generator& x = sources[col];
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (table.tilde_count(x, i, j) % 2 == 0) continue;
          const Generator y = x.swapped(i, j);
          const auto it = std::lower_bound(targets.begin(), targets.end(), y);
          if (it == targets.end() || *it != y) {
            throw std::logic_error("tilde differential leaves its bigrading: " + x.str() +
                                   " -> " + y.str());
          }
          matrix.entries.emplace_back(static_cast<std::uint32_t>(it - targets.begin()),
                                      static_cast<std::uint32_t>(col));
        }
      }
    }
  }
  return strand;
}

std::vector<TildeStrand> tilde_differential(const GridDiagram& grid, int jobs) {
  const auto gradings = alexander_gradings(grid);
  std::vector<TildeStrand> strands(gradings.size());
  detail::parallel_for(gradings.size(), jobs,
                       [&](std::size_t k) { strands[k] = tilde_strand(grid, gradings[k]); });
  return strands;
}

std::vector<Generator> tilde_boundary(const GridDiagram& grid, const Generator& x) {
  const int n = grid.size();
  const MarkingTable table(grid);
  std::vector<Generator> targets;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (table.tilde_count(x, i, j) % 2 == 1) targets.push_back(x.swapped(i, j));
    }
  }
  std::sort(targets.begin(), targets.end());
  return targets;
}

// ---------------------------------------------------------------------------
// Minus complex

std::vector<MinusTerm> minus_boundary(const GridDiagram& grid, const Generator& x) {
  const int n = grid.size();
  std::vector<MinusTerm> terms;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Generator y = x.swapped(i, j);
      for (int left : {i, j}) {
        const Rectangle rect = make_rectangle(grid, x, y, left, left == i ? j : i);
        if (!rect.empty || rect.x_total() != 0) continue;
        terms.push_back({x, y, rect.o_count});
      }
    }
  }
  return terms;
}

std::vector<MinusTerm> minus_differential(const GridDiagram& grid) {
  std::vector<MinusTerm> terms;
  for_each_generator(grid.size(), [&](const Generator& x) {
    auto local = minus_boundary(grid, x);
    terms.insert(terms.end(), std::make_move_iterator(local.begin()),
                 std::make_move_iterator(local.end()));
  });
  return terms;
}

}  // namespace gridhfk
