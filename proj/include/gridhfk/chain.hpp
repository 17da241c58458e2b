#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "gridhfk/gf2.hpp"
#include "gridhfk/grid.hpp"

namespace gridhfk {

// Integer or half-integer, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  constexpr explicit HalfInt(long long value) : twice_(2 * value) {}

  static constexpr HalfInt from_twice(long long twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr long long twice() const noexcept { return twice_; }
  constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }
  // Only meaningful when is_integer().
  constexpr long long integer() const noexcept { return twice_ / 2; }
  constexpr double to_double() const noexcept { return static_cast<double>(twice_) / 2.0; }

  constexpr HalfInt operator-() const { return from_twice(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }

  constexpr auto operator<=>(const HalfInt&) const = default;

  // "3", "-1", "1/2", "-3/2"
  std::string str() const;

 private:
  long long twice_ = 0;
};

struct Bigrading {
  int maslov = 0;
  HalfInt alexander;

  auto operator<=>(const Bigrading&) const = default;
};

// A generator of the grid complex: one lattice point (c, rows[c]) on each
// vertical circle, i.e. a permutation of 0..n-1.
class Generator {
 public:
  Generator() = default;
  explicit Generator(std::span<const int> rows);
  Generator(std::initializer_list<int> rows);

  int size() const noexcept { return size_; }
  int operator[](int column) const { return rows_[column]; }

  // Row -> column.
  std::vector<int> inverse() const;
  std::vector<int> to_vector() const;
  Generator swapped(int i, int j) const {
    Generator g = *this;
    std::swap(g.rows_[i], g.rows_[j]);
    return g;
  }
  // Number of columns where the two generators differ.
  int difference_count(const Generator& other) const;

  std::string str() const;

  // Lexicographic on the permutation word (for equal sizes).
  auto operator<=>(const Generator&) const = default;

 private:
  template <class F>
  friend void for_each_generator(int n, F&& visit);

  std::array<std::uint8_t, kMaxGridSize> rows_{};
  std::uint8_t size_ = 0;
};

// Visits all n! generators in lexicographic order.
template <class F>
void for_each_generator(int n, F&& visit) {
  Generator g;
  g.size_ = static_cast<std::uint8_t>(n);
  std::iota(g.rows_.begin(), g.rows_.begin() + n, std::uint8_t{0});
  do {
    visit(static_cast<const Generator&>(g));
  } while (std::next_permutation(g.rows_.begin(), g.rows_.begin() + n));
}

std::vector<Generator> generators(const GridDiagram& grid);

// M(x) = J(x,x) - 2J(x,O) + J(O,O) + 1, computed on the planar square with
// generator points at integer lattice points and markings at cell centers.
int maslov(const GridDiagram& grid, const Generator& x);

// A(x) = J(x - (X+O)/2, X - O) - (n - l)/2, with l the number of link
// components (collapsed to a single grading for links).
HalfInt alexander(const GridDiagram& grid, const Generator& x);

// Table-driven evaluation of the same formulas: the marking terms are
// tabulated per lattice point once per grid.
class Grader {
 public:
  explicit Grader(const GridDiagram& grid);

  int maslov(const Generator& x) const;
  HalfInt alexander(const Generator& x) const;
  Bigrading operator()(const Generator& x) const { return {maslov(x), alexander(x)}; }

 private:
  int n_;
  int maslov_constant_;
  long long alexander_constant_twice_;
  // 2J({(c, r)}, O) and 2J({(c, r)}, X) for a single lattice point.
  std::vector<int> point_vs_o_;
  std::vector<int> point_vs_x_;
};

// A rectangle on the grid torus from `from` to `to`. It spans columns
// left_column -> right_column going right and rows bottom_row -> top_row
// going up, both mod n. Lower-left and upper-right corners are points of
// `from`; lower-right and upper-left corners are points of `to`.
struct Rectangle {
  Generator from;
  Generator to;
  int left_column = 0;
  int right_column = 0;
  int bottom_row = 0;
  int top_row = 0;
  // o_count[i] / x_count[i]: whether the marking in column i is inside.
  std::vector<std::uint8_t> o_count;
  std::vector<std::uint8_t> x_count;
  bool empty = false;

  int size() const { return from.size(); }
  int width() const;
  int height() const;
  bool covers_cell(int column, int row) const;
  bool has_interior_point(int column, int row) const;
  int o_total() const;
  int x_total() const;
  bool marking_free() const { return o_total() == 0 && x_total() == 0; }
};

// All rectangles from x to y (zero or two of them).
std::vector<Rectangle> rectangles(const GridDiagram& grid, const Generator& x,
                                  const Generator& y);

// The empty ones among rectangles(grid, x, y).
std::vector<Rectangle> empty_rectangles(const GridDiagram& grid, const Generator& x,
                                        const Generator& y);

// One graded piece of the tilde complex: all generators with a fixed Alexander
// grading. The differential drops Maslov grading by one and preserves the
// Alexander grading, so these pieces are subcomplexes.
struct TildeStrand {
  HalfInt alexander;
  // Maslov grading -> generators in lexicographic order.
  std::map<int, std::vector<Generator>> basis;
  // Maslov grading m -> boundary matrix basis[m] -> basis[m-1], in triplet
  // form with row = index in basis[m-1] and column = index in basis[m].
  std::map<int, gf2::SparseMatrix> boundary;

  std::size_t generator_count() const;
};

// Sorted distinct Alexander gradings occurring among the generators.
std::vector<HalfInt> alexander_gradings(const GridDiagram& grid);

// Generator count per Alexander grading.
std::map<HalfInt, std::size_t> alexander_histogram(const GridDiagram& grid);

// Builds one strand by streaming through all n! generators and keeping those
// in the requested Alexander grading.
TildeStrand tilde_strand(const GridDiagram& grid, HalfInt alexander);

// All strands, ordered by Alexander grading. Strands are built concurrently
// on up to `jobs` threads; the result does not depend on `jobs`.
std::vector<TildeStrand> tilde_differential(const GridDiagram& grid, int jobs = 1);

// Targets of the tilde differential from a single generator (each appearing
// with coefficient 1), in lexicographic order.
std::vector<Generator> tilde_boundary(const GridDiagram& grid, const Generator& x);

// One term U_1^{a_1}...U_n^{a_n} y of the minus differential of `from`.
struct MinusTerm {
  Generator from;
  Generator to;
  std::vector<std::uint8_t> exponents;

  friend bool operator==(const MinusTerm&, const MinusTerm&) = default;
};

// Terms of the minus differential from a single generator: one per empty
// rectangle containing no X marking.
std::vector<MinusTerm> minus_boundary(const GridDiagram& grid, const Generator& x);

// minus_boundary over all generators, in lexicographic order of `from`.
std::vector<MinusTerm> minus_differential(const GridDiagram& grid);

}  // namespace gridhfk
