#pragma once

#include <cstdint>

#include "gridhfk/grid.hpp"

namespace gridhfk {

// Self-consistency checks of the complexes built from one grid. Each counter
// of failures should be zero.
struct VerifyReport {
  int grid_size = 0;
  std::uint64_t generators = 0;
  std::uint64_t tilde_terms = 0;
  std::uint64_t minus_terms = 0;
  std::uint64_t rectangles = 0;

  // Nonzero entries of the square of each differential.
  std::uint64_t tilde_square_failures = 0;
  std::uint64_t minus_square_failures = 0;
  // Differential terms whose bigrading change disagrees with the marking
  // count of the rectangle.
  std::uint64_t grading_failures = 0;
  // Rectangles where (index == 1) and (empty) disagree.
  std::uint64_t index_failures = 0;

  bool ok() const noexcept {
    return tilde_square_failures == 0 && minus_square_failures == 0 && grading_failures == 0 &&
           index_failures == 0;
  }

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

// d^2 = 0 on the tilde complex.
std::uint64_t tilde_square_failures(const GridDiagram& grid);

// d^2 = 0 on the minus complex, composing U-monomials symbolically.
std::uint64_t minus_square_failures(const GridDiagram& grid);

// For every minus differential term x -> U^a y: M(x) - M(y) = 1 - 2|a| and
// A(x) - A(y) = -|a|. Tilde terms additionally drop M by exactly 1 and keep A.
std::uint64_t grading_failures(const GridDiagram& grid);

// For every pair of generators and each rectangle between them: the Maslov
// index of the rectangle domain is 1 exactly when the rectangle is empty.
// Returns {rectangles checked, failures}.
std::pair<std::uint64_t, std::uint64_t> index_failures(const GridDiagram& grid);

VerifyReport verify_grid(const GridDiagram& grid);

}  // namespace gridhfk
