#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "gridhfk/homology.hpp"

namespace gridhfk {

// Laurent polynomial in one variable q with integer coefficients.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  explicit LaurentPolynomial(std::map<int, long long> coefficients);

  long long coefficient(int exponent) const;
  const std::map<int, long long>& coefficients() const noexcept { return coefficients_; }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  int min_degree() const;
  int max_degree() const;
  long long value_at_one() const;
  bool is_palindromic() const;

  // Multiplied by +-q^k so that it is palindromic with a positive value at
  // q = 1 (positive leading coefficient if that value is zero).
  LaurentPolynomial symmetrized() const;

  // e.g. "q - 1 + q^-1"
  std::string str() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  std::map<int, long long> coefficients_;
};

// HFK-hat (HFL-hat for links): the tilde homology with the V^{n-l} factor
// divided out.
BigradedRanks hfk_hat(const BigradedRanks& tilde_ranks, int grid_size, int components);
BigradedRanks hfk_hat(const GridDiagram& grid, int jobs = 1);

// Throws Error{NotAKnot} for links with more than one component.
void require_knot(const GridDiagram& grid);

// Largest Alexander grading s >= 0 carrying HFK-hat.
int genus(const BigradedRanks& hfk);
int genus(const GridDiagram& grid, int jobs = 1);

// Tilde homology has total rank 2^{n-1}.
bool is_unknot(const BigradedRanks& tilde_ranks, int grid_size);
bool is_unknot(const GridDiagram& grid, int jobs = 1);

// Total HFK-hat rank at the top Alexander grading is 1. This is the mod 2
// reading of the fiberedness criterion, which is stated over the integers.
bool is_fibered(const BigradedRanks& hfk);
bool is_fibered(const GridDiagram& grid, int jobs = 1);

// Sum of (-1)^m rank q^s over HFK-hat, symmetrized.
LaurentPolynomial alexander_polynomial(const BigradedRanks& hfk);
LaurentPolynomial alexander_polynomial(const GridDiagram& grid, int jobs = 1);

struct KnotReport {
  int grid_size = 0;
  int components = 0;
  std::uint64_t total_rank = 0;  // of the tilde homology
  PoincarePolynomial poincare;   // of HFK-hat
  int genus = 0;
  bool is_unknot = false;
  bool is_fibered = false;
  LaurentPolynomial alexander;

  friend bool operator==(const KnotReport&, const KnotReport&) = default;
};

// Everything above from a single homology computation. Knots only.
KnotReport knot_report(const GridDiagram& grid, int jobs = 1);

}  // namespace gridhfk
