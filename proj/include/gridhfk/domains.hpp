#pragma once

#include <vector>

#include <boost/rational.hpp>

#include "gridhfk/chain.hpp"

namespace gridhfk {

using Rational = boost::rational<long long>;

// A 2-chain on the grid torus: an integer multiplicity on each unit square,
// together with the generators it connects. Construction checks that the part
// of the boundary lying on the horizontal circles runs from `from` to `to`.
class GridDomain {
 public:
  // multiplicities[c * n + r] is the coefficient of the square in column c,
  // row r. Throws Error{InvalidDomain}.
  GridDomain(Generator from, Generator to, std::vector<int> multiplicities);

  static GridDomain zero(const Generator& x);
  static GridDomain from_rectangle(const Rectangle& rect);

  int size() const noexcept { return from_.size(); }
  const Generator& from() const noexcept { return from_; }
  const Generator& to() const noexcept { return to_; }
  int multiplicity(int column, int row) const;

  // Necessary for a holomorphic representative.
  bool is_nonnegative() const;

  // Juxtaposition x -> y -> z. Throws Error{InvalidDomain} unless
  // to() == next.from().
  GridDomain operator+(const GridDomain& next) const;

  friend bool operator==(const GridDomain&, const GridDomain&) = default;

 private:
  Generator from_;
  Generator to_;
  std::vector<int> multiplicities_;
};

// Euler measure of a single unit square of the grid torus: zero.
Rational square_euler_measure();

// Sum of multiplicity times square Euler measure.
Rational euler_measure(const GridDomain& domain);

// Average multiplicity of the four squares around lattice point (column, row),
// wrapping around the torus. Throws Error{PointNotCorner} unless the point
// belongs to from() or to().
Rational vertex_multiplicity(const GridDomain& domain, int column, int row);

// Sum of vertex multiplicities over the n points of from() and the n points of
// to(); a point shared by both is counted twice.
Rational total_vertex_multiplicity(const GridDomain& domain);

// mu = e + N.
Rational maslov_index(const GridDomain& domain);

}  // namespace gridhfk
