#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "gridhfk/chain.hpp"

namespace gridhfk {

// Ranks over the two-element field, keyed by (Maslov, Alexander). Only
// nonzero ranks are stored.
struct BigradedRanks {
  std::map<Bigrading, std::uint64_t> ranks;

  std::uint64_t total() const;
  std::uint64_t at(int maslov, HalfInt alexander) const;
  // Sum over all Maslov gradings at one Alexander grading.
  std::uint64_t total_at_alexander(HalfInt alexander) const;
  void add(Bigrading grading, std::uint64_t rank);

  friend bool operator==(const BigradedRanks&, const BigradedRanks&) = default;
};

// Laurent polynomial in t (Maslov) and q (Alexander); q may carry
// half-integer exponents for links.
class PoincarePolynomial {
 public:
  PoincarePolynomial() = default;

  static PoincarePolynomial one();
  // The V factor 1 + t^{-1} q^{-1}.
  static PoincarePolynomial v_factor();
  static PoincarePolynomial from_ranks(const BigradedRanks& ranks);

  // Throws std::domain_error on a negative coefficient.
  BigradedRanks to_ranks() const;

  long long coefficient(int maslov, HalfInt alexander) const;
  void add(Bigrading grading, long long coefficient);
  const std::map<Bigrading, long long>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  PoincarePolynomial operator*(const PoincarePolynomial& other) const;

  // e.g. "q + t^-1 + t^-2 q^-1"
  std::string str() const;

  friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;

 private:
  std::map<Bigrading, long long> terms_;
};

// Divides by (1 + t^{-1} q^{-1})^k. Throws Error{NotDivisible} when the
// division is not exact or the quotient has a negative coefficient.
PoincarePolynomial peel_V(const PoincarePolynomial& polynomial, int k);

// Homology of one strand: dim C - rank(d out) - rank(d in), per Maslov grading.
BigradedRanks strand_homology(const TildeStrand& strand);

// Homology of the tilde complex. Strands are built and reduced one at a time
// (concurrently on up to `jobs` threads), so at most `jobs` strands are held in
// memory at once.
BigradedRanks homology_ranks(const GridDiagram& grid, int jobs = 1);

}  // namespace gridhfk
