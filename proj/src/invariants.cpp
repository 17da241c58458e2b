#include "gridhfk/invariants.hpp"

#include <sstream>
#include <stdexcept>

#include "gridhfk/error.hpp"

namespace gridhfk {

LaurentPolynomial::LaurentPolynomial(std::map<int, long long> coefficients) {
  for (const auto& [e, c] : coefficients) {
    if (c != 0) coefficients_[e] = c;
  }
}

long long LaurentPolynomial::coefficient(int exponent) const {
  const auto it = coefficients_.find(exponent);
  return it == coefficients_.end() ? 0 : it->second;
}

int LaurentPolynomial::min_degree() const {
  return coefficients_.empty() ? 0 : coefficients_.begin()->first;
}

int LaurentPolynomial::max_degree() const {
  return coefficients_.empty() ? 0 : coefficients_.rbegin()->first;
}

long long LaurentPolynomial::value_at_one() const {
  long long sum = 0;
  for (const auto& [e, c] : coefficients_) sum += c;
  return sum;
}

bool LaurentPolynomial::is_palindromic() const {
  for (const auto& [e, c] : coefficients_) {
    if (coefficient(-e) != c) return false;
  }
  return true;
}

LaurentPolynomial LaurentPolynomial::symmetrized() const {
  if (coefficients_.empty()) return *this;
  const int span = min_degree() + max_degree();
  if (span % 2 != 0) {
    throw std::domain_error("polynomial " + str() + " has no palindromic normalization");
  }
  const int shift = -span / 2;
  long long sign = value_at_one() < 0 ? -1 : 1;
  if (value_at_one() == 0 && coefficients_.rbegin()->second < 0) sign = -1;
  std::map<int, long long> shifted;
  for (const auto& [e, c] : coefficients_) shifted[e + shift] = sign * c;
  return LaurentPolynomial(std::move(shifted));
}

std::string LaurentPolynomial::str() const {
  if (coefficients_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    const auto [e, c] = *it;
    const long long magnitude = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << magnitude;
      continue;
    }
    if (magnitude != 1) out << magnitude;
    out << (e == 1 ? std::string("q") : "q^" + std::to_string(e));
  }
  return out.str();
}

// ---------------------------------------------------------------------------

void require_knot(const GridDiagram& grid) {
  const int components = component_count(grid);
  if (components != 1) {
    throw Error(ErrorKind::NotAKnot,
                "grid describes a link with " + std::to_string(components) + " components");
  }
}

BigradedRanks hfk_hat(const BigradedRanks& tilde_ranks, int grid_size, int components) {
  return peel_V(PoincarePolynomial::from_ranks(tilde_ranks), grid_size - components).to_ranks();
}

BigradedRanks hfk_hat(const GridDiagram& grid, int jobs) {
  return hfk_hat(homology_ranks(grid, jobs), grid.size(), component_count(grid));
}

int genus(const BigradedRanks& hfk) {
  int top = 0;
  for (const auto& [g, r] : hfk.ranks) {
    if (r == 0 || g.alexander < HalfInt(0)) continue;
    if (!g.alexander.is_integer()) throw std::domain_error("half-integer Alexander grading");
    top = std::max(top, static_cast<int>(g.alexander.integer()));
  }
  return top;
}

int genus(const GridDiagram& grid, int jobs) {
  require_knot(grid);
  return genus(hfk_hat(grid, jobs));
}

bool is_unknot(const BigradedRanks& tilde_ranks, int grid_size) {
  return tilde_ranks.total() == (std::uint64_t{1} << (grid_size - 1));
}

bool is_unknot(const GridDiagram& grid, int jobs) {
  require_knot(grid);
  return is_unknot(homology_ranks(grid, jobs), grid.size());
}

bool is_fibered(const BigradedRanks& hfk) {
  return hfk.total_at_alexander(HalfInt(genus(hfk))) == 1;
}

bool is_fibered(const GridDiagram& grid, int jobs) {
  require_knot(grid);
  return is_fibered(hfk_hat(grid, jobs));
}

LaurentPolynomial alexander_polynomial(const BigradedRanks& hfk) {
  std::map<int, long long> sum;
  for (const auto& [g, r] : hfk.ranks) {
    if (!g.alexander.is_integer()) throw std::domain_error("half-integer Alexander grading");
    const long long sign = (g.maslov % 2 == 0) ? 1 : -1;
    sum[static_cast<int>(g.alexander.integer())] += sign * static_cast<long long>(r);
  }
  return LaurentPolynomial(std::move(sum)).symmetrized();
}

LaurentPolynomial alexander_polynomial(const GridDiagram& grid, int jobs) {
  require_knot(grid);
  return alexander_polynomial(hfk_hat(grid, jobs));
}

KnotReport knot_report(const GridDiagram& grid, int jobs) {
  require_knot(grid);
  const auto tilde = homology_ranks(grid, jobs);
  const auto hfk = hfk_hat(tilde, grid.size(), 1);
  KnotReport report;
  report.grid_size = grid.size();
  report.components = 1;
  report.total_rank = tilde.total();
  report.poincare = PoincarePolynomial::from_ranks(hfk);
  report.genus = genus(hfk);
  report.is_unknot = is_unknot(tilde, grid.size());
  report.is_fibered = is_fibered(hfk);
  report.alexander = alexander_polynomial(hfk);
  return report;
}

}  // namespace gridhfk
