#include "gridhfk/verify.hpp"

#include <algorithm>
#include <array>

#include "gridhfk/chain.hpp"
#include "gridhfk/domains.hpp"

namespace gridhfk {
namespace {

// Position of a generator in lexicographic enumeration order.
std::size_t lex_index(const std::vector<Generator>& all, const Generator& g) {
  return static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), g) - all.begin());
}

using TermKey = std::array<std::uint64_t, 2>;

TermKey pack(const Generator& target, std::span<const std::uint8_t> exponents) {
  TermKey key{0, 0};
  for (int c = 0; c < target.size(); ++c) key[0] |= std::uint64_t(target[c]) << (4 * c);
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    key[1] |= std::uint64_t(exponents[i]) << (4 * i);
  }
  return key;
}

// Sorts and counts keys occurring an odd number of times.
std::uint64_t odd_runs(std::vector<TermKey>& keys) {
  std::sort(keys.begin(), keys.end());
  std::uint64_t odd = 0;
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    odd += (j - i) % 2;
    i = j;
  }
  return odd;
}

}  // namespace

std::uint64_t tilde_square_failures(const GridDiagram& grid) {
  const auto all = generators(grid);
  std::vector<std::vector<Generator>> boundary(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) boundary[i] = tilde_boundary(grid, all[i]);

  std::uint64_t failures = 0;
  std::vector<TermKey> keys;
  for (std::size_t i = 0; i < all.size(); ++i) {
    keys.clear();
    for (const auto& y : boundary[i]) {
      for (const auto& z : boundary[lex_index(all, y)]) keys.push_back(pack(z, {}));
    }
    failures += odd_runs(keys);
  }
  return failures;
}

std::uint64_t minus_square_failures(const GridDiagram& grid) {
  const auto all = generators(grid);
  std::vector<std::vector<MinusTerm>> boundary(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) boundary[i] = minus_boundary(grid, all[i]);

  const int n = grid.size();
  std::uint64_t failures = 0;
  std::vector<TermKey> keys;
  std::vector<std::uint8_t> exponents(n);
  for (std::size_t i = 0; i < all.size(); ++i) {
    keys.clear();
    for (const auto& first : boundary[i]) {
      for (const auto& second : boundary[lex_index(all, first.to)]) {
        for (int k = 0; k < n; ++k) exponents[k] = first.exponents[k] + second.exponents[k];
        keys.push_back(pack(second.to, exponents));
      }
    }
    failures += odd_runs(keys);
  }
  return failures;
}

std::uint64_t grading_failures(const GridDiagram& grid) {
  const Grader grade(grid);
  std::uint64_t failures = 0;
  for_each_generator(grid.size(), [&](const Generator& x) {
    const Bigrading gx = grade(x);
    for (const auto& term : minus_boundary(grid, x)) {
      const Bigrading gy = grade(term.to);
      int weight = 0;
      for (auto e : term.exponents) weight += e;
      if (gx.maslov - gy.maslov != 1 - 2 * weight) ++failures;
      if (gx.alexander - gy.alexander != HalfInt(-weight)) ++failures;
    }
    for (const auto& y : tilde_boundary(grid, x)) {
      const Bigrading gy = grade(y);
      if (gx.maslov - gy.maslov != 1 || gx.alexander != gy.alexander) ++failures;
    }
  });
  return failures;
}

std::pair<std::uint64_t, std::uint64_t> index_failures(const GridDiagram& grid) {
  const int n = grid.size();
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  for_each_generator(n, [&](const Generator& x) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (const auto& rect : rectangles(grid, x, x.swapped(i, j))) {
          ++checked;
          const bool index_one = maslov_index(GridDomain::from_rectangle(rect)) == Rational(1);
          if (index_one != rect.empty) ++failures;
        }
      }
    }
  });
  return {checked, failures};
}

VerifyReport verify_grid(const GridDiagram& grid) {
  VerifyReport report;
  report.grid_size = grid.size();
  for_each_generator(grid.size(), [&](const Generator& x) {
    ++report.generators;
    report.tilde_terms += tilde_boundary(grid, x).size();
    report.minus_terms += minus_boundary(grid, x).size();
  });
  report.tilde_square_failures = tilde_square_failures(grid);
  report.minus_square_failures = minus_square_failures(grid);
  report.grading_failures = grading_failures(grid);
  const auto [checked, failed] = index_failures(grid);
  report.rectangles = checked;
  report.index_failures = failed;
  return report;
}

}  // namespace gridhfk
