#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "catalog.hpp"
#include "gridhfk/domains.hpp"
#include "gridhfk/error.hpp"
#include "gridhfk/verify.hpp"

using namespace gridhfk;

namespace {

// The rectangle from x to x.swapped(a, b) with lower-left corner in column
// `left`.
Rectangle rect_at(const GridDiagram& g, const Generator& x, int a, int b, int left) {
  for (const auto& r : rectangles(g, x, x.swapped(a, b))) {
    if (r.left_column == left) return r;
  }
  throw std::logic_error("no such rectangle");
}

}  // namespace

TEST(Domains, ZeroDomain) {
  const Generator x{0, 1, 2};
  const auto zero = GridDomain::zero(x);
  EXPECT_EQ(maslov_index(zero), Rational(0));
  EXPECT_EQ(euler_measure(zero), Rational(0));
  EXPECT_TRUE(zero.is_nonnegative());
}

TEST(Domains, SquaresHaveZeroEulerMeasure) { EXPECT_EQ(square_euler_measure(), Rational(0)); }

TEST(Domains, EmptyRectangleHasIndexOne) {
  const auto g = catalog::trefoil();
  const Generator x{0, 1, 2, 3, 4};
  const auto d = GridDomain::from_rectangle(rect_at(g, x, 0, 1, 0));
  EXPECT_EQ(vertex_multiplicity(d, 0, 0), Rational(1, 4));
  EXPECT_EQ(vertex_multiplicity(d, 1, 1), Rational(1, 4));
  EXPECT_EQ(vertex_multiplicity(d, 1, 0), Rational(1, 4));
  EXPECT_EQ(maslov_index(d), Rational(1));
}

TEST(Domains, InteriorPointsAddTwoEach) {
  // The rectangle from (0,0) to (2,2) contains the point (1,1) of x, which
  // is also a point of y; each copy contributes a full unit.
  const auto g = catalog::trefoil();
  const Generator x{0, 1, 2, 3, 4};
  const auto r = rect_at(g, x, 0, 2, 0);
  ASSERT_FALSE(r.empty);
  const auto d = GridDomain::from_rectangle(r);
  EXPECT_EQ(vertex_multiplicity(d, 1, 1), Rational(1));
  EXPECT_EQ(maslov_index(d), Rational(3));
}

TEST(Domains, VertexMultiplicityNeedsACorner) {
  const Generator x{0, 1, 2};
  const auto zero = GridDomain::zero(x);
  EXPECT_THROW(vertex_multiplicity(zero, 0, 1), Error);
  try {
    vertex_multiplicity(zero, 0, 1);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PointNotCorner);
  }
}

TEST(Domains, RejectsMismatchedBoundary) {
  const Generator x{0, 1, 2};
  std::vector<int> one_square(9, 0);
  one_square[0] = 1;
  try {
    GridDomain(x, x, one_square);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidDomain);
  }
  EXPECT_THROW(GridDomain(x, x, std::vector<int>(4, 0)), Error);
  // A whole column is a periodic domain from x to itself.
  std::vector<int> column(9, 0);
  column[0] = column[1] = column[2] = 1;
  EXPECT_NO_THROW(GridDomain(x, x, column));
}

TEST(Domains, IndexOneExactlyForEmptyRectanglesExhaustive) {
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> o(n), x(n);
    std::iota(o.begin(), o.end(), 0);
    do {
      std::iota(x.begin(), x.end(), 0);
      do {
        bool shared = false;
        for (int c = 0; c < n; ++c) shared = shared || o[c] == x[c];
        if (shared) continue;
        const auto [checked, failures] = index_failures(GridDiagram(o, x));
        // n! generators, C(n,2) transpositions, two rectangles each.
        EXPECT_EQ(checked, static_cast<std::uint64_t>(std::tgamma(n + 1)) * n * (n - 1));
        EXPECT_EQ(failures, 0u);
      } while (std::next_permutation(x.begin(), x.end()));
    } while (std::next_permutation(o.begin(), o.end()));
  }
}

TEST(Domains, IndexMatchesGradingDifference) {
  // mu(D) = M(x) - M(y) + 2 n_O(D) for every rectangle domain.
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 15; ++trial) {
    const auto g = random_grid(3 + trial % 4, rng);
    const int n = g.size();
    for_each_generator(n, [&](const Generator& x) {
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          for (const auto& r : rectangles(g, x, x.swapped(a, b))) {
            const auto mu = maslov_index(GridDomain::from_rectangle(r));
            EXPECT_EQ(mu, Rational(maslov(g, r.from) - maslov(g, r.to) + 2 * r.o_total()));
          }
        }
      }
    });
  }
}

TEST(Domains, IndexIsAdditiveUnderJuxtaposition) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_grid(4 + trial % 3, rng);
    const int n = g.size();
    std::uniform_int_distribution<int> col(0, n - 1);
    Generator x = generators(g)[trial % 24];
    for (int step = 0; step < 10; ++step) {
      int a = col(rng), b = col(rng);
      if (a == b) continue;
      const Generator y = x.swapped(a, b);
      const int c = col(rng), d = col(rng);
      if (c == d) continue;
      const Generator z = y.swapped(c, d);
      const auto first = GridDomain::from_rectangle(rectangles(g, x, y)[step % 2]);
      const auto second = GridDomain::from_rectangle(rectangles(g, y, z)[(step / 2) % 2]);
      const auto both = first + second;
      EXPECT_EQ(both.from(), x);
      EXPECT_EQ(both.to(), z);
      EXPECT_EQ(maslov_index(both), maslov_index(first) + maslov_index(second));
      if (z != x) EXPECT_THROW(second + first, Error);
      x = z;
    }
  }
}
