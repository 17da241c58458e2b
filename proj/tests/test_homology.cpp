#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "catalog.hpp"
#include "gridhfk/error.hpp"
#include "gridhfk/homology.hpp"
#include "oracles.hpp"

using namespace gridhfk;

namespace {

std::map<std::pair<int, int>, std::uint64_t> keyed(const BigradedRanks& ranks) {
  std::map<std::pair<int, int>, std::uint64_t> out;
  for (const auto& [g, r] : ranks.ranks) out[{g.maslov, static_cast<int>(g.alexander.twice())}] = r;
  return out;
}

PoincarePolynomial power_of_v(int k) {
  auto p = PoincarePolynomial::one();
  for (int i = 0; i < k; ++i) p = p * PoincarePolynomial::v_factor();
  return p;
}

}  // namespace

TEST(PeelV, Examples) {
  EXPECT_EQ(peel_V(power_of_v(2), 2), PoincarePolynomial::one());
  EXPECT_EQ(peel_V(PoincarePolynomial::one(), 0), PoincarePolynomial::one());
  const auto p = PoincarePolynomial::from_ranks(homology_ranks(catalog::figure_eight()));
  EXPECT_EQ(peel_V(p, 0), p);
  EXPECT_EQ(power_of_v(1).str(), "1 + t^-1 q^-1");
}

TEST(PeelV, RaisesNotDivisible) {
  auto p = PoincarePolynomial::one();
  try {
    peel_V(p, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDivisible);
    EXPECT_TRUE(is_internal_alarm(e.kind()));
  }
  // (1 + V)^2 with one term removed.
  auto q = power_of_v(2);
  q.add({-1, HalfInt(-1)}, -1);
  EXPECT_THROW(peel_V(q, 2), Error);
}

TEST(PeelV, InvertsMultiplication) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    PoincarePolynomial p;
    for (int k = 0; k < 4; ++k) {
      p.add({static_cast<int>(rng() % 7) - 3, HalfInt(static_cast<int>(rng() % 7) - 3)},
            1 + static_cast<long long>(rng() % 3));
    }
    const int k = static_cast<int>(rng() % 4);
    EXPECT_EQ(peel_V(p * power_of_v(k), k), p);
  }
}

TEST(Poincare, RanksRoundTripAndText) {
  BigradedRanks r;
  r.add({0, HalfInt(1)}, 1);
  r.add({-1, HalfInt(0)}, 2);
  r.add({-2, HalfInt::from_twice(-1)}, 1);
  const auto p = PoincarePolynomial::from_ranks(r);
  EXPECT_EQ(p.to_ranks(), r);
  EXPECT_EQ(p.coefficient(-1, HalfInt(0)), 2);
  EXPECT_EQ(p.str(), "q + 2t^-1 + t^-2 q^-1/2");
  PoincarePolynomial negative;
  negative.add({0, HalfInt(0)}, -1);
  EXPECT_THROW(negative.to_ranks(), std::domain_error);
}

TEST(Homology, UnknotTwoByTwo) {
  const auto h = homology_ranks(catalog::unknot2());
  EXPECT_EQ(h.total(), 2u);
  EXPECT_EQ(h.at(0, HalfInt(0)), 1u);
  EXPECT_EQ(h.at(-1, HalfInt(-1)), 1u);
  EXPECT_EQ(h.ranks.size(), 2u);
}

TEST(Homology, TrefoilTotalRank) {
  const auto h = homology_ranks(catalog::trefoil());
  EXPECT_EQ(h.total(), 48u);
  const auto peeled = peel_V(PoincarePolynomial::from_ranks(h), 4);
  ASSERT_EQ(peeled.terms().size(), 3u);
  for (const auto& [g, c] : peeled.terms()) EXPECT_EQ(c, 1);
  EXPECT_EQ(peeled.to_ranks().total_at_alexander(HalfInt(-1)), 1u);
  EXPECT_EQ(peeled.to_ranks().total_at_alexander(HalfInt(0)), 1u);
  EXPECT_EQ(peeled.to_ranks().total_at_alexander(HalfInt(1)), 1u);
}

TEST(Homology, AgreesWithDenseOracleExhaustive) {
  for (int n = 2; n <= 4; ++n) {
    std::vector<int> o(n), x(n);
    std::iota(o.begin(), o.end(), 0);
    do {
      std::iota(x.begin(), x.end(), 0);
      do {
        bool shared = false;
        for (int c = 0; c < n; ++c) shared = shared || o[c] == x[c];
        if (shared) continue;
        const GridDiagram g(o, x);
        EXPECT_EQ(keyed(homology_ranks(g)), oracle::tilde_homology(g)) << serialize_grid(g);
      } while (std::next_permutation(x.begin(), x.end()));
    } while (std::next_permutation(o.begin(), o.end()));
  }
}

TEST(Homology, AgreesWithDenseOracleRandomSizeFive) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_grid(5, rng);
    EXPECT_EQ(keyed(homology_ranks(g)), oracle::tilde_homology(g)) << serialize_grid(g);
  }
}

TEST(Homology, RankNullityPerBlock) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_grid(6, rng);
    for (const auto& strand : tilde_differential(g)) {
      const auto h = strand_homology(strand);
      for (const auto& [m, basis] : strand.basis) {
        const auto out_it = strand.boundary.find(m);
        const auto in_it = strand.boundary.find(m + 1);
        const std::size_t out = out_it == strand.boundary.end() ? 0 : gf2::gf2_rank(out_it->second);
        const std::size_t in = in_it == strand.boundary.end() ? 0 : gf2::gf2_rank(in_it->second);
        EXPECT_EQ(basis.size(), out + in + h.at(m, strand.alexander));
      }
    }
  }
}

TEST(Homology, SquareOfStrandDifferentialVanishes) {
  const auto g = catalog::figure_eight();
  for (const auto& strand : tilde_differential(g)) {
    for (const auto& [m, matrix] : strand.boundary) {
      const auto below = strand.boundary.find(m - 1);
      if (below == strand.boundary.end()) continue;
      EXPECT_TRUE(gf2::multiply(below->second, matrix).is_zero());
    }
  }
}

TEST(Homology, StabilizedUnknotsHaveRankPowerOfTwo) {
  for (int n = 2; n <= 8; ++n) {
    const auto h = homology_ranks(catalog::stabilized_unknot(n));
    EXPECT_EQ(h.total(), std::uint64_t{1} << (n - 1));
    EXPECT_EQ(peel_V(PoincarePolynomial::from_ranks(h), n - 1), PoincarePolynomial::one());
  }
}

TEST(Homology, IndependentOfWorkerCount) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 5; ++trial) {
    const auto g = random_grid(7, rng);
    const auto one = homology_ranks(g, 1);
    EXPECT_EQ(homology_ranks(g, 3), one);
    EXPECT_EQ(homology_ranks(g, 8), one);
  }
}

TEST(Homology, DivisibleByVOnRandomGrids) {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_grid(3 + trial % 4, rng);
    const auto p = PoincarePolynomial::from_ranks(homology_ranks(g));
    EXPECT_NO_THROW(peel_V(p, g.size() - component_count(g))) << serialize_grid(g);
  }
}
