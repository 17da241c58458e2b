#include "gridhfk/homology.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "gridhfk/detail/parallel.hpp"
#include "gridhfk/error.hpp"

namespace gridhfk {

std::uint64_t BigradedRanks::total() const {
  std::uint64_t sum = 0;
  for (const auto& [g, r] : ranks) sum += r;
  return sum;
}

std::uint64_t BigradedRanks::at(int maslov, HalfInt alexander) const {
  const auto it = ranks.find({maslov, alexander});
  return it == ranks.end() ? 0 : it->second;
}

std::uint64_t BigradedRanks::total_at_alexander(HalfInt alexander) const {
  std::uint64_t sum = 0;
  for (const auto& [g, r] : ranks) {
    if (g.alexander == alexander) sum += r;
  }
  return sum;
}

void BigradedRanks::add(Bigrading grading, std::uint64_t rank) {
  if (rank != 0) ranks[grading] += rank;
}

// ---------------------------------------------------------------------------

PoincarePolynomial PoincarePolynomial::one() {
  PoincarePolynomial p;
  p.add({0, HalfInt(0)}, 1);
  return p;
}

PoincarePolynomial PoincarePolynomial::v_factor() {
  PoincarePolynomial p = one();
  p.add({-1, HalfInt(-1)}, 1);
  return p;
}

PoincarePolynomial PoincarePolynomial::from_ranks(const BigradedRanks& ranks) {
  PoincarePolynomial p;
  for (const auto& [g, r] : ranks.ranks) p.add(g, static_cast<long long>(r));
  return p;
}

BigradedRanks PoincarePolynomial::to_ranks() const {
  BigradedRanks ranks;
  for (const auto& [g, c] : terms_) {
    if (c < 0) throw std::domain_error("negative coefficient in Poincare polynomial");
    ranks.add(g, static_cast<std::uint64_t>(c));
  }
  return ranks;
}

long long PoincarePolynomial::coefficient(int maslov, HalfInt alexander) const {
  const auto it = terms_.find({maslov, alexander});
  return it == terms_.end() ? 0 : it->second;
}

void PoincarePolynomial::add(Bigrading grading, long long coefficient) {
  if (coefficient == 0) return;
  auto& slot = terms_[grading];
  slot += coefficient;
  if (slot == 0) terms_.erase(grading);
}

PoincarePolynomial PoincarePolynomial::operator*(const PoincarePolynomial& other) const {
  PoincarePolynomial product;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : other.terms_) {
      product.add({a.maslov + b.maslov, a.alexander + b.alexander}, ca * cb);
    }
  }
  return product;
}

std::string PoincarePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // Highest Alexander grading first, then highest Maslov grading.
  std::vector<std::pair<Bigrading, long long>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.first.alexander != b.first.alexander) return a.first.alexander > b.first.alexander;
    return a.first.maslov > b.first.maslov;
  });
  for (const auto& [g, c] : ordered) {
    long long magnitude = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::string monomial;
    if (g.maslov != 0) {
      monomial += g.maslov == 1 ? "t" : "t^" + std::to_string(g.maslov);
    }
    if (g.alexander != HalfInt(0)) {
      if (!monomial.empty()) monomial += " ";
      monomial += g.alexander == HalfInt(1) ? "q" : "q^" + g.alexander.str();
    }
    if (monomial.empty()) {
      out << magnitude;
    } else {
      if (magnitude != 1) out << magnitude;
      out << monomial;
    }
  }
  return out.str();
}

PoincarePolynomial peel_V(const PoincarePolynomial& polynomial, int k) {
  if (k < 0) throw std::invalid_argument("peel_V: negative power");
  PoincarePolynomial current = polynomial;
  for (int step = 0; step < k; ++step) {
    if (current.is_zero()) return current;
    const int lowest_maslov = current.terms().begin()->first.maslov;
    PoincarePolynomial remainder = current;
    PoincarePolynomial quotient;
    while (!remainder.is_zero()) {
      // The largest term cannot be reached from any other by the V shift.
      const auto [top, c] = *remainder.terms().rbegin();
      if (top.maslov <= lowest_maslov || c < 0) {
        throw Error(ErrorKind::NotDivisible,
                    "polynomial is not divisible by (1 + t^-1 q^-1)^" + std::to_string(k) +
                        " (failed at factor " + std::to_string(step + 1) + ", term t^" +
                        std::to_string(top.maslov) + " q^" + top.alexander.str() + ")");
      }
      quotient.add(top, c);
      remainder.add(top, -c);
      remainder.add({top.maslov - 1, top.alexander - HalfInt(1)}, -c);
    }
    current = std::move(quotient);
  }
  return current;
}

// ---------------------------------------------------------------------------

BigradedRanks strand_homology(const TildeStrand& strand) {
  std::map<int, std::size_t> boundary_rank;
  for (const auto& [m, matrix] : strand.boundary) boundary_rank[m] = gf2::gf2_rank(matrix);
  auto rank_of = [&](int m) -> std::size_t {
    const auto it = boundary_rank.find(m);
    return it == boundary_rank.end() ? 0 : it->second;
  };
  BigradedRanks ranks;
  for (const auto& [m, basis] : strand.basis) {
    const std::size_t out = rank_of(m);
    const std::size_t in = rank_of(m + 1);
    if (out + in > basis.size()) throw std::logic_error("rank exceeds block dimension");
    ranks.add({m, strand.alexander}, basis.size() - out - in);
  }
  return ranks;
}

BigradedRanks homology_ranks(const GridDiagram& grid, int jobs) {
  const auto gradings = alexander_gradings(grid);
  std::vector<BigradedRanks> per_strand(gradings.size());
  detail::parallel_for(gradings.size(), jobs, [&](std::size_t k) {
    per_strand[k] = strand_homology(tilde_strand(grid, gradings[k]));
  });
  BigradedRanks total;
  for (const auto& part : per_strand) {
    for (const auto& [g, r] : part.ranks) total.add(g, r);
  }
  return total;
}

}  // namespace gridhfk
