#include "gridhfk/domains.hpp"

#include "gridhfk/error.hpp"

namespace gridhfk {

namespace {

int wrap(int v, int n) { return ((v % n) + n) % n; }

}  // namespace

GridDomain::GridDomain(Generator from, Generator to, std::vector<int> multiplicities)
    : from_(from), to_(to), multiplicities_(std::move(multiplicities)) {
  const int n = from_.size();
  if (to_.size() != n) throw Error(ErrorKind::InvalidDomain, "generators of different sizes");
  if (multiplicities_.size() != static_cast<std::size_t>(n * n)) {
    throw Error(ErrorKind::InvalidDomain, "expected " + std::to_string(n * n) + " multiplicities");
  }
  // Horizontal boundary edge from (c, r) to (c+1, r) carries the square above
  // minus the square below. Its endpoints must add up to to - from.
  auto edge = [&](int c, int r) { return multiplicity(c, r) - multiplicity(c, r - 1); };
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) {
      const int boundary = edge(c - 1, r) - edge(c, r);
      const int expected = (to_[c] == r) - (from_[c] == r);
      if (boundary != expected) {
        throw Error(ErrorKind::InvalidDomain,
                    "boundary on the horizontal circles does not run from " + from_.str() +
                        " to " + to_.str() + " at (" + std::to_string(c) + ", " +
                        std::to_string(r) + ")");
      }
    }
  }
}

GridDomain GridDomain::zero(const Generator& x) {
  return GridDomain(x, x, std::vector<int>(x.size() * x.size(), 0));
}

GridDomain GridDomain::from_rectangle(const Rectangle& rect) {
  const int n = rect.size();
  std::vector<int> mult(n * n, 0);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) mult[c * n + r] = rect.covers_cell(c, r) ? 1 : 0;
  }
  return GridDomain(rect.from, rect.to, std::move(mult));
}

int GridDomain::multiplicity(int column, int row) const {
  const int n = size();
  return multiplicities_[wrap(column, n) * n + wrap(row, n)];
}

bool GridDomain::is_nonnegative() const {
  for (int m : multiplicities_) {
    if (m < 0) return false;
  }
  return true;
}

GridDomain GridDomain::operator+(const GridDomain& next) const {
  if (to_ != next.from_) {
    throw Error(ErrorKind::InvalidDomain,
                "cannot juxtapose: " + to_.str() + " != " + next.from_.str());
  }
  std::vector<int> sum = multiplicities_;
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += next.multiplicities_[i];
  return GridDomain(from_, next.to_, std::move(sum));
}

Rational square_euler_measure() { return Rational(0); }

Rational euler_measure(const GridDomain& domain) {
  const int n = domain.size();
  Rational total(0);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) total += domain.multiplicity(c, r) * square_euler_measure();
  }
  return total;
}

Rational vertex_multiplicity(const GridDomain& domain, int column, int row) {
  const int n = domain.size();
  column = wrap(column, n);
  row = wrap(row, n);
  if (domain.from()[column] != row && domain.to()[column] != row) {
    throw Error(ErrorKind::PointNotCorner, "(" + std::to_string(column) + ", " +
                                               std::to_string(row) +
                                               ") is not a point of either generator");
  }
  const int quadrants = domain.multiplicity(column - 1, row - 1) +
                        domain.multiplicity(column, row - 1) +
                        domain.multiplicity(column - 1, row) + domain.multiplicity(column, row);
  return Rational(quadrants, 4);
}

Rational total_vertex_multiplicity(const GridDomain& domain) {
  Rational total(0);
  for (int c = 0; c < domain.size(); ++c) {
    total += vertex_multiplicity(domain, c, domain.from()[c]);
    total += vertex_multiplicity(domain, c, domain.to()[c]);
  }
  return total;
}

Rational maslov_index(const GridDomain& domain) {
  return euler_measure(domain) + total_vertex_multiplicity(domain);
}

}  // namespace gridhfk
