#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {
namespace {

int mod(int a, int n) { return ((a % n) + n) % n; }

// Number of steps going up (or right) from a to b on a circle of length n.
int steps(int a, int b, int n) { return mod(b - a, n); }

bool in_cyclic_open(int v, int lo, int len, int n) {
  const int d = steps(lo, v, n);
  return d > 0 && d < len;
}

bool in_cyclic_halfopen(int v, int lo, int len, int n) { return steps(lo, v, n) < len; }

}  // namespace

std::vector<Perm> permutations(int n) {
  std::vector<Perm> out;
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Rect> rectangles(const gridhfk::GridDiagram& g, const Perm& x, const Perm& y) {
  const int n = g.size();
  auto has = [&](const Perm& p, int c, int r) { return p[c] == r; };
  std::vector<Rect> out;
  for (int l = 0; l < n; ++l) {
    for (int r = 0; r < n; ++r) {
      if (r == l) continue;
      for (int b = 0; b < n; ++b) {
        for (int t = 0; t < n; ++t) {
          if (t == b) continue;
          if (!has(x, l, b) || !has(x, r, t) || !has(y, r, b) || !has(y, l, t)) continue;
          bool rest_equal = true;
          for (int c = 0; c < n; ++c) {
            if (c != l && c != r && x[c] != y[c]) rest_equal = false;
          }
          if (!rest_equal) continue;
          const int w = steps(l, r, n);
          const int h = steps(b, t, n);
          Rect rect{l, r, b, t, true, 0, 0};
          for (int c = 0; c < n; ++c) {
            if (in_cyclic_open(c, l, w, n) && in_cyclic_open(x[c], b, h, n)) rect.empty = false;
          }
          // Walk every unit cell of the rectangle.
          for (int dc = 0; dc < w; ++dc) {
            for (int dr = 0; dr < h; ++dr) {
              const int c = mod(l + dc, n);
              const int row = mod(b + dr, n);
              if (g.o_row(c) == row) ++rect.o_inside;
              if (g.x_row(c) == row) ++rect.x_inside;
            }
          }
          out.push_back(rect);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Pt {
  int x2, y2;  // doubled coordinates
};

long long pairs_ne(const std::vector<Pt>& a, const std::vector<Pt>& b) {
  long long count = 0;
  for (const auto& p : a) {
    for (const auto& q : b) {
      if (p.x2 < q.x2 && p.y2 < q.y2) ++count;
    }
  }
  return count;
}

// 2J(a, b) = I(a, b) + I(b, a).
long long twice_j(const std::vector<Pt>& a, const std::vector<Pt>& b) {
  return pairs_ne(a, b) + pairs_ne(b, a);
}

std::vector<Pt> gen_points(const Perm& x) {
  std::vector<Pt> out;
  for (int c = 0; c < static_cast<int>(x.size()); ++c) out.push_back({2 * c, 2 * x[c]});
  return out;
}

std::vector<Pt> marks(std::span<const int> rows) {
  std::vector<Pt> out;
  for (int c = 0; c < static_cast<int>(rows.size()); ++c) out.push_back({2 * c + 1, 2 * rows[c] + 1});
  return out;
}

}  // namespace

int maslov(const gridhfk::GridDiagram& g, const Perm& x) {
  const auto p = gen_points(x);
  const auto o = marks(g.o_rows());
  const long long twice = twice_j(p, p) - 2 * twice_j(p, o) + twice_j(o, o);
  return static_cast<int>(twice / 2) + 1;
}

int twice_alexander(const gridhfk::GridDiagram& g, const Perm& x) {
  const auto p = gen_points(x);
  const auto o = marks(g.o_rows());
  const auto xs = marks(g.x_rows());
  // 2A = 2J(x, X) - 2J(x, O) - J(X, X) + J(O, O) - (n - l), where the
  // half-weight terms on the markings come from J((X + O)/2, X - O).
  const long long value = twice_j(p, xs) - twice_j(p, o) - twice_j(xs, xs) / 2 +
                          twice_j(o, o) / 2 - (g.size() - components(g));
  return static_cast<int>(value);
}

int components(const gridhfk::GridDiagram& g) {
  const int n = g.size();
  std::vector<bool> seen(n, false);
  int count = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++count;
    int c = start;
    while (!seen[c]) {
      seen[c] = true;
      // Walk up the column from the O until the X.
      int row = g.o_row(c);
      while (g.x_row(c) != row) row = mod(row + 1, n);
      // Walk right along the row from the X until the O.
      int col = c;
      while (g.o_row(col) != row) col = mod(col + 1, n);
      c = col;
    }
  }
  return count;
}

int crossings(const gridhfk::GridDiagram& g) {
  const int n = g.size();
  int count = 0;
  for (int c = 0; c < n; ++c) {
    const int lo = std::min(g.o_row(c), g.x_row(c));
    const int hi = std::max(g.o_row(c), g.x_row(c));
    for (int r = lo + 1; r < hi; ++r) {
      int a = -1, b = -1;
      for (int k = 0; k < n; ++k) {
        if (g.o_row(k) == r) a = k;
        if (g.x_row(k) == r) b = k;
      }
      if (std::min(a, b) < c && c < std::max(a, b)) ++count;
    }
  }
  return count;
}

std::size_t dense_rank(std::vector<std::vector<std::uint8_t>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && !m[p][c]) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != rank && m[r][c]) {
        for (std::size_t k = 0; k < cols; ++k) m[r][k] ^= m[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

std::map<std::pair<int, int>, std::uint64_t> tilde_homology(const gridhfk::GridDiagram& g) {
  const auto gens = permutations(g.size());
  const std::size_t count = gens.size();
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < count; ++i) index[gens[i]] = i;

  std::vector<std::vector<std::uint8_t>> d(count, std::vector<std::uint8_t>(count, 0));
  for (std::size_t i = 0; i < count; ++i) {
    const Perm& x = gens[i];
    for (int a = 0; a < g.size(); ++a) {
      for (int b = a + 1; b < g.size(); ++b) {
        Perm y = x;
        std::swap(y[a], y[b]);
        for (const auto& r : rectangles(g, x, y)) {
          if (r.empty && r.o_inside == 0 && r.x_inside == 0) d[index[y]][i] ^= 1;
        }
      }
    }
  }

  // H = dim C - rank d restricted to each bigrading; computed by taking the
  // full rank of d on each pair of adjacent gradings.
  std::map<std::pair<int, int>, std::vector<std::size_t>> by_grading;
  for (std::size_t i = 0; i < count; ++i) {
    by_grading[{maslov(g, gens[i]), twice_alexander(g, gens[i])}].push_back(i);
  }
  auto block_rank = [&](std::pair<int, int> from) -> std::size_t {
    const auto src = by_grading.find(from);
    const auto dst = by_grading.find({from.first - 1, from.second});
    if (src == by_grading.end() || dst == by_grading.end()) return 0;
    std::vector<std::vector<std::uint8_t>> m;
    for (auto r : dst->second) {
      std::vector<std::uint8_t> row;
      for (auto c : src->second) row.push_back(d[r][c]);
      m.push_back(row);
    }
    return dense_rank(m);
  };
  // The full differential must not leave its bigrading.
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      if (!d[j][i]) continue;
      if (maslov(g, gens[j]) != maslov(g, gens[i]) - 1 ||
          twice_alexander(g, gens[j]) != twice_alexander(g, gens[i])) {
        throw std::logic_error("oracle differential leaves its bigrading");
      }
    }
  }
  std::map<std::pair<int, int>, std::uint64_t> out;
  for (const auto& [key, members] : by_grading) {
    const std::size_t h =
        members.size() - block_rank(key) - block_rank({key.first + 1, key.second});
    if (h > 0) out[key] = h;
  }
  return out;
}

namespace {

using Poly = std::map<int, long long>;

Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [e1, c1] : a) {
    for (const auto& [e2, c2] : b) out[e1 + e2] += c1 * c2;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

void add_to(Poly& a, const Poly& b, long long sign) {
  for (const auto& [e, c] : b) a[e] += sign * c;
  std::erase_if(a, [](const auto& kv) { return kv.second == 0; });
}

// Divides by (1 - t) exactly.
Poly divide_one_minus_t(const Poly& p) {
  if (p.empty()) return p;
  // Synthetic division from the lowest degree up: p = (1 - t) q.
  Poly q;
  Poly rest = p;
  while (!rest.empty()) {
    const auto [e, c] = *rest.begin();
    q[e] += c;
    rest[e] -= c;
    rest[e + 1] += c;
    std::erase_if(rest, [](const auto& kv) { return kv.second == 0; });
    if (!rest.empty() && rest.begin()->first > p.rbegin()->first + 1) {
      throw std::logic_error("not divisible by 1 - t");
    }
    if (q.size() > p.size() * 4 + 64) throw std::logic_error("not divisible by 1 - t");
  }
  std::erase_if(q, [](const auto& kv) { return kv.second == 0; });
  return q;
}

long long det_sign(const Perm& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

std::map<int, long long> alexander(const gridhfk::GridDiagram& g) {
  const int n = g.size();
  // Winding number of the projection around lattice point (i, j), i.e. the
  // lower-left corner of cell (i, j): signed count of vertical segments
  // crossing the leftward ray from the point.
  std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int wind = 0;
      for (int c = 0; c < i; ++c) {
        const int o = g.o_row(c);
        const int x = g.x_row(c);
        if (std::min(o, x) < j && j <= std::max(o, x)) wind += (x > o) ? -1 : 1;
      }
      w[i][j] = wind;
    }
  }
  Poly det;
  for (const auto& p : permutations(n)) {
    Poly term{{0, det_sign(p)}};
    for (int i = 0; i < n; ++i) term = mul(term, Poly{{w[i][p[i]], 1}});
    add_to(det, term, 1);
  }
  for (int k = 0; k < n - 1; ++k) det = divide_one_minus_t(det);
  if (det.empty()) return det;
  const int shift = det.begin()->first + det.rbegin()->first;
  if (shift % 2 != 0) throw std::logic_error("Alexander polynomial has odd span");
  long long value = 0;
  for (const auto& [e, c] : det) value += c;
  const long long sign = value < 0 ? -1 : 1;
  Poly out;
  for (const auto& [e, c] : det) out[e - shift / 2] = sign * c;
  return out;
}

}  // namespace oracle
