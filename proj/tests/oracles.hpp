#pragma once
// Brute-force reference implementations used by the tests. None of this
// calls into the library beyond plain data types.

#include <gmpxx.h>

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;  // signed one-line notation, 1-based values
using Mono = std::vector<int>;
using Poly = std::map<Mono, mpq_class>;

struct Group {
  char type = 'A';
  int rank = 0, dim = 0;
  std::vector<Perm> elems;
  std::map<Perm, int> index;
  std::vector<std::vector<int>> word;  // a reduced word per element (BFS)
  std::vector<std::vector<int>> simple;  // simple roots, ambient coordinates

  Perm gen(const Perm& w, int i) const {  // w * s_i
    Perm r = w;
    if (i < rank || type == 'A') {
      std::swap(r[static_cast<size_t>(i - 1)], r[static_cast<size_t>(i)]);
    } else if (type == 'B' || type == 'C') {
      r[static_cast<size_t>(dim - 1)] = -r[static_cast<size_t>(dim - 1)];
    } else {  // D
      int a = r[static_cast<size_t>(dim - 2)], b = r[static_cast<size_t>(dim - 1)];
      r[static_cast<size_t>(dim - 2)] = -b;
      r[static_cast<size_t>(dim - 1)] = -a;
    }
    return r;
  }

  Perm compose(const Perm& u, const Perm& v) const {  // (uv)(i) = u(v(i))
    Perm r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
      int x = v[i];
      int y = u[static_cast<size_t>(std::abs(x) - 1)];
      r[i] = x < 0 ? -y : y;
    }
    return r;
  }

  Perm from_word(const std::vector<int>& w) const {
    Perm p(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) p[static_cast<size_t>(i)] = i + 1;
    for (int s : w) p = gen(p, s);
    return p;
  }

  std::vector<int> act(const Perm& w, const std::vector<int>& v) const {
    std::vector<int> r(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i) {
      int x = w[i];
      r[static_cast<size_t>(std::abs(x) - 1)] += (x < 0 ? -1 : 1) * v[i];
    }
    return r;
  }

  int length(int e) const { return static_cast<int>(word[static_cast<size_t>(e)].size()); }

  // Every product of a subword of the stored reduced word.
  std::set<int> below(int w) const {
    const auto& b = word[static_cast<size_t>(w)];
    std::set<int> out;
    for (unsigned mask = 0; mask < (1u << b.size()); ++mask) {
      std::vector<int> sub;
      for (size_t j = 0; j < b.size(); ++j)
        if (mask & (1u << j)) sub.push_back(b[j]);
      out.insert(index.at(from_word(sub)));
    }
    return out;
  }

  bool bruhat_leq(int u, int w) const { return below(w).count(u) > 0; }

  // Coordinates of an ambient vector in the simple roots (exact solve).
  std::vector<mpq_class> simple_coords(const std::vector<int>& v) const {
    const int n = rank;
    // Least squares is unnecessary: the simple roots are independent, so
    // solve the dim x n system by elimination on the augmented matrix.
    std::vector<std::vector<mpq_class>> m(static_cast<size_t>(dim), std::vector<mpq_class>(static_cast<size_t>(n + 1)));
    for (int r = 0; r < dim; ++r) {
      for (int c = 0; c < n; ++c) m[r][c] = simple[static_cast<size_t>(c)][static_cast<size_t>(r)];
      m[r][n] = v[static_cast<size_t>(r)];
    }
    int row = 0;
    std::vector<int> pivcol;
    for (int c = 0; c < n && row < dim; ++c) {
      int p = -1;
      for (int r = row; r < dim; ++r)
        if (m[r][c] != 0) {
          p = r;
          break;
        }
      if (p < 0) continue;
      std::swap(m[row], m[p]);
      for (int r = 0; r < dim; ++r) {
        if (r == row || m[r][c] == 0) continue;
        mpq_class f = m[r][c] / m[row][c];
        for (int k = c; k <= n; ++k) m[r][k] -= f * m[row][k];
      }
      pivcol.push_back(c);
      ++row;
    }
    for (int r = row; r < dim; ++r)
      if (m[r][n] != 0) throw std::runtime_error("not in the root span");
    std::vector<mpq_class> out(static_cast<size_t>(n));
    for (int r = 0; r < row; ++r) out[static_cast<size_t>(pivcol[r])] = m[r][n] / m[r][pivcol[r]];
    return out;
  }
};

inline Group make_group(char type, int rank) {
  Group g;
  g.type = type;
  g.rank = rank;
  g.dim = type == 'A' ? rank + 1 : rank;
  for (int i = 1; i <= rank; ++i) {
    std::vector<int> a(static_cast<size_t>(g.dim), 0);
    if (i < rank || type == 'A') {
      a[static_cast<size_t>(i - 1)] = 1;
      a[static_cast<size_t>(i)] = -1;
    } else if (type == 'B') {
      a[static_cast<size_t>(g.dim - 1)] = 1;
    } else if (type == 'C') {
      a[static_cast<size_t>(g.dim - 1)] = 2;
    } else {
      a[static_cast<size_t>(g.dim - 2)] = 1;
      a[static_cast<size_t>(g.dim - 1)] = 1;
    }
    g.simple.push_back(a);
  }
  Perm id(static_cast<size_t>(g.dim));
  for (int i = 0; i < g.dim; ++i) id[static_cast<size_t>(i)] = i + 1;
  std::deque<int> q;
  g.elems.push_back(id);
  g.index[id] = 0;
  g.word.push_back({});
  q.push_back(0);
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    for (int i = 1; i <= rank; ++i) {
      Perm y = g.gen(g.elems[static_cast<size_t>(x)], i);
      if (g.index.count(y)) continue;
      int k = static_cast<int>(g.elems.size());
      g.index[y] = k;
      g.elems.push_back(y);
      auto w = g.word[static_cast<size_t>(x)];
      w.push_back(i);
      g.word.push_back(w);
      q.push_back(k);
    }
  }
  return g;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Mono e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r[e] += ca * cb;
    }
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

inline Poly linear_poly(const std::vector<mpq_class>& c) {
  Poly p;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Mono e(c.size(), 0);
    e[i] = 1;
    p[e] = c[i];
  }
  return p;
}

// Subword sum over the stored reduced word of w.
inline Poly billey(const Group& g, int v, int w) {
  const auto& b = g.word[static_cast<size_t>(w)];
  const Perm& target = g.elems[static_cast<size_t>(v)];
  const size_t lv = static_cast<size_t>(g.length(v));
  Poly total;
  for (unsigned mask = 0; mask < (1u << b.size()); ++mask) {
    if (static_cast<size_t>(__builtin_popcount(mask)) != lv) continue;
    std::vector<int> sub;
    for (size_t j = 0; j < b.size(); ++j)
      if (mask & (1u << j)) sub.push_back(b[j]);
    if (g.from_word(sub) != target) continue;
    Poly term;
    term[Mono(static_cast<size_t>(g.rank), 0)] = 1;
    for (size_t j = 0; j < b.size(); ++j) {
      if (!(mask & (1u << j))) continue;
      std::vector<int> prefix(b.begin(), b.begin() + static_cast<long>(j));
      auto root = g.act(g.from_word(prefix), g.simple[static_cast<size_t>(b[j] - 1)]);
      term = poly_mul(term, linear_poly(g.simple_coords(root)));
    }
    for (const auto& [e, c] : term) total[e] += c;
  }
  for (auto it = total.begin(); it != total.end();) it = it->second == 0 ? total.erase(it) : std::next(it);
  return total;
}

// ---- pinball ----------------------------------------------------------------

struct Board {
  std::vector<int> rank;
  std::vector<std::pair<int, int>> covers;  // (upper, lower)
};

// All rolldown maps reachable with the given rules; betti targets empty means none.
inline std::set<std::vector<int>> pinball_outcomes(const Board& b, const std::vector<int>& initial,
                                                   const std::vector<int>& targets, bool ideal_walls,
                                                   const std::function<bool(int, int)>& leq) {
  std::set<std::vector<int>> out;
  std::function<void(size_t, int, std::set<std::pair<int, int>>, std::vector<int>)> go;
  go = [&](size_t k, int pos, std::set<std::pair<int, int>> walls, std::vector<int> roll) {
    if (k == initial.size()) {
      out.insert(roll);
      return;
    }
    bool moved = false;
    for (const auto& c : b.covers) {
      if (c.first != pos || walls.count(c)) continue;
      moved = true;
      go(k, c.second, walls, roll);
    }
    if (moved) return;
    roll.push_back(pos);
    std::vector<int> count;
    for (int r : roll) {
      int rk = b.rank[static_cast<size_t>(r)];
      if (static_cast<int>(count.size()) <= rk) count.resize(static_cast<size_t>(rk) + 1, 0);
      ++count[static_cast<size_t>(rk)];
    }
    for (const auto& c : b.covers) {
      int rk = b.rank[static_cast<size_t>(c.second)];
      bool full = !targets.empty() && rk < static_cast<int>(targets.size()) && rk < static_cast<int>(count.size()) &&
                  count[static_cast<size_t>(rk)] >= targets[static_cast<size_t>(rk)];
      bool into_ideal = ideal_walls && leq(c.second, initial[k]);
      if (c.second == pos || full || into_ideal) walls.insert(c);
    }
    if (k + 1 < initial.size()) go(k + 1, initial[k + 1], walls, roll);
    else go(k + 1, -1, walls, roll);
  };
  if (!initial.empty()) go(0, initial[0], {}, {});
  return out;
}

// ---- rank over Q(t) ---------------------------------------------------------

inline int rank_at(const std::vector<std::vector<mpq_class>>& m0) {
  auto m = m0;
  int rank = 0;
  const size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
    size_t p = static_cast<size_t>(rank);
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[static_cast<size_t>(rank)]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == static_cast<size_t>(rank) || m[r][c] == 0) continue;
      mpq_class f = m[r][c] / m[static_cast<size_t>(rank)][c];
      for (size_t k = c; k < cols; ++k) m[r][k] -= f * m[static_cast<size_t>(rank)][k];
    }
    ++rank;
  }
  return rank;
}

// rows[i][j] is a coefficient list (low to high). The generic rank is the
// maximum over enough evaluation points.
inline int generic_rank(const std::vector<std::vector<std::vector<mpq_class>>>& rows) {
  int best = 0;
  for (int k = 0; k < 24; ++k) {
    mpq_class t(2 * k + 3, k % 3 + 1);
    std::vector<std::vector<mpq_class>> m;
    for (const auto& row : rows) {
      std::vector<mpq_class> r;
      for (const auto& coeffs : row) {
        mpq_class v = 0, p = 1;
        for (const auto& c : coeffs) {
          v += c * p;
          p *= t;
        }
        r.push_back(v);
      }
      m.push_back(r);
    }
    best = std::max(best, rank_at(m));
  }
  return best;
}

inline long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
