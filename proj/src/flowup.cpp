#include "flowup.hpp"

#include <algorithm>
#include <functional>

#include "errors.hpp"

namespace flowup {

std::vector<int> support(const Vector& x) {
  std::vector<int> s;
  for (size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) s.push_back(static_cast<int>(i));
  return s;
}

std::optional<int> is_flowup(const poset::GradedPoset& p, const Vector& x) {
  auto s = support(x);
  if (s.empty()) pp::fail("ZeroVector", "the zero vector has no minimum");
  for (int m : s) {
    bool below_all = std::all_of(s.begin(), s.end(), [&](int i) { return p.leq(m, i); });
    if (below_all) return m;
  }
  return std::nullopt;
}

bool is_poset_upper_triangular(const poset::GradedPoset& p, const Rows& rows) {
  std::vector<char> used(p.size(), 0);
  for (const auto& r : rows) {
    auto m = is_flowup(p, r);
    if (!m || used[static_cast<size_t>(*m)]) return false;
    used[static_cast<size_t>(*m)] = 1;
  }
  return true;
}

std::vector<int> flowup_failures(const poset::GradedPoset& p, const Rows& rows, const std::vector<int>& intended) {
  std::vector<int> bad;
  for (size_t k = 0; k < rows.size(); ++k) {
    std::optional<int> m = support(rows[k]).empty() ? std::nullopt : is_flowup(p, rows[k]);
    if (!m || *m != intended[k]) bad.push_back(static_cast<int>(k));
  }
  return bad;
}

bool is_total_order_upper_triangular(const Rows& rows, const std::vector<int>& order) {
  std::vector<char> taken(order.size(), 0);
  for (const auto& r : rows) {
    size_t pos = 0;
    while (pos < order.size() && r[static_cast<size_t>(order[pos])].is_zero()) ++pos;
    if (pos == order.size() || taken[pos]) return false;
    taken[pos] = 1;
  }
  return true;
}

namespace {

// Rows still unpinned must be matchable to distinct unplaced support elements.
bool hall_ok(const Rows& rows, const std::vector<char>& pinned, const std::vector<char>& placed) {
  const size_t m = placed.size();
  std::vector<int> owner(m, -1);
  std::function<bool(size_t, std::vector<char>&)> augment = [&](size_t r, std::vector<char>& seen) {
    for (size_t i = 0; i < m; ++i) {
      if (placed[i] || seen[i] || rows[r][i].is_zero()) continue;
      seen[i] = 1;
      if (owner[i] < 0 || augment(static_cast<size_t>(owner[i]), seen)) {
        owner[i] = static_cast<int>(r);
        return true;
      }
    }
    return false;
  };
  for (size_t r = 0; r < rows.size(); ++r) {
    if (pinned[r]) continue;
    std::vector<char> seen(m, 0);
    if (!augment(r, seen)) return false;
  }
  return true;
}

struct TriangularDfs {
  const poset::GradedPoset& p;
  const Rows& rows;
  size_t budget;
  size_t nodes = 0;
  bool budget_hit = false;

  std::vector<int> pins(int i, const std::vector<char>& pinned) const {
    std::vector<int> out;
    for (size_t r = 0; r < rows.size(); ++r)
      if (!pinned[r] && !rows[r][static_cast<size_t>(i)].is_zero()) out.push_back(static_cast<int>(r));
    return out;
  }

  bool available(int i, const std::vector<char>& placed) const {
    if (placed[static_cast<size_t>(i)]) return false;
    for (size_t j = 0; j < placed.size(); ++j)
      if (!placed[j] && static_cast<int>(j) != i && p.leq(static_cast<int>(j), i)) return false;
    return true;
  }

  std::optional<std::vector<int>> run(std::vector<int> order, std::vector<char> placed, std::vector<char> pinned) {
    if (++nodes > budget) {
      budget_hit = true;
      return std::nullopt;
    }
    const int m = static_cast<int>(placed.size());
    // Elements that pin nothing never hurt, so place them without branching.
    for (bool again = true; again;) {
      again = false;
      for (int i = 0; i < m; ++i) {
        if (available(i, placed) && pins(i, pinned).empty()) {
          placed[static_cast<size_t>(i)] = 1;
          order.push_back(i);
          again = true;
        }
      }
    }
    if (static_cast<int>(order.size()) == m) {
      if (std::all_of(pinned.begin(), pinned.end(), [](char c) { return c != 0; })) return order;
      return std::nullopt;
    }
    if (!hall_ok(rows, pinned, placed)) return std::nullopt;
    for (int i = 0; i < m; ++i) {
      if (!available(i, placed)) continue;
      auto hit = pins(i, pinned);
      if (hit.size() != 1) continue;
      auto o2 = order;
      auto pl2 = placed;
      auto pn2 = pinned;
      o2.push_back(i);
      pl2[static_cast<size_t>(i)] = 1;
      pn2[static_cast<size_t>(hit.front())] = 1;
      auto res = run(std::move(o2), std::move(pl2), std::move(pn2));
      if (res || budget_hit) return res;
    }
    return std::nullopt;
  }
};

}  // namespace

OrderSearch find_triangular_order(const poset::GradedPoset& p, const Rows& rows, size_t budget) {
  for (const auto& r : rows)
    if (r.size() != p.size()) pp::fail("SizeMismatch", "vector length differs from the index set");
  TriangularDfs dfs{p, rows, budget};
  OrderSearch out;
  out.order = dfs.run({}, std::vector<char>(p.size(), 0), std::vector<char>(rows.size(), 0));
  out.nodes = dfs.nodes;
  out.budget_hit = dfs.budget_hit;
  return out;
}

int rank(const Rows& rows) { return algebra::rank_over_fraction_field(rows); }

bool linearly_independent(const Rows& rows) { return rank(rows) == static_cast<int>(rows.size()); }

bool span_equal(const Rows& a, const Rows& b) {
  Rows both = a;
  both.insert(both.end(), b.begin(), b.end());
  const int ra = rank(a);
  return ra == rank(b) && ra == rank(both);
}

Rows construct_flowup_basis(const Rows& generators, const std::vector<int>& order) {
  Rows live;
  for (const auto& g : generators)
    if (!support(g).empty()) live.push_back(g);
  Rows out;
  for (int col : order) {
    const auto c = static_cast<size_t>(col);
    // Euclid down to a single row that is nonzero on this column.
    while (true) {
      std::vector<size_t> hot;
      for (size_t r = 0; r < live.size(); ++r)
        if (!live[r][c].is_zero()) hot.push_back(r);
      if (hot.size() <= 1) break;
      size_t piv = *std::min_element(hot.begin(), hot.end(), [&](size_t a, size_t b) {
        return live[a][c].degree() < live[b][c].degree();
      });
      for (size_t r : hot) {
        if (r == piv) continue;
        TPoly q = live[r][c].divmod(live[piv][c]).first;
        for (size_t k = 0; k < live[r].size(); ++k) live[r][k] -= q * live[piv][k];
      }
      live.erase(std::remove_if(live.begin(), live.end(), [](const Vector& v) { return support(v).empty(); }),
                 live.end());
    }
    auto it = std::find_if(live.begin(), live.end(), [&](const Vector& v) { return !v[c].is_zero(); });
    if (it == live.end()) continue;
    Vector row = *it;
    live.erase(it);
    const algebra::Q scale = algebra::Q(1) / row[c].leading();
    for (auto& x : row) x *= scale;
    out.push_back(std::move(row));
  }
  if (!live.empty() || !span_equal(out, generators))
    pp::fail("NotSpanning", "echelon output does not span the generator module");
  return out;
}

std::vector<int> pivots(const Rows& rows, const std::vector<int>& order) {
  std::vector<int> out;
  for (const auto& r : rows) {
    int pv = -1;
    for (int i : order)
      if (!r[static_cast<size_t>(i)].is_zero()) {
        pv = i;
        break;
      }
    out.push_back(pv);
  }
  return out;
}

namespace {

std::vector<int> histogram_of(const std::vector<int>& degrees, std::vector<std::string>& problems, bool halve) {
  std::vector<int> h;
  for (int d : degrees) {
    if (halve && (d < 0 || d % 2 != 0)) {
      problems.push_back("degree tag " + std::to_string(d) + " is not an even nonnegative integer");
      continue;
    }
    int j = halve ? d / 2 : d;
    if (j < 0) {
      problems.push_back("negative degree");
      continue;
    }
    if (static_cast<int>(h.size()) <= j) h.resize(static_cast<size_t>(j) + 1, 0);
    ++h[static_cast<size_t>(j)];
  }
  return h;
}

bool same_histogram(std::vector<int> a, std::vector<int> b) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  while (!b.empty() && b.back() == 0) b.pop_back();
  return a == b;
}

std::string join(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

BasisReport verify_pinball_basis(const Family& f, const std::vector<int>& targets) {
  BasisReport rep;
  rep.rank = rank(f.rows);
  rep.independent = rep.rank == static_cast<int>(f.rows.size());
  if (!rep.independent)
    rep.problems.push_back("rank " + std::to_string(rep.rank) + " < " + std::to_string(f.rows.size()) + " candidates");
  rep.histogram = histogram_of(f.degrees, rep.problems, true);
  if (!same_histogram(rep.histogram, targets))
    rep.problems.push_back("degree histogram " + join(rep.histogram) + " differs from targets " + join(targets));
  rep.ok = rep.problems.empty();
  return rep;
}

BasisReport verify_matching_basis(const Family& f, const poset::GradedPoset& x, const std::vector<int>& f_map,
                                  const std::vector<int>& deg_y, const std::vector<int>& targets) {
  const size_t m = f.index->size();
  if (f_map.size() != m || deg_y.size() != m || f.rows.size() != m)
    pp::fail("SizeMismatch", "matching data must have one entry per index element");
  std::vector<int> sorted = f_map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    pp::fail("NotInjective", "matching sends two index elements to the same element");
  BasisReport rep;
  for (size_t k = 0; k < m; ++k)
    if (deg_y[k] != x.rank(f_map[k]))
      rep.problems.push_back("deg_Y(" + f.index->id(static_cast<int>(k)) + ") = " + std::to_string(deg_y[k]) +
                             " but rank(" + x.id(f_map[k]) + ") = " + std::to_string(x.rank(f_map[k])));
  rep.histogram = histogram_of(deg_y, rep.problems, false);
  if (!same_histogram(rep.histogram, targets))
    rep.problems.push_back("degree histogram " + join(rep.histogram) + " differs from targets " + join(targets));
  auto search = find_triangular_order(*f.index, f.rows);
  rep.triangular_order = search.order;
  if (!search.order)
    rep.problems.push_back(search.budget_hit ? "triangular order search hit its node budget"
                                             : "no compatible total order makes the candidates triangular");
  rep.rank = rank(f.rows);
  rep.independent = rep.rank == static_cast<int>(f.rows.size());
  rep.ok = rep.problems.empty();
  return rep;
}

}  // namespace flowup
