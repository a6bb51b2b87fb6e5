#include "springer_rep.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "billey.hpp"
#include "errors.hpp"

namespace springer {

Matrix identity_matrix(int size) {
  Matrix m(static_cast<size_t>(size), std::vector<TPoly>(static_cast<size_t>(size)));
  for (int i = 0; i < size; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = TPoly(1);
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const size_t n = a.size();
  Matrix c(n, std::vector<TPoly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

Matrix at_zero(const Matrix& m) {
  Matrix z = m;
  for (auto& row : z)
    for (auto& x : row) x = TPoly(x.eval(0));
  return z;
}

Matrix kk_matrix_simple(int n, int j) {
  if (n < 2 || j < 1 || j > n - 1) pp::fail("InvalidIndex", "need 1 <= j <= n-1");
  Matrix m = identity_matrix(n);
  const auto col = static_cast<size_t>(j);
  // s_j . p_{s_j} = t p_e - p_{s_j} + p_{s_{j-1}} + p_{s_{j+1}}
  m[0][col] = TPoly::t();
  m[col][col] = TPoly(-1);
  if (j > 1) m[col - 1][col] = TPoly(1);
  if (j < n - 1) m[col + 1][col] = TPoly(1);
  return m;
}

namespace {

Matrix product_along(int n, const coxeter::Word& word) {
  Matrix m = identity_matrix(n);
  for (int b : word) m = multiply(m, kk_matrix_simple(n, b));
  return m;
}

void require_type_a(const WeylGroup& g) {
  if (g.type() != coxeter::LieType::A) pp::fail("UnsupportedType", "Springer representation needs type A");
}

}  // namespace

Matrix kk_matrix(const WeylGroup& g, Elem w) {
  require_type_a(g);
  const int n = g.dim();
  Matrix m = product_along(n, g.reduced_word(w));
  // Second word: peel left descents instead of right ones.
  coxeter::Word left;
  for (Elem x = w; x != g.identity();) {
    int i = g.left_descents(x).back();
    left.push_back(i);
    x = g.lmul(i, x);
  }
  if (product_along(n, left) != m) pp::fail("Internal", "generator matrices disagree on two reduced words");
  return m;
}

std::vector<RootPoly> kk_act_on_class(const WeylGroup& g, Elem w, const std::vector<RootPoly>& x) {
  if (x.size() != g.size()) pp::fail("PartialSupport", "class must be given at every element of " + g.name());
  std::vector<RootPoly> out(x.size());
  for (Elem u = 0; u < static_cast<Elem>(g.size()); ++u) out[static_cast<size_t>(u)] = x[static_cast<size_t>(g.mul(u, w))];
  return out;
}

int character(const WeylGroup& g, Elem w, int piece) {
  Matrix z = at_zero(kk_matrix(g, w));
  algebra::Q tr = 0;
  if (piece == 0) {
    tr = z[0][0].coeff(0);
  } else if (piece == 1) {
    for (size_t i = 1; i < z.size(); ++i) tr += z[i][i].coeff(0);
  } else {
    pp::fail("InvalidIndex", "degree piece must be 0 or 1");
  }
  return static_cast<int>(tr.get_num().get_si());
}

std::vector<Filling> row_strict_fillings(int n) {
  std::vector<Filling> out;
  for (int b = 1; b <= n; ++b) {
    Filling f;
    for (int k = 1; k <= n; ++k)
      if (k != b) f.top.push_back(k);
    f.bottom = b;
    out.push_back(f);
  }
  return out;
}

Filling act_on_filling(const WeylGroup& g, Elem w, const Filling& t) {
  const auto& ol = g.one_line(w);
  // Put w(i) where i was, then sort each row.
  Filling r;
  for (int x : t.top) r.top.push_back(ol[static_cast<size_t>(x - 1)]);
  std::sort(r.top.begin(), r.top.end());
  r.bottom = ol[static_cast<size_t>(t.bottom - 1)];
  return r;
}

int gp_character(const WeylGroup& g, Elem w, int piece) {
  require_type_a(g);
  const int n = g.dim();
  auto fills = row_strict_fillings(n);
  auto slot = [&](const Filling& f) {
    return static_cast<int>(std::find(fills.begin(), fills.end(), f) - fills.begin());
  };
  // perm[b] = index of w(T_b)
  std::vector<int> perm;
  for (const auto& f : fills) perm.push_back(slot(act_on_filling(g, w, f)));
  if (piece == 0) {
    // w v_0 = c v_0; read c off the coordinates of the image.
    std::vector<int> image(static_cast<size_t>(n), 0);
    for (int b = 0; b < n; ++b) image[static_cast<size_t>(perm[static_cast<size_t>(b)])] += 1;
    if (std::adjacent_find(image.begin(), image.end(), std::not_equal_to<>()) != image.end())
      pp::fail("Internal", "v_0 is not an eigenvector");
    return image[0];
  }
  if (piece != 1) pp::fail("InvalidIndex", "degree piece must be 0 or 1");
  // v_j = T_j - T_1 for j >= 2; w v_j = v_{perm j} - v_{perm 1} with v_1 = 0.
  int tr = 0;
  for (int j = 1; j < n; ++j) {
    int coeff = 0;
    if (perm[static_cast<size_t>(j)] == j) coeff += 1;
    if (perm[0] == j) coeff -= 1;
    tr += coeff;
  }
  return tr;
}

int fixed_point_count(const WeylGroup& g, Elem w) {
  const auto& ol = g.one_line(w);
  int c = 0;
  for (size_t k = 0; k < ol.size(); ++k)
    if (ol[k] == static_cast<int>(k) + 1) ++c;
  return c;
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int maxpart) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

Elem cycle_type_representative(const WeylGroup& g, const std::vector<int>& mu) {
  std::vector<int> ol(static_cast<size_t>(g.dim()));
  int start = 1;
  for (int part : mu) {
    for (int k = 0; k < part; ++k) ol[static_cast<size_t>(start - 1 + k)] = start + (k + 1) % part;
    start += part;
  }
  if (start - 1 != g.dim()) pp::fail("NotAPartition", "cycle type does not partition n");
  return *g.find(ol);
}

std::vector<CharacterRow> character_table(const WeylGroup& g) {
  require_type_a(g);
  std::vector<CharacterRow> rows;
  for (const auto& mu : partitions_of(g.dim())) {
    CharacterRow r;
    r.cycle_type = mu;
    r.representative = cycle_type_representative(g, mu);
    r.fixed_points = fixed_point_count(g, r.representative);
    r.psi0 = character(g, r.representative, 0);
    r.psi1 = character(g, r.representative, 1);
    r.chi0 = gp_character(g, r.representative, 0);
    r.chi1 = gp_character(g, r.representative, 1);
    r.match = r.psi0 == r.chi0 && r.psi1 == r.chi1;
    rows.push_back(r);
  }
  return rows;
}

SimpleActionExpansion expand_simple_action(const WeylGroup& g, int j) {
  require_type_a(g);
  const int n = g.rank();
  auto sigma_sj = billey::full_schubert_class(g, g.simple(j));
  auto x = kk_act_on_class(g, g.simple(j), sigma_sj);
  // sigma_e = 1 everywhere and sigma_{s_i}(s_k) = delta_ik alpha_i, so the
  // coefficients peel off at e and at the simple reflections.
  SimpleActionExpansion out;
  out.coeff_e = x[static_cast<size_t>(g.identity())];
  std::vector<std::vector<RootPoly>> basis;
  for (int i = 1; i <= n; ++i) {
    RootPoly diff = x[static_cast<size_t>(g.simple(i))] - out.coeff_e;
    auto alpha = RootPoly::linear(g.simple_coordinates(g.simple_roots()[static_cast<size_t>(i - 1)]));
    auto q = diff.divide_linear(alpha);
    if (!q) return out;
    out.coeff_s.push_back(*q);
    basis.push_back(billey::full_schubert_class(g, g.simple(i)));
  }
  for (Elem u = 0; u < static_cast<Elem>(g.size()); ++u) {
    RootPoly val = out.coeff_e;
    for (int i = 0; i < n; ++i)
      val += out.coeff_s[static_cast<size_t>(i)] * basis[static_cast<size_t>(i)][static_cast<size_t>(u)];
    if (val != x[static_cast<size_t>(u)]) return out;
  }
  out.exact = true;
  return out;
}

}  // namespace springer
