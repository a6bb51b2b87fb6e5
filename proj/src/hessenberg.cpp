#include "hessenberg.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

#include "errors.hpp"

namespace hessenberg {

namespace {

Vec negate(Vec v) {
  for (auto& x : v) x = -x;
  return v;
}

Vec plus(Vec a, const Vec& b) {
  for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

std::string root_name(const WeylGroup& g, const Vec& r) {
  auto c = g.simple_coordinates(r);
  std::string out;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    out += c[i] < 0 ? "-" : (out.empty() ? "" : "+");
    if (std::abs(c[i]) != 1) out += std::to_string(std::abs(c[i]));
    out += "a" + std::to_string(i + 1);
  }
  return out;
}

}  // namespace

bool HessenbergSpace::contains(const Vec& root) const {
  return std::find(negative_roots.begin(), negative_roots.end(), root) != negative_roots.end();
}

HessenbergSpace make_space(WeylPtr g, std::vector<Vec> roots) {
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  for (const auto& r : roots)
    if (static_cast<int>(r.size()) != g->dim() || !g->is_positive_root(negate(r)))
      pp::fail("NotNegativeRoot", "M_H entry is not a negative root of " + g->name());
  for (const auto& r : roots) {
    for (const auto& beta : g->simple_roots()) {
      Vec s = plus(r, beta);
      if (g->is_positive_root(negate(s)) && std::find(roots.begin(), roots.end(), s) == roots.end())
        pp::fail("NotBracketClosed", "M_H contains " + root_name(*g, r) + " but not " + root_name(*g, s));
    }
  }
  return {std::move(g), std::move(roots)};
}

bool is_closed_under_positive_roots(const WeylGroup& g, const std::vector<Vec>& roots) {
  for (const auto& r : roots)
    for (const auto& beta : g.positive_roots()) {
      Vec s = plus(r, beta);
      if (g.is_positive_root(negate(s)) && std::find(roots.begin(), roots.end(), s) == roots.end()) return false;
    }
  return true;
}

HessenbergSpace peterson_space(WeylPtr g) {
  std::vector<Vec> roots;
  for (const auto& a : g->simple_roots()) roots.push_back(negate(a));
  return make_space(std::move(g), std::move(roots));
}

HessenbergSpace full_space(WeylPtr g) {
  std::vector<Vec> roots;
  for (const auto& a : g->positive_roots()) roots.push_back(negate(a));
  return make_space(std::move(g), std::move(roots));
}

HessenbergSpace borel_space(WeylPtr g) { return make_space(std::move(g), {}); }

HessenbergSpace space_from_h(WeylPtr g, const std::vector<int>& h) {
  if (g->type() != coxeter::LieType::A) pp::fail("UnsupportedType", "Hessenberg functions are type A only");
  const int n = g->dim();
  if (static_cast<int>(h.size()) != n)
    pp::fail("InvalidHessenbergFunction", "h needs " + std::to_string(n) + " entries");
  for (int i = 1; i <= n; ++i) {
    int hi = h[static_cast<size_t>(i - 1)];
    if (hi < i || hi > n || (i > 1 && hi < h[static_cast<size_t>(i - 2)]))
      pp::fail("InvalidHessenbergFunction", "h must be nondecreasing with i <= h(i) <= n");
  }
  std::vector<Vec> roots;
  for (int j = 1; j <= n; ++j)
    for (int i = j + 1; i <= h[static_cast<size_t>(j - 1)]; ++i) {
      Vec r(static_cast<size_t>(n), 0);
      r[static_cast<size_t>(i - 1)] = 1;
      r[static_cast<size_t>(j - 1)] = -1;
      roots.push_back(r);
    }
  return make_space(std::move(g), std::move(roots));
}

HessenbergSpace space_from_string(WeylPtr g, const std::string& text) {
  std::vector<Vec> roots;
  std::stringstream ss(text);
  std::string item;
  auto bad = [&](const std::string& it) { pp::fail("ParseError", "cannot parse root '" + it + "'"); };
  while (std::getline(ss, item, ',')) {
    std::string s;
    for (char ch : item)
      if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) continue;
    int outer = 1;
    if (s.size() > 3 && s[0] == '-' && s[1] == '(' && s.back() == ')') {
      outer = -1;
      s = s.substr(2, s.size() - 3);
    }
    std::vector<int> c(static_cast<size_t>(g->rank()), 0);
    size_t i = 0;
    while (i < s.size()) {
      int sign = 1;
      if (s[i] == '+' || s[i] == '-') {
        sign = s[i] == '-' ? -1 : 1;
        ++i;
      }
      int coef = 1;
      size_t st = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i > st) coef = std::stoi(s.substr(st, i - st));
      if (i < s.size() && s[i] == '*') ++i;
      if (i >= s.size() || s[i] != 'a') bad(item);
      ++i;
      st = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == st) bad(item);
      int k = std::stoi(s.substr(st, i - st));
      if (k < 1 || k > g->rank()) bad(item);
      c[static_cast<size_t>(k - 1)] += outer * sign * coef;
    }
    roots.push_back(g->from_simple_coordinates(c));
  }
  return make_space(std::move(g), std::move(roots));
}

void sort_by_length(const WeylGroup& g, std::vector<Elem>& elems) {
  std::vector<std::pair<std::pair<int, std::string>, Elem>> keyed;
  for (Elem w : elems) keyed.push_back({{g.length(w), g.word_string(w)}, w});
  std::sort(keyed.begin(), keyed.end());
  elems.clear();
  for (auto& k : keyed) elems.push_back(k.second);
}

std::vector<Elem> fixed_points(const HessenbergSpace& h) {
  const auto& g = *h.group;
  std::vector<Elem> out;
  for (Elem w = 0; w < static_cast<Elem>(g.size()); ++w) {
    Elem winv = g.inverse(w);
    bool ok = true;
    for (const auto& a : g.simple_roots()) {
      Vec img = g.act_vector(winv, a);
      if (!g.is_positive_root(img) && !h.contains(img)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(w);
  }
  sort_by_length(g, out);
  return out;
}

int paving_dimension(const HessenbergSpace& h, Elem w) {
  const auto& g = *h.group;
  Elem winv = g.inverse(w);
  int count = 0;
  for (const auto& a : g.positive_roots())
    if (h.contains(g.act_vector(winv, a))) ++count;
  return count;
}

std::vector<int> betti_numbers(const HessenbergSpace& h) {
  std::vector<int> b;
  for (Elem w : fixed_points(h)) {
    int d = paving_dimension(h, w);
    if (static_cast<int>(b.size()) <= d) b.resize(static_cast<size_t>(d) + 1, 0);
    ++b[static_cast<size_t>(d)];
  }
  return b;
}

std::vector<std::pair<std::vector<int>, Elem>> peterson_fixed_points(const WeylGroup& g) {
  std::vector<std::pair<std::vector<int>, Elem>> out;
  const int n = g.rank();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> J;
    for (int i = 1; i <= n; ++i)
      if (mask & (1u << (i - 1))) J.push_back(i);
    out.emplace_back(J, g.max_parabolic(J));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return out;
}

Elem peterson_rolldown(const WeylGroup& g, std::vector<int> J) {
  std::sort(J.begin(), J.end());
  return g.from_word(J);
}

int peterson_degree(const std::vector<int>& J) { return static_cast<int>(J.size()); }

std::vector<int> parse_partition(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      pp::fail("NotAPartition", "cannot parse partition '" + text + "'");
    }
  }
  return out;
}

void check_partition(const std::vector<int>& lambda, int n) {
  int sum = 0;
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 1 || (i > 0 && lambda[i] > lambda[i - 1]))
      pp::fail("NotAPartition", "parts must be positive and weakly decreasing");
    sum += lambda[i];
  }
  if (sum != n) pp::fail("NotAPartition", "parts sum to " + std::to_string(sum) + ", expected " + std::to_string(n));
}

std::vector<Elem> springer_fixed_points(const WeylGroup& g, const std::vector<int>& lambda) {
  if (g.type() != coxeter::LieType::A) pp::fail("UnsupportedType", "Springer fixed points are type A only");
  const int n = g.dim();
  check_partition(lambda, n);
  std::vector<char> allowed(static_cast<size_t>(n) + 1, 0);
  int s = 0;
  for (int part : lambda) {
    s += part;
    allowed[static_cast<size_t>(s)] = 1;
  }
  std::vector<Elem> out;
  for (Elem w = 0; w < static_cast<Elem>(g.size()); ++w) {
    const auto& u = g.one_line(g.inverse(w));
    bool ok = true;
    for (int k = 1; k < n && ok; ++k)
      if (u[static_cast<size_t>(k - 1)] > u[static_cast<size_t>(k)] && !allowed[static_cast<size_t>(k)]) ok = false;
    if (ok) out.push_back(w);
  }
  sort_by_length(g, out);
  return out;
}

Elem subregular_fixed_point(const WeylGroup& g, int i) {
  const int n = g.dim();
  if (g.type() != coxeter::LieType::A || i < 1 || i > n) pp::fail("InvalidIndex", "subregular index out of range");
  std::vector<int> ol;
  for (int k = 1; k <= n; ++k)
    if (k != i) ol.push_back(k);
  ol.push_back(i);
  // The listed word is the one-line form of w_i^{-1}; w_i = s_{n-1} ... s_i.
  return g.inverse(*g.find(ol));
}

Elem subregular_rolldown(const WeylGroup& g, int i) {
  const int n = g.dim();
  if (g.type() != coxeter::LieType::A || i < 1 || i > n) pp::fail("InvalidIndex", "subregular index out of range");
  return i == n ? g.identity() : g.simple(i);
}

}  // namespace hessenberg
