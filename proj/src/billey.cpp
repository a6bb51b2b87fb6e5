#include "billey.hpp"

#include <unordered_map>

#include "errors.hpp"

namespace billey {

RootPoly root_form(const WeylGroup& g, const coxeter::Vec& root) {
  return RootPoly::linear(g.simple_coordinates(root));
}

RootPoly restrict_along_word(const WeylGroup& g, Elem v, const coxeter::Word& word) {
  const int n = g.rank();
  const int lv = g.length(v);
  const int L = static_cast<int>(word.size());
  if (L < lv) return RootPoly(n);

  // r(j) = s_{b_1} ... s_{b_{j-1}} (alpha_{b_j})
  std::vector<RootPoly> r;
  Elem prefix = g.identity();
  for (int b : word) {
    r.push_back(root_form(g, g.act_vector(prefix, g.simple_roots()[static_cast<size_t>(b - 1)])));
    prefix = g.rmul(prefix, b);
  }

  const RootPoly one = RootPoly::constant(n, 1);
  std::unordered_map<uint64_t, RootPoly> memo;
  // f(j, p): sum over ways to finish a reduced subword for v from prefix p
  // using letters j..L-1.
  auto f = [&](auto&& self, int j, Elem p) -> RootPoly {
    const int need = lv - g.length(p);
    if (need == 0) return p == v ? one : RootPoly(n);
    if (need > L - j) return RootPoly(n);
    const uint64_t key = static_cast<uint64_t>(j) * g.size() + static_cast<uint64_t>(p);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    RootPoly total = self(self, j + 1, p);
    Elem q = g.rmul(p, word[static_cast<size_t>(j)]);
    if (g.length(q) == g.length(p) + 1 && g.length(g.mul(g.inverse(q), v)) == lv - g.length(q)) {
      RootPoly rest = self(self, j + 1, q);
      if (!rest.is_zero()) total += r[static_cast<size_t>(j)] * rest;
    }
    memo.emplace(key, total);
    return total;
  };
  return f(f, 0, g.identity());
}

RootPoly billey_restrict(const WeylGroup& g, Elem v, Elem w) {
  if (v < 0 || w < 0 || static_cast<size_t>(v) >= g.size() || static_cast<size_t>(w) >= g.size())
    pp::fail("MixedGroups", "element outside " + g.name());
  return restrict_along_word(g, v, g.reduced_word(w));
}

RestrictionClass schubert_class(const WeylGroup& g, Elem v, const std::vector<Elem>& fixed_points) {
  RestrictionClass c;
  c.support = fixed_points;
  c.degree = 2 * g.length(v);
  for (Elem w : fixed_points) c.values.push_back(billey_restrict(g, v, w).specialize());
  return c;
}

std::vector<RootPoly> full_schubert_class(const WeylGroup& g, Elem v) {
  std::vector<RootPoly> out;
  out.reserve(g.size());
  for (Elem w = 0; w < static_cast<Elem>(g.size()); ++w) out.push_back(billey_restrict(g, v, w));
  return out;
}

std::optional<GkmFailure> gkm_first_failure(const WeylGroup& g, const std::vector<RootPoly>& values) {
  if (values.size() != g.size()) pp::fail("PartialSupport", "class must be given on all of " + g.name());
  const auto& roots = g.positive_roots();
  for (Elem w = 0; w < static_cast<Elem>(g.size()); ++w) {
    for (size_t k = 0; k < roots.size(); ++k) {
      Elem tw = g.mul(g.reflections()[k], w);
      if (tw < w) continue;  // each edge once
      RootPoly diff = values[static_cast<size_t>(w)] - values[static_cast<size_t>(tw)];
      if (diff.is_zero()) continue;
      if (!diff.divisible_by(root_form(g, roots[k]))) return GkmFailure{w, tw, roots[k]};
    }
  }
  return std::nullopt;
}

}  // namespace billey
