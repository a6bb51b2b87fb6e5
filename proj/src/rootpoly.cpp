#include "rootpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace algebra {

RootPoly RootPoly::constant(int nvars, const Q& c) {
  RootPoly p(nvars);
  p.add_term(Exponents(static_cast<size_t>(nvars), 0), c);
  return p;
}

RootPoly RootPoly::linear(const std::vector<Q>& coeffs) {
  RootPoly p(static_cast<int>(coeffs.size()));
  for (size_t i = 0; i < coeffs.size(); ++i) {
    Exponents e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

RootPoly RootPoly::linear(const std::vector<int>& coeffs) {
  std::vector<Q> q(coeffs.begin(), coeffs.end());
  return linear(q);
}

void RootPoly::add_term(const Exponents& e, const Q& c) {
  if (c == 0) return;
  if (!terms_.empty() && terms_.begin()->first.size() != e.size())
    pp::fail("MixedGroups", "polynomials over different root systems");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int RootPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool RootPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int k = std::accumulate(e.begin(), e.end(), 0);
    if (d >= 0 && k != d) return false;
    d = k;
  }
  return true;
}

bool RootPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

RootPoly& RootPoly::operator+=(const RootPoly& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

RootPoly& RootPoly::operator-=(const RootPoly& o) {
  nvars_ = std::max(nvars_, o.nvars_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

RootPoly& RootPoly::operator*=(const Q& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

RootPoly operator*(const RootPoly& a, const RootPoly& b) {
  RootPoly r(std::max(a.nvars_, b.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      if (ea.size() != eb.size()) pp::fail("MixedGroups", "polynomials over different root systems");
      Exponents e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

TPoly RootPoly::specialize() const {
  TPoly r;
  for (const auto& [e, c] : terms_) r += TPoly::monomial(c, std::accumulate(e.begin(), e.end(), 0));
  return r;
}

std::optional<RootPoly> RootPoly::divide_linear(const RootPoly& form) const {
  if (form.is_zero() || form.total_degree() != 1 || !form.is_homogeneous())
    pp::fail("NotLinear", "divisor is not a nonzero linear form");
  // Pivot on the last variable present in the form and eliminate it top-down.
  size_t k = 0;
  Q ak;
  for (const auto& [e, c] : form.terms_) {
    size_t idx = static_cast<size_t>(std::find(e.begin(), e.end(), 1) - e.begin());
    if (ak == 0 || idx > k) {
      k = idx;
      ak = c;
    }
  }
  if (nvars_ != form.nvars_ && !is_zero()) pp::fail("MixedGroups", "polynomials over different root systems");
  RootPoly rem = *this;
  RootPoly quot(std::max(nvars_, form.nvars_));
  while (!rem.is_zero()) {
    auto best = rem.terms_.begin();
    for (auto it = rem.terms_.begin(); it != rem.terms_.end(); ++it)
      if (it->first[k] > best->first[k]) best = it;
    if (best->first[k] == 0) return std::nullopt;
    Exponents e = best->first;
    e[k] -= 1;
    RootPoly term(quot.nvars_);
    term.add_term(e, best->second / ak);
    quot += term;
    rem -= term * form;
  }
  return quot;
}

std::string RootPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Exponents, Q>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    int dx = std::accumulate(x.first.begin(), x.first.end(), 0);
    int dy = std::accumulate(y.first.begin(), y.first.end(), 0);
    if (dx != dy) return dx > dy;
    return x.first > y.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c0] : v) {
    Q c = c0;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    if (c < 0) c = -c;
    first = false;
    std::vector<std::string> factors;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string f = "a" + std::to_string(i + 1);
      if (e[i] > 1) f += "^" + std::to_string(e[i]);
      factors.push_back(f);
    }
    if (factors.empty()) {
      out << c.get_str();
      continue;
    }
    if (c != 1) out << c.get_str() << "*";
    for (size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
  }
  return out.str();
}

}  // namespace algebra
