#include "tpoly.hpp"

#include <cctype>
#include <sstream>

#include "errors.hpp"

namespace algebra {

TPoly::TPoly(long c) : coeffs_{Q(c)} { trim(); }
TPoly::TPoly(const Q& c) : coeffs_{c} { trim(); }
TPoly::TPoly(std::vector<Q> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

TPoly TPoly::monomial(const Q& c, int degree) {
  std::vector<Q> v(static_cast<size_t>(degree) + 1, Q(0));
  v.back() = c;
  return TPoly(std::move(v));
}

void TPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Q TPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Q(0);
  return coeffs_[static_cast<size_t>(k)];
}

Q TPoly::eval(const Q& x) const {
  Q acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool TPoly::is_homogeneous() const {
  int nonzero = 0;
  for (const auto& c : coeffs_)
    if (c != 0) ++nonzero;
  return nonzero <= 1;
}

int TPoly::lowest_degree() const {
  for (size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return static_cast<int>(k);
  return -1;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Q(0));
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Q(0));
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

TPoly& TPoly::operator*=(const TPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Q> out(coeffs_.size() + o.coeffs_.size() - 1, Q(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

TPoly& TPoly::operator*=(const Q& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::pair<TPoly, TPoly> TPoly::divmod(const TPoly& d) const {
  if (d.is_zero()) pp::fail("DivisionByZero", "polynomial division by zero");
  TPoly q, r = *this;
  const Q lead = d.leading();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    TPoly term = monomial(r.leading() / lead, r.degree() - d.degree());
    q += term;
    r -= term * d;
  }
  return {q, r};
}

TPoly TPoly::monic() const {
  if (is_zero()) return *this;
  TPoly r = *this;
  r *= Q(1) / leading();
  return r;
}

std::string TPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Q c = coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    if (c < 0) {
      out << "-";
      c = -c;
    } else if (!first) {
      out << "+";
    }
    first = false;
    if (k == 0) {
      out << c.get_str();
      continue;
    }
    if (c != 1) out << c.get_str() << "*";
    out << "t";
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

TPoly TPoly::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) pp::fail("ParseError", "empty polynomial");
  TPoly result;
  size_t i = 0;
  auto bad = [&]() { pp::fail("ParseError", "cannot parse polynomial '" + text + "'"); };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (i != 0) {
      bad();
    }
    Q coef(1);
    bool have_coef = false;
    size_t start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    if (i > start) {
      try {
        coef = Q(s.substr(start, i - start));
        coef.canonicalize();
      } catch (const std::invalid_argument&) {
        bad();
      }
      have_coef = true;
    }
    int power = 0;
    if (i < s.size() && s[i] == '*') {
      if (!have_coef) bad();
      ++i;
      if (i >= s.size() || s[i] != 't') bad();
    }
    if (i < s.size() && s[i] == 't') {
      ++i;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t ps = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == ps) bad();
        power = std::stoi(s.substr(ps, i - ps));
      }
    } else if (!have_coef) {
      bad();
    }
    result += monomial(coef * sign, power);
  }
  return result;
}

TPoly gcd(TPoly a, TPoly b) {
  while (!b.is_zero()) {
    TPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalFunction::RationalFunction(TPoly num, TPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) pp::fail("DivisionByZero", "rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = TPoly(1);
    return;
  }
  TPoly g = gcd(num_, den_);
  num_ = num_.divmod(g).first;
  den_ = den_.divmod(g).first;
  Q lead = den_.leading();
  num_ *= Q(1) / lead;
  den_ *= Q(1) / lead;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}
RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}
RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return {num_ * o.num_, den_ * o.den_};
}
RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) pp::fail("DivisionByZero", "division by zero rational function");
  return {num_ * o.den_, den_ * o.num_};
}

// Fraction-free elimination: every division by the previous pivot is exact,
// so entries stay polynomials of bounded degree.
int rank_over_fraction_field(const std::vector<std::vector<TPoly>>& rows) {
  auto m = rows;
  if (m.empty()) return 0;
  const size_t cols = m.front().size();
  int rank = 0;
  TPoly prev(1);
  for (size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    const auto top = static_cast<size_t>(rank);
    size_t piv = top;
    while (piv < m.size() && m[piv][c].is_zero()) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[top]);
    for (size_t r = top + 1; r < m.size(); ++r) {
      for (size_t k = c + 1; k < cols; ++k) {
        TPoly x = m[r][k] * m[top][c] - m[r][c] * m[top][k];
        m[r][k] = x.divmod(prev).first;
      }
      m[r][c] = TPoly(0);
    }
    prev = m[top][c];
    ++rank;
  }
  return rank;
}

}  // namespace algebra
