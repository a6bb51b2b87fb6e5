#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tpoly.hpp"

namespace algebra {

using Exponents = std::vector<int>;

// Sparse polynomial in the simple roots a1..an over Q.
class RootPoly {
 public:
  RootPoly() = default;
  explicit RootPoly(int nvars) : nvars_(nvars) {}

  static RootPoly constant(int nvars, const Q& c);
  // Linear form sum_i coeffs[i] * a_{i+1}.
  static RootPoly linear(const std::vector<Q>& coeffs);
  static RootPoly linear(const std::vector<int>& coeffs);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Q>& terms() const { return terms_; }
  int total_degree() const;  // -1 for zero
  bool is_homogeneous() const;
  bool has_nonnegative_coefficients() const;

  RootPoly& operator+=(const RootPoly& o);
  RootPoly& operator-=(const RootPoly& o);
  RootPoly& operator*=(const Q& c);
  friend RootPoly operator+(RootPoly a, const RootPoly& b) { return a += b; }
  friend RootPoly operator-(RootPoly a, const RootPoly& b) { return a -= b; }
  friend RootPoly operator*(const RootPoly& a, const RootPoly& b);
  friend RootPoly operator*(RootPoly a, const Q& c) { return a *= c; }
  friend bool operator==(const RootPoly& a, const RootPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const RootPoly& a, const RootPoly& b) { return !(a == b); }

  // a_i -> t for every i.
  TPoly specialize() const;

  // Exact quotient by a nonzero linear form, or nullopt when it does not divide.
  std::optional<RootPoly> divide_linear(const RootPoly& form) const;
  bool divisible_by(const RootPoly& form) const { return divide_linear(form).has_value(); }

  // Graded reverse-lex free rendering: higher total degree first, then
  // lexicographically larger exponent vectors; e.g. "2*a1*a2 + a2^2".
  std::string str() const;

 private:
  void add_term(const Exponents& e, const Q& c);
  int nvars_ = 0;
  std::map<Exponents, Q> terms_;
};

}  // namespace algebra
