#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace algebra {

using Q = mpq_class;

// Dense polynomial in one variable t over Q; coeffs_[k] is the t^k coefficient.
class TPoly {
 public:
  TPoly() = default;
  TPoly(long c);
  explicit TPoly(const Q& c);
  explicit TPoly(std::vector<Q> coeffs);

  static TPoly t() { return monomial(Q(1), 1); }
  static TPoly monomial(const Q& c, int degree);
  // Accepts "3*t^2+1", "3t^2 + 1", "-t", "1/2*t", "0".
  static TPoly parse(const std::string& text);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const std::vector<Q>& coeffs() const { return coeffs_; }
  Q coeff(int k) const;
  Q leading() const { return coeffs_.empty() ? Q(0) : coeffs_.back(); }
  Q eval(const Q& x) const;
  bool is_homogeneous() const;  // at most one nonzero term
  int lowest_degree() const;    // -1 for zero

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const TPoly& o);
  TPoly& operator*=(const Q& c);
  TPoly operator-() const;

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(TPoly a, const TPoly& b) { return a *= b; }
  friend TPoly operator*(TPoly a, const Q& c) { return a *= c; }
  friend bool operator==(const TPoly& a, const TPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

  // Euclidean division; throws on a zero divisor.
  std::pair<TPoly, TPoly> divmod(const TPoly& d) const;
  TPoly monic() const;

  std::string str() const;

 private:
  void trim();
  std::vector<Q> coeffs_;
};

TPoly gcd(TPoly a, TPoly b);  // monic, gcd(0,0) = 0

// Element of Q(t), kept reduced with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(TPoly num) : num_(std::move(num)), den_(1) {}
  RationalFunction(TPoly num, TPoly den);

  bool is_zero() const { return num_.is_zero(); }
  const TPoly& num() const { return num_; }
  const TPoly& den() const { return den_; }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();
  TPoly num_, den_;
};

// Rank over Q(t) of a matrix of polynomials (rows are vectors).
int rank_over_fraction_field(const std::vector<std::vector<TPoly>>& rows);

}  // namespace algebra
