#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "oracles.hpp"
#include "rootpoly.hpp"
#include "tpoly.hpp"

using algebra::Q;
using algebra::RootPoly;
using algebra::TPoly;

TEST_SUITE("algebra") {
  TEST_CASE("tpoly arithmetic and printing") {
    TPoly t = TPoly::t();
    TPoly p = t * t * Q(3) + TPoly(1);
    CHECK(p.str() == "3*t^2+1");
    CHECK(p.degree() == 2);
    CHECK(p.eval(Q(2)) == 13);
    CHECK((p - p).is_zero());
    CHECK(TPoly(0).is_zero());
    CHECK(TPoly::parse("3*t^2+1") == p);
    CHECK(TPoly::parse("3t^2 + 1") == p);
    CHECK(TPoly::parse("-t") == -t);
    CHECK(TPoly::parse("1/2*t").coeff(1) == Q(1, 2));
    CHECK(TPoly::parse(p.str()) == p);
  }

  TEST_CASE("tpoly division and gcd") {
    TPoly t = TPoly::t();
    TPoly a = (t + TPoly(1)) * (t - TPoly(2));
    auto [q, r] = a.divmod(t + TPoly(1));
    CHECK(q == t - TPoly(2));
    CHECK(r.is_zero());
    CHECK(algebra::gcd(a, (t + TPoly(1)) * t) == t + TPoly(1));
    CHECK(algebra::gcd(TPoly(0), TPoly(0)).is_zero());
    CHECK_THROWS(a.divmod(TPoly(0)));
  }

  TEST_CASE("rank over Q(t)") {
    TPoly t = TPoly::t();
    CHECK(algebra::rank_over_fraction_field({{TPoly(1), t}, {t, t * t}}) == 1);
    CHECK(algebra::rank_over_fraction_field({{TPoly(1), t}, {t, TPoly(1)}}) == 2);
    CHECK(algebra::rank_over_fraction_field({}) == 0);
  }

  TEST_CASE("rank agrees with evaluation on random low-rank matrices") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-2, 2), dim(1, 6);
    auto poly = [&] { return TPoly(std::vector<Q>{coef(rng), coef(rng), coef(rng)}); };
    for (int trial = 0; trial < 60; ++trial) {
      size_t rows = static_cast<size_t>(dim(rng)), cols = static_cast<size_t>(dim(rng)), inner = static_cast<size_t>(dim(rng));
      // Product of a rows x inner and an inner x cols matrix, so rank <= inner.
      std::vector<std::vector<TPoly>> a(rows, std::vector<TPoly>(inner)), b(inner, std::vector<TPoly>(cols)), m(rows, std::vector<TPoly>(cols));
      for (auto& r : a) for (auto& x : r) x = poly();
      for (auto& r : b) for (auto& x : r) x = poly();
      std::vector<std::vector<std::vector<Q>>> coeffs;
      for (size_t i = 0; i < rows; ++i) {
        std::vector<std::vector<Q>> row;
        for (size_t j = 0; j < cols; ++j) {
          for (size_t k = 0; k < inner; ++k) m[i][j] += a[i][k] * b[k][j];
          row.push_back(m[i][j].coeffs());
        }
        coeffs.push_back(row);
      }
      CHECK(algebra::rank_over_fraction_field(m) == oracle::generic_rank(coeffs));
    }
  }

  TEST_CASE("rootpoly products, rendering and specialization") {
    RootPoly a1 = RootPoly::linear(std::vector<int>{1, 0}), a2 = RootPoly::linear(std::vector<int>{0, 1});
    RootPoly p = (a1 + a2) * a2;
    CHECK(p.str() == "a1*a2 + a2^2");
    CHECK(p.total_degree() == 2);
    CHECK(p.is_homogeneous());
    CHECK(p.has_nonnegative_coefficients());
    CHECK(p.specialize() == TPoly::monomial(Q(2), 2));
    CHECK_FALSE((a1 - a2).has_nonnegative_coefficients());
    CHECK(RootPoly::constant(2, 0).is_zero());
  }

  TEST_CASE("rootpoly divides by linear forms") {
    RootPoly a1 = RootPoly::linear(std::vector<int>{1, 0}), a2 = RootPoly::linear(std::vector<int>{0, 1});
    RootPoly p = (a1 + a2) * a1 * a2;
    auto q = p.divide_linear(a1 + a2);
    REQUIRE(q.has_value());
    CHECK(*q == a1 * a2);
    CHECK_FALSE((a1 * a1 + a2).divisible_by(a1));
    CHECK(RootPoly(2).divisible_by(a1));
  }
}
