#include <doctest.h>

#include <set>

#include "errors.hpp"
#include "hessenberg.hpp"
#include "oracles.hpp"

using coxeter::LieType;
using coxeter::WeylGroup;

TEST_SUITE("hessenberg") {
  TEST_CASE("Peterson fixed points are the parabolic longest elements") {
    for (auto [type, rank] : {std::pair{LieType::A, 3}, std::pair{LieType::B, 3}, std::pair{LieType::D, 4}}) {
      auto g = WeylGroup::make(type, rank);
      auto fp = hessenberg::fixed_points(hessenberg::peterson_space(g));
      std::set<coxeter::Elem> got(fp.begin(), fp.end()), want;
      for (const auto& [J, w] : hessenberg::peterson_fixed_points(*g)) {
        want.insert(w);
        CHECK(w == g->max_parabolic(J));
        CHECK(g->length(hessenberg::peterson_rolldown(*g, J)) == static_cast<int>(J.size()));
      }
      CHECK(got == want);
      CHECK(got.size() == (1u << rank));
    }
  }

  TEST_CASE("extreme spaces") {
    auto g = WeylGroup::make(LieType::A, 3);
    CHECK(hessenberg::fixed_points(hessenberg::full_space(g)).size() == 24);
    auto borel = hessenberg::fixed_points(hessenberg::borel_space(g));
    REQUIRE(borel.size() == 1);
    CHECK(borel[0] == g->identity());
    // Full space: Betti numbers are the Mahonian numbers.
    CHECK(hessenberg::betti_numbers(hessenberg::full_space(g)) == std::vector<int>({1, 3, 5, 6, 5, 3, 1}));
  }

  TEST_CASE("Springer fixed points") {
    auto g = WeylGroup::make(LieType::A, 3);
    CHECK(hessenberg::springer_fixed_points(*g, {2, 2}).size() == 6);
    CHECK(hessenberg::springer_fixed_points(*g, {3, 1}).size() == 4);
    CHECK(hessenberg::springer_fixed_points(*g, {2, 1, 1}).size() == 12);
    CHECK(hessenberg::springer_fixed_points(*g, {1, 1, 1, 1}).size() == 24);
    CHECK(hessenberg::springer_fixed_points(*g, {4}).size() == 1);
    CHECK_THROWS(hessenberg::check_partition({1, 2}, 3));
    CHECK_THROWS(hessenberg::check_partition({2, 1}, 4));
    CHECK(hessenberg::parse_partition("2,1,1") == std::vector<int>({2, 1, 1}));
  }

  TEST_CASE("subregular fixed points") {
    auto g = WeylGroup::make(LieType::A, 3);
    auto fp = hessenberg::springer_fixed_points(*g, {3, 1});
    std::set<coxeter::Elem> sub;
    for (int i = 1; i <= 4; ++i) sub.insert(hessenberg::subregular_fixed_point(*g, i));
    CHECK(std::set<coxeter::Elem>(fp.begin(), fp.end()) == sub);
    CHECK(hessenberg::subregular_fixed_point(*g, 4) == g->identity());
    CHECK(hessenberg::subregular_fixed_point(*g, 1) == g->parse("s3.s2.s1"));
  }

  TEST_CASE("spaces from h and from text") {
    auto g = WeylGroup::make(LieType::A, 3);
    auto h = hessenberg::space_from_h(g, {3, 3, 4, 4});
    CHECK(hessenberg::fixed_points(h).size() == 12);
    CHECK(hessenberg::betti_numbers(h) == std::vector<int>({1, 3, 4, 3, 1}));
    auto pet = hessenberg::space_from_string(g, "-a1,-a2,-a3");
    CHECK(hessenberg::fixed_points(pet) == hessenberg::fixed_points(hessenberg::peterson_space(g)));
    CHECK_THROWS(hessenberg::space_from_string(g, "-a1-a2"));  // not closed
    CHECK_THROWS(hessenberg::space_from_string(g, "a1"));
    CHECK_THROWS(hessenberg::space_from_h(g, {2, 1, 4, 4}));
    CHECK(hessenberg::is_closed_under_positive_roots(*g, h.negative_roots));
  }

  TEST_CASE("paving dimensions sum to the Betti vector") {
    auto g = WeylGroup::make(LieType::C, 3);
    auto space = hessenberg::peterson_space(g);
    std::vector<int> hist(4, 0);
    for (auto w : hessenberg::fixed_points(space)) ++hist[static_cast<size_t>(hessenberg::paving_dimension(space, w))];
    CHECK(hist == hessenberg::betti_numbers(space));
    CHECK(hist == std::vector<int>({1, 3, 3, 1}));
  }
}
