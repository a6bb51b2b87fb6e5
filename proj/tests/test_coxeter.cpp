#include <doctest.h>

#include "coxeter.hpp"
#include "errors.hpp"
#include "oracles.hpp"

using coxeter::LieType;
using coxeter::WeylGroup;

namespace {

struct Case {
  LieType type;
  char letter;
  int rank;
  size_t order;
};

const Case kCases[] = {{LieType::A, 'A', 1, 2},  {LieType::A, 'A', 3, 24}, {LieType::B, 'B', 2, 8},
                       {LieType::B, 'B', 3, 48}, {LieType::C, 'C', 3, 48}, {LieType::D, 'D', 4, 192}};

}  // namespace

TEST_SUITE("coxeter") {
  TEST_CASE("group orders match brute force") {
    for (const auto& c : kCases) {
      auto g = WeylGroup::make(c.type, c.rank);
      auto og = oracle::make_group(c.letter, c.rank);
      CHECK(g->size() == c.order);
      CHECK(og.elems.size() == c.order);
      CHECK(WeylGroup::order_of(c.type, c.rank) == c.order);
      for (coxeter::Elem w = 0; w < static_cast<int>(g->size()); ++w) {
        int ow = og.index.at(g->one_line(w));
        CHECK(g->length(w) == og.length(ow));
      }
    }
  }

  TEST_CASE("bruhat order agrees with the subword property") {
    for (const auto& c : kCases) {
      if (c.order > 48) continue;
      auto g = WeylGroup::make(c.type, c.rank);
      auto og = oracle::make_group(c.letter, c.rank);
      for (coxeter::Elem u = 0; u < static_cast<int>(g->size()); ++u)
        for (coxeter::Elem w = 0; w < static_cast<int>(g->size()); ++w)
          REQUIRE(g->bruhat_leq(u, w) == og.bruhat_leq(og.index.at(g->one_line(u)), og.index.at(g->one_line(w))));
    }
  }

  TEST_CASE("root systems are closed under the group action") {
    for (const auto& c : kCases) {
      auto g = WeylGroup::make(c.type, c.rank);
      size_t npos = g->positive_roots().size();
      // |Phi+| = length of the longest element.
      int longest = 0;
      for (coxeter::Elem w = 0; w < static_cast<int>(g->size()); ++w) longest = std::max(longest, g->length(w));
      CHECK(static_cast<int>(npos) == longest);
      for (coxeter::Elem w = 0; w < static_cast<int>(g->size()); ++w)
        for (const auto& a : g->simple_roots()) CHECK(g->is_root(g->act(w, a)));
      for (const auto& a : g->positive_roots()) {
        auto back = g->from_simple_coordinates(g->simple_coordinates(a));
        CHECK(back == a);
      }
    }
  }

  TEST_CASE("conventions: right multiplication acts on positions") {
    auto g = WeylGroup::make(LieType::A, 3);
    auto w = g->parse("s1.s2");
    CHECK(g->one_line_string(w) == "[2,3,1,4]");
    CHECK(g->word_string(g->parse("[2,3,1,4]")) == "s1.s2");
    CHECK(g->parse("s1.s1") == g->identity());
    CHECK(g->word_string(g->identity()) == "e");
    auto b = WeylGroup::make(LieType::B, 2);
    CHECK(b->one_line_string(b->simple(2)) == "[1,-2]");
    auto d = WeylGroup::make(LieType::D, 4);
    CHECK(d->one_line_string(d->simple(4)) == "[1,2,-4,-3]");
    CHECK_THROWS(g->parse("s7"));
    CHECK_THROWS(coxeter::parse_type("E"));
  }

  TEST_CASE("reduced words and parabolic longest elements") {
    auto g = WeylGroup::make(LieType::A, 3);
    auto w0 = g->max_parabolic({1, 2, 3});
    CHECK(g->length(w0) == 6);
    CHECK(g->all_reduced_words(w0).size() == 16);
    CHECK(g->length(g->max_parabolic({1, 3})) == 2);
    for (const auto& word : g->all_reduced_words(g->parse("s2.s1.s3.s2"))) CHECK(g->from_word(word) == g->parse("s2.s1.s3.s2"));
    for (coxeter::Elem w = 0; w < static_cast<int>(g->size()); ++w) {
      CHECK(g->mul(w, g->inverse(w)) == g->identity());
      CHECK(g->from_word(g->reduced_word(w)) == w);
    }
  }

  TEST_CASE("bruhat poset uses group indices") {
    auto g = WeylGroup::make(LieType::B, 2);
    auto p = g->to_poset();
    CHECK(p.size() == g->size());
    for (coxeter::Elem w = 0; w < static_cast<int>(g->size()); ++w) {
      CHECK(p.id(w) == g->word_string(w));
      CHECK(p.rank(w) == g->length(w));
    }
  }
}
