#include <doctest.h>

#include "errors.hpp"
#include "flowup.hpp"
#include "hessenberg.hpp"
#include "oracles.hpp"
#include "repro.hpp"

using algebra::TPoly;
using flowup::Rows;
using flowup::Vector;
using poset::GradedPoset;

namespace {

GradedPoset vee() {  // 0 < a, 0 < b
  return GradedPoset::build({{"0", 0}, {"a", 1}, {"b", 1}}, {{"a", "0"}, {"b", "0"}});
}

TPoly t() { return TPoly::t(); }

}  // namespace

TEST_SUITE("flowup") {
  TEST_CASE("flow-up detection") {
    auto p = vee();
    CHECK(flowup::is_flowup(p, {TPoly(1), t(), TPoly(0)}) == 0);
    CHECK(flowup::is_flowup(p, {TPoly(0), t(), TPoly(0)}) == 1);
    CHECK_FALSE(flowup::is_flowup(p, {TPoly(0), t(), t()}).has_value());
    CHECK_THROWS_AS(flowup::is_flowup(p, {TPoly(0), TPoly(0), TPoly(0)}), pp::Error);
    Rows ut = {{TPoly(1), TPoly(1), TPoly(1)}, {TPoly(0), t(), TPoly(0)}, {TPoly(0), TPoly(0), t()}};
    CHECK(flowup::is_poset_upper_triangular(p, ut));
    CHECK(flowup::flowup_failures(p, ut, {0, 1, 2}).empty());
    CHECK(flowup::flowup_failures(p, ut, {0, 2, 1}) == std::vector<int>({1, 2}));
    CHECK(flowup::is_total_order_upper_triangular(ut, {0, 1, 2}));
    CHECK_FALSE(flowup::is_total_order_upper_triangular(ut, {1, 0, 2}));
  }

  TEST_CASE("triangular order search") {
    auto p = vee();
    // Row 1 is nonzero at a and b; row 2 only at b. Order 0, b, a fails; 0, a, b works.
    Rows rows = {{TPoly(1), TPoly(0), TPoly(0)}, {TPoly(0), t(), t()}, {TPoly(0), TPoly(0), t()}};
    auto found = flowup::find_triangular_order(p, rows);
    REQUIRE(found.order.has_value());
    CHECK(flowup::is_total_order_upper_triangular(rows, *found.order));
    CHECK(p.is_linear_extension(*found.order));
    Rows clash = {{TPoly(0), t(), t()}, {TPoly(0), t(), t() * t()}};
    CHECK_FALSE(flowup::find_triangular_order(p, clash).order.has_value());
  }

  TEST_CASE("construction keeps the span and is triangular") {
    Rows gens = {{t(), t(), t()}, {TPoly(1), t(), TPoly(0)}, {TPoly(2) * t(), t() * t() + t(), t()}};
    std::vector<int> order = {0, 1, 2};
    auto out = flowup::construct_flowup_basis(gens, order);
    CHECK(flowup::span_equal(out, gens));
    CHECK(flowup::rank(out) == 2);
    CHECK(flowup::is_total_order_upper_triangular(out, order));
    for (size_t k = 0; k < out.size(); ++k) {
      int piv = flowup::pivots(out, order)[k];
      CHECK(out[k][static_cast<size_t>(piv)].leading() == 1);
    }
  }

  TEST_CASE("basis certificates") {
    auto p = std::make_shared<const GradedPoset>(vee());
    flowup::Family f{p, {"x", "y", "z"},
                     {{TPoly(1), TPoly(1), TPoly(1)}, {TPoly(0), t(), TPoly(0)}, {TPoly(0), TPoly(0), t()}},
                     {0, 2, 2}};
    auto rep = flowup::verify_pinball_basis(f, {1, 2});
    CHECK(rep.ok);
    CHECK(rep.rank == 3);
    CHECK_FALSE(flowup::verify_pinball_basis(f, {1, 1, 1}).ok);
    f.rows[2] = f.rows[1];
    auto bad = flowup::verify_pinball_basis(f, {1, 2});
    CHECK_FALSE(bad.ok);
    CHECK_FALSE(bad.independent);
  }

  TEST_CASE("rolldown family of the Peterson variety in A2") {
    auto g = coxeter::WeylGroup::make(coxeter::LieType::A, 2);
    std::vector<int> ws, vs;
    for (const auto& [J, w] : hessenberg::peterson_fixed_points(*g)) {
      ws.push_back(w);
      vs.push_back(hessenberg::peterson_rolldown(*g, J));
    }
    auto fam = repro::rolldown_family(*g, ws, vs);
    CHECK(fam.degrees == std::vector<int>({0, 2, 2, 4}));
    CHECK(flowup::verify_pinball_basis(fam, {1, 2, 1}).ok);
    CHECK(flowup::is_poset_upper_triangular(*fam.index, fam.rows));
  }
}
