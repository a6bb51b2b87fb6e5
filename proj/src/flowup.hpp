#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "poset.hpp"
#include "tpoly.hpp"

namespace flowup {

using algebra::TPoly;
using Vector = std::vector<TPoly>;  // one entry per index element
using Rows = std::vector<Vector>;

// A candidate basis: labelled restriction vectors over a shared index poset.
struct Family {
  std::shared_ptr<const poset::GradedPoset> index;
  std::vector<std::string> labels;
  Rows rows;
  std::vector<int> degrees;  // cohomological degree tag (2d)
};

std::vector<int> support(const Vector& x);

// Unique minimum of supp(x) whose filter holds the support. Throws ZeroVector.
std::optional<int> is_flowup(const poset::GradedPoset& p, const Vector& x);
bool is_poset_upper_triangular(const poset::GradedPoset& p, const Rows& rows);
// Rows k whose vector is not a flow-up with minimum intended[k].
std::vector<int> flowup_failures(const poset::GradedPoset& p, const Rows& rows, const std::vector<int>& intended);

// Each row gets the first position (in order) where it is nonzero; the set is
// triangular when those pivots exist and are distinct.
bool is_total_order_upper_triangular(const Rows& rows, const std::vector<int>& order);

struct OrderSearch {
  std::optional<std::vector<int>> order;  // a linear extension witnessing triangularity
  size_t nodes = 0;
  bool budget_hit = false;
};
OrderSearch find_triangular_order(const poset::GradedPoset& p, const Rows& rows, size_t budget = 100000);

int rank(const Rows& rows);  // over Q(t)
bool linearly_independent(const Rows& rows);
bool span_equal(const Rows& a, const Rows& b);

// Echelon form over Q[t] along the order: one row per column whose ideal is
// nonzero, with a monic pivot there and zeros on every earlier column.
Rows construct_flowup_basis(const Rows& generators, const std::vector<int>& order);
// Pivot column of each output row (first nonzero along the order).
std::vector<int> pivots(const Rows& rows, const std::vector<int>& order);

struct BasisReport {
  bool ok = false;
  bool independent = false;
  int rank = 0;
  std::vector<int> histogram;  // j -> number of candidates of degree 2j
  std::optional<std::vector<int>> triangular_order;
  std::vector<std::string> problems;
};

// (A) independence over Q(t), (B) exactly targets[j] candidates of degree 2j.
BasisReport verify_pinball_basis(const Family& f, const std::vector<int>& targets);

// f_map[k] is the element of X matched with index element k; deg_y[k] its
// degree. Needs deg_y = rank in X, the degree histogram equal to targets and a
// triangular order for the candidate rows. Throws NotInjective.
BasisReport verify_matching_basis(const Family& f, const poset::GradedPoset& x, const std::vector<int>& f_map,
                                  const std::vector<int>& deg_y, const std::vector<int>& targets);

}  // namespace flowup
