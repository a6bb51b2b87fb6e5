#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coxeter.hpp"

namespace hessenberg {

using coxeter::Elem;
using coxeter::Vec;
using coxeter::WeylGroup;
using coxeter::WeylPtr;

// A Hessenberg space recorded by the negative roots it contains beyond the
// Borel subalgebra.
struct HessenbergSpace {
  WeylPtr group;
  std::vector<Vec> negative_roots;
  bool contains(const Vec& root) const;
};

// Validates M_H: negative roots only and closed under adding simple roots.
// Throws NotNegativeRoot or NotBracketClosed.
HessenbergSpace make_space(WeylPtr g, std::vector<Vec> negative_roots);
// Closure under adding any positive root; used to cross-check make_space.
bool is_closed_under_positive_roots(const WeylGroup& g, const std::vector<Vec>& negative_roots);

HessenbergSpace peterson_space(WeylPtr g);
HessenbergSpace full_space(WeylPtr g);
HessenbergSpace borel_space(WeylPtr g);
// Type A only: h is 1-based, nondecreasing, h(i) >= i, h(n) = n.
HessenbergSpace space_from_h(WeylPtr g, const std::vector<int>& h);
// "-a1,-a2,-a1-a2" or "-(a1+a2)".
HessenbergSpace space_from_string(WeylPtr g, const std::string& text);

// {w : w^{-1}(alpha_i) in M_H or positive, for every simple alpha_i}, by length then word.
std::vector<Elem> fixed_points(const HessenbergSpace& h);
std::vector<int> betti_numbers(const HessenbergSpace& h);
// Number of positive roots sent into M_H by w^{-1}.
int paving_dimension(const HessenbergSpace& h, Elem w);

std::vector<std::pair<std::vector<int>, Elem>> peterson_fixed_points(const WeylGroup& g);
Elem peterson_rolldown(const WeylGroup& g, std::vector<int> J);
int peterson_degree(const std::vector<int>& J);

std::vector<int> parse_partition(const std::string& text);
void check_partition(const std::vector<int>& lambda, int n);  // throws NotAPartition
// Type A group with rank n-1.
std::vector<Elem> springer_fixed_points(const WeylGroup& g, const std::vector<int>& lambda);

// Subregular case, 1 <= i <= n: w_i = s_{n-1} ... s_i, whose inverse has
// one-line 1 2 .. (i omitted) .. n i.
Elem subregular_fixed_point(const WeylGroup& g, int i);
Elem subregular_rolldown(const WeylGroup& g, int i);

void sort_by_length(const WeylGroup& g, std::vector<Elem>& elems);

}  // namespace hessenberg
